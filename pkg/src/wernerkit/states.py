"""Exact singlet-product states, cyclic-shift eigenstates, and polygon mixtures.

Exact states keep integer amplitudes together with a global factor
(sqrt2)^(-s); the polygon density matrices are built in complex floats
because their entries involve roots of unity.  Basis kets are indexed by
the integer value of their bit string with position 1 as the most
significant bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bitstrings import BitString, aperiodic_strings, count_aperiodic, popcount_array
from .chord_diagrams import ChordDiagram

NORMALIZATION_TOL = 1e-12

MAX_POLYGON_QUBITS = 10


@dataclass(frozen=True)
class InvarianceReport:
    """Residuals of the two collective-Pauli invariance conditions.

    Exact inputs give exact residuals (int or Fraction, with any global
    positive scale factored out); float inputs give float residuals.
    Both are max-abs over the residual vector or matrix.
    """

    z_residual: object
    x_residual: object

    def max_residual(self):
        return max(self.z_residual, self.x_residual)

    def is_invariant(self, tol: float = 0.0) -> bool:
        return self.z_residual <= tol and self.x_residual <= tol


@dataclass(frozen=True, eq=False)
class ScaledIntState:
    """Integer-amplitude pure state with value amplitudes * (sqrt2)^(-scale)."""

    qubits: int
    amplitudes: np.ndarray
    scale: int

    def __post_init__(self) -> None:
        if self.qubits < 1:
            raise ValueError(f"need at least one qubit, got {self.qubits}")
        if self.amplitudes.shape != (1 << self.qubits,):
            raise ValueError(
                f"amplitude vector must have length {1 << self.qubits}"
            )

    @property
    def dim(self) -> int:
        return 1 << self.qubits

    def scaled_by_sqrt2_pow(self, k: int) -> "ScaledIntState":
        """The state multiplied by (sqrt2)^k, still exact."""
        return ScaledIntState(self.qubits, self.amplitudes, self.scale - k)

    def nonzero_items(self) -> list[tuple[int, int]]:
        """(basis index, integer amplitude) pairs, index ascending."""
        idx = np.nonzero(self.amplitudes)[0]
        return [(int(i), int(self.amplitudes[i])) for i in idx]

    def norm_squared(self) -> Fraction:
        total = int(np.dot(self.amplitudes, self.amplitudes))
        return Fraction(total, 1) * Fraction(2) ** (-self.scale)

    def to_complex(self) -> np.ndarray:
        return self.amplitudes.astype(np.complex128) * 2.0 ** (-self.scale / 2)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ScaledIntState):
            return NotImplemented
        if self.qubits != other.qubits:
            return False
        diff = self.scale - other.scale
        if diff % 2:
            # An odd power of sqrt2 can never match nonzero integers.
            return not self.amplitudes.any() and not other.amplitudes.any()
        if diff >= 0:
            left = self.amplitudes.astype(object)
            right = other.amplitudes.astype(object) * (1 << (diff // 2))
        else:
            left = self.amplitudes.astype(object) * (1 << (-diff // 2))
            right = other.amplitudes.astype(object)
        return bool((left == right).all())


def diagram_state(diagram: ChordDiagram) -> ScaledIntState:
    """The product of singlets described by an oriented diagram.

    The chord (a, b) contributes the singlet (|0>_a |1>_b - |1>_a |0>_b)
    with its 1/sqrt2 absorbed into the scale, so the result has 2^n
    amplitudes of +-1 and scale n.  Crossing diagrams are allowed.
    """
    n = diagram.n
    qubits = 2 * n
    amplitudes = np.zeros(1 << qubits, dtype=np.int64)
    for assignment in range(1 << n):
        index = 0
        sign = 1
        for chord_pos, (a, b) in enumerate(diagram.chords):
            bit = (assignment >> chord_pos) & 1
            if bit:
                sign = -sign
                index |= 1 << (qubits - a)
            else:
                index |= 1 << (qubits - b)
        amplitudes[index] = sign
    return ScaledIntState(qubits, amplitudes, n)


def pizza_state(n: int) -> ScaledIntState:
    """The unnormalized state sum_I (-1)^wt(I) |I>|I^c| on 2n qubits."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    amplitudes = np.zeros(1 << (2 * n), dtype=np.int64)
    full = (1 << n) - 1
    for i in range(1 << n):
        sign = -1 if (i.bit_count() & 1) else 1
        amplitudes[(i << n) | (i ^ full)] = sign
    return ScaledIntState(2 * n, amplitudes, 0)


def cyclic_state(word: BitString) -> np.ndarray:
    """Unit vector (1/sqrt m) sum_k omega^k |rot_k(word)>, omega = e^(2 pi i/m).

    Periodic words are rejected: the amplitudes cancel and the sum is not
    a state.
    """
    if not word.is_aperiodic():
        raise ValueError(f"word {word} is periodic; its cyclic sum vanishes")
    m = word.length
    vector = np.zeros(1 << m, dtype=np.complex128)
    for k in range(m):
        vector[word.cyclic_shift(k).bits] = np.exp(2j * np.pi * k / m)
    vector /= np.sqrt(m)
    return vector


def polygon_density(m: int) -> np.ndarray:
    """Density matrix mixing the cyclic states of all aperiodic m-bit words.

    Returns the 2^m-square Hermitian matrix
    (1/A(m)) sum_aperiodic C(I) C(I)^dagger with A(m) the aperiodic count.
    m = 2 reproduces the singlet density matrix.
    """
    if not 2 <= m <= MAX_POLYGON_QUBITS:
        raise ValueError(f"m must be in 2..{MAX_POLYGON_QUBITS}, got {m}")
    columns = [cyclic_state(word) for word in aperiodic_strings(m)]
    stack = np.column_stack(columns)
    rho = stack @ stack.conj().T / count_aperiodic(m)
    return rho


def check_pure_werner(state) -> InvarianceReport:
    """Residuals of the two pure-state invariance conditions.

    The conditions are that the collective Z and collective X operators
    (sums of the single-qubit Paulis over all positions) annihilate the
    state.  Z acts diagonally, multiplying the amplitude at I by
    m - 2 wt(I); X maps the amplitude sum over all one-bit flips of I to
    position I.

    Accepts a ScaledIntState (exact integer residuals) or a 1-D complex
    vector (float residuals).
    """
    if isinstance(state, ScaledIntState):
        amps = state.amplitudes
        m = state.qubits
        exact = True
    else:
        amps = np.asarray(state)
        if amps.ndim != 1 or amps.size & (amps.size - 1):
            raise ValueError("expected a vector of length 2^m")
        m = amps.size.bit_length() - 1
        exact = False
    indices = np.arange(amps.size, dtype=np.uint64)
    z_factor = m - 2 * popcount_array(indices).astype(np.int64)
    z_vec = z_factor * amps
    x_vec = np.zeros_like(amps)
    for k in range(m):
        x_vec = x_vec + amps[(indices ^ np.uint64(1 << k)).astype(np.intp)]
    if exact:
        return InvarianceReport(
            int(np.abs(z_vec).max()), int(np.abs(x_vec).max())
        )
    return InvarianceReport(
        float(np.abs(z_vec).max()), float(np.abs(x_vec).max())
    )
