"""Two-qubit reductions of polygon states and their separability.

The diagonal entry of a 2-qubit reduction at |00><00| equals the exact
ratio of aperiodic-word counts A_00(m)/A(m); a reduction of an invariant
state is a one-parameter mixture of the maximally mixed state and the
singlet, and it is separable exactly when that diagonal entry is at
least 1/6.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bitstrings import count_aperiodic, count_aperiodic_with_00

FORM_RESIDUAL_TOL = 1e-10

SEPARABILITY_THRESHOLD = Fraction(1, 6)

MAX_TABLE_M = 12

# Density matrix of the singlet (|01> - |10>)/sqrt2.
SINGLET_DM = np.array(
    [
        [0.0, 0.0, 0.0, 0.0],
        [0.0, 0.5, -0.5, 0.0],
        [0.0, -0.5, 0.5, 0.0],
        [0.0, 0.0, 0.0, 0.0],
    ],
    dtype=np.complex128,
)


def partial_trace(rho: np.ndarray, keep: list[int]) -> np.ndarray:
    """Trace out all qubits except those in ``keep`` (1-based positions).

    The reduced matrix orders its qubits as listed in ``keep``; the trace
    is preserved.
    """
    rho = np.asarray(rho)
    dim = rho.shape[0]
    if rho.shape != (dim, dim) or dim & (dim - 1) or dim < 2:
        raise ValueError("expected a square matrix of power-of-2 dimension")
    m = dim.bit_length() - 1
    if not keep:
        raise ValueError("keep at least one qubit")
    if len(set(keep)) != len(keep) or not all(1 <= q <= m for q in keep):
        raise ValueError(f"keep positions must be distinct and in 1..{m}")
    tensor = rho.reshape((2,) * (2 * m))
    # Axis q-1 is the bra index of qubit q, axis m+q-1 its ket index;
    # traced qubits reuse one label on both.
    labels = list(range(m)) * 2
    for q in keep:
        labels[m + q - 1] = m + q - 1
    out_labels = [q - 1 for q in keep] + [m + q - 1 for q in keep]
    reduced = np.einsum(tensor, labels, out_labels)
    k = len(keep)
    return reduced.reshape(1 << k, 1 << k)


@dataclass(frozen=True)
class TwoQubitWernerForm:
    """Best fit of a 4x4 state to lam*Id/4 + (1-lam)*singlet projector."""

    lam: float
    residual: float

    def fits(self, tol: float = FORM_RESIDUAL_TOL) -> bool:
        return self.residual <= tol


def two_qubit_werner_form(rho: np.ndarray) -> TwoQubitWernerForm:
    """Fit a 4x4 density matrix to the one-parameter invariant family.

    The parameter is read off the |00><00| entry (the singlet projector
    vanishes there, so that entry equals lam/4) and the residual is the
    max-abs deviation of the full matrix from the fitted form.
    """
    rho = np.asarray(rho)
    if rho.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix")
    lam = 4.0 * float(rho[0, 0].real)
    model = lam * np.eye(4) / 4 + (1.0 - lam) * SINGLET_DM
    residual = float(np.abs(rho - model).max())
    return TwoQubitWernerForm(lam, residual)


def rho0000_exact(m: int, a: int, b: int) -> Fraction:
    """Exact |00><00| entry of the (a, b) reduction of the m-qubit polygon state.

    Equals A_00(m)/A(m): the fraction of aperiodic m-bit words having 0
    at both chosen positions.  Counting is exhaustive, so the value is
    independent of any floating-point construction.
    """
    if m < 3:
        raise ValueError(f"need m >= 3, got {m}")
    if not 1 <= a < b <= m:
        raise ValueError(f"positions must satisfy 1 <= a < b <= {m}, got ({a}, {b})")
    return Fraction(count_aperiodic_with_00(m, a, b), count_aperiodic(m))


def is_separable_pair(m: int, a: int, b: int) -> bool:
    """Exact separability test of the (a, b) reduction: entry >= 1/6."""
    return rho0000_exact(m, a, b) >= SEPARABILITY_THRESHOLD


def rho0000_lower_bound(m: int) -> Fraction:
    """Exact lower bound 1/4 - 2^((2-m)/2) (m even) or 1/4 - 2^((1-m)/2) (m odd).

    The exponent is an integer for either parity, so the bound is
    rational; it is nondecreasing in m within each parity class and
    reaches 3/16 at m = 9 and m = 10.
    """
    if m < 3:
        raise ValueError(f"need m >= 3, got {m}")
    exponent = (2 - m) // 2 if m % 2 == 0 else (1 - m) // 2
    return Fraction(1, 4) - Fraction(2) ** exponent


@dataclass(frozen=True)
class ReductionEntry:
    """One (m, distance) row of the reduced-entry table."""

    m: int
    distance: int
    value: Fraction

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    @property
    def decimal(self) -> float:
        return float(self.value)


def table2(m_max: int, threads: int = 1) -> list[ReductionEntry]:
    """Reduced-entry values for m = 3..m_max and distances 1..floor(m/2).

    By cyclic symmetry the entry depends only on the distance between
    the two kept positions, and distances d and m-d agree, so rows stop
    at floor(m/2).
    """
    if not 3 <= m_max <= MAX_TABLE_M:
        raise ValueError(f"m_max must be in 3..{MAX_TABLE_M}, got {m_max}")
    rows = []
    for m in range(3, m_max + 1):
        denominator = count_aperiodic(m, threads)
        for distance in range(1, m // 2 + 1):
            numerator = count_aperiodic_with_00(m, 1, 1 + distance, threads)
            rows.append(ReductionEntry(m, distance, Fraction(numerator, denominator)))
    return rows
