"""Werner-invariant operators from chord diagrams.

The real-linear map m sends a basis ket |I>|J> of 2n qubits to the
n-qubit matrix unit |I><J|.  Applying it to singlet-product states and
multiplying by the pizza operator produces real matrices A_D whose
symmetrized combinations form a Hermitian basis of the space of
operators commuting with every collective single-qubit unitary; the
basis has Catalan(n) elements.  Everything on exact inputs is computed
in Gaussian-rational arithmetic, so the structural identities hold with
zero tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np
import scipy.linalg

from .bitstrings import popcount_array
from .chord_diagrams import ChordDiagram, enumerate_noncrossing, representative_set
from .exactmat import (
    ScaledGaussianOperator,
    fraction_matrix,
    nullspace_exact,
    solve_exact,
    zeros_fractions,
)
from .states import InvarianceReport, ScaledIntState, diagram_state

FLOAT_INVARIANCE_TOL = 1e-10
IN_SPAN_TOL = 1e-8

MAX_BASIS_N = 5
MAX_ORACLE_N = 4

PROVENANCE_SYMMETRIC = "symmetric-diagram"
PROVENANCE_REAL = "R-real-part"
PROVENANCE_IMAG = "R-imaginary-part"


def m_map(state: ScaledIntState) -> ScaledGaussianOperator:
    """Reshape a real 2n-qubit state into an n-qubit operator.

    The amplitude of |I>|J> becomes the (I, J) entry; the scale carries
    over unchanged.  Only even qubit counts are meaningful.
    """
    if state.qubits % 2:
        raise ValueError("the state must live on an even number of qubits")
    n = state.qubits // 2
    entries = state.amplitudes.reshape(1 << n, 1 << n)
    return ScaledGaussianOperator.from_real(n, entries, state.scale)


def pizza_operator(n: int) -> ScaledGaussianOperator:
    """The signed complement permutation sum_I (-1)^wt(I) |I><I^c|.

    Equals the n-fold tensor power of iY; its square is (-1)^n times the
    identity and its transpose is (-1)^n times itself.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    dim = 1 << n
    re = zeros_fractions((dim, dim))
    for i in range(dim):
        sign = -1 if (i.bit_count() & 1) else 1
        re[i, i ^ (dim - 1)] = Fraction(sign)
    return ScaledGaussianOperator(n, re, zeros_fractions((dim, dim)), 0)


def a_operator(diagram: ChordDiagram) -> ScaledGaussianOperator:
    """Product of the pizza operator with the reshaped diagram state."""
    return pizza_operator(diagram.n) @ m_map(diagram_state(diagram))


def transpose_rotation_check(diagram: ChordDiagram) -> bool:
    """Whether rotating the diagram by a half turn transposes its reshaped state."""
    rotated = m_map(diagram_state(diagram.rotate_half_turn()))
    return rotated == m_map(diagram_state(diagram)).transpose()


def check_mixed_werner(operator) -> InvarianceReport:
    """Residuals of the two collective-Pauli commutator conditions.

    [Z_tot, H] multiplies the (I, J) entry by (wt J - wt I) * 2;
    [X_tot, H] at (I, J) is the sum over single-bit flips of
    H[flip(I), J] - H[I, flip(J)].  Residuals are max-abs entries of the
    two commutators: exact Fractions for ScaledGaussianOperator input
    (global scale factored out), floats for complex matrices.
    """
    if isinstance(operator, ScaledGaussianOperator):
        qubits = operator.qubits
        parts = (operator.re, operator.im)
        exact = True
    else:
        matrix = np.asarray(operator)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError("expected a square matrix")
        dim = matrix.shape[0]
        if dim & (dim - 1) or dim < 2:
            raise ValueError("matrix dimension must be a power of 2")
        qubits = dim.bit_length() - 1
        parts = (matrix,)
        exact = False

    indices = np.arange(1 << qubits, dtype=np.uint64)
    diag = qubits - 2 * popcount_array(indices).astype(np.int64)
    z_factor = diag[:, None] - diag[None, :]

    def commutators(entry_matrix):
        z_comm = entry_matrix * z_factor
        x_comm = np.zeros_like(entry_matrix)
        for k in range(qubits):
            perm = (indices ^ np.uint64(1 << k)).astype(np.intp)
            x_comm = x_comm + entry_matrix[perm, :] - entry_matrix[:, perm]
        return z_comm, x_comm

    if exact:
        z_res = Fraction(0)
        x_res = Fraction(0)
        for entry_matrix in parts:
            z_comm, x_comm = commutators(entry_matrix)
            z_res = max(z_res, _max_abs_fraction(z_comm))
            x_res = max(x_res, _max_abs_fraction(x_comm))
        return InvarianceReport(z_res, x_res)
    z_comm, x_comm = commutators(parts[0])
    return InvarianceReport(
        float(np.abs(z_comm).max()), float(np.abs(x_comm).max())
    )


@dataclass(frozen=True)
class WernerBasis:
    """Ordered Hermitian basis with per-element provenance."""

    n: int
    elements: tuple[ScaledGaussianOperator, ...]
    provenance: tuple[tuple[str, ChordDiagram], ...]

    def __len__(self) -> int:
        return len(self.elements)


def hermitian_basis(n: int) -> WernerBasis:
    """The Catalan(n)-element Hermitian basis built from noncrossing diagrams.

    Half-turn-symmetric diagrams contribute their (symmetric, real) A_D
    directly; each representative D of a non-symmetric pair contributes
    (A_D + A_D^T)/2 and (A_D - A_D^T)/(2i).  Elements keep the diagram
    normalization (scale n, entries with denominators 1 or 2) and follow
    lexicographic diagram order within each group.
    """
    if not 1 <= n <= MAX_BASIS_N:
        raise ValueError(f"n must be in 1..{MAX_BASIS_N}, got {n}")
    elements: list[ScaledGaussianOperator] = []
    provenance: list[tuple[str, ChordDiagram]] = []
    for diagram in enumerate_noncrossing(n):
        if diagram.has_half_turn_symmetry():
            elements.append(a_operator(diagram))
            provenance.append((PROVENANCE_SYMMETRIC, diagram))
    for diagram in representative_set(n):
        a = a_operator(diagram)
        a_t = a.transpose()
        elements.append((a + a_t).scalar_mul(Fraction(1, 2)))
        provenance.append((PROVENANCE_REAL, diagram))
        # (A - A^T)/(2i) = -i/2 * (A - A^T): purely imaginary, Hermitian.
        elements.append((a - a_t).times_i().scalar_mul(Fraction(-1, 2)))
        provenance.append((PROVENANCE_IMAG, diagram))
    return WernerBasis(n, tuple(elements), tuple(provenance))


@dataclass(frozen=True)
class Decomposition:
    """Coefficients of an operator over a WernerBasis.

    On the exact path the true i-th coefficient is
    coefficients[i] * (sqrt2)^(-scale_sqrt2_exponent) with rational
    coefficients; the float path stores plain floats and exponent 0.
    The residual is the max-abs entry of (input - reconstruction), exact
    on the exact path.
    """

    coefficients: tuple
    scale_sqrt2_exponent: int
    residual: object

    def coefficient_floats(self) -> list[float]:
        factor = 2.0 ** (-self.scale_sqrt2_exponent / 2)
        return [float(c) * factor for c in self.coefficients]

    def in_span(self, tol: float = IN_SPAN_TOL) -> bool:
        return self.residual <= tol


def decompose(operator, basis: WernerBasis) -> Decomposition:
    """Expand a Hermitian operator over the basis.

    Exact inputs are solved through the exact normal equations (the
    basis is independent, so the Gram matrix is nonsingular) and report
    an exact residual, zero precisely when the input lies in the span.
    Complex-float inputs use column-pivoted least squares.
    """
    if isinstance(operator, ScaledGaussianOperator):
        return _decompose_exact(operator, basis)
    return _decompose_float(np.asarray(operator), basis)


@dataclass(frozen=True)
class CommutantSpan:
    """Exact spanning set of all Hermitian operators with vanishing commutators."""

    n: int
    dimension: int
    elements: tuple[ScaledGaussianOperator, ...]


def commutant_oracle(n: int) -> CommutantSpan:
    """Exact nullspace of the two commutator maps on Hermitian matrices.

    The collective-Z commutator is diagonal in the matrix-unit basis, so
    its kernel is exactly the entries (I, J) with wt I = wt J; the
    collective-X commutator is then eliminated exactly over the
    surviving real coordinates.  Independent of the diagram construction;
    the dimension equals Catalan(n).
    """
    if not 1 <= n <= MAX_ORACLE_N:
        raise ValueError(f"n must be in 1..{MAX_ORACLE_N}, got {n}")
    dim = 1 << n
    weights = [i.bit_count() for i in range(dim)]

    coords: list[tuple] = [("d", i) for i in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            if weights[i] == weights[j]:
                coords.append(("r", i, j))
                coords.append(("i", i, j))
    index = {coord: pos for pos, coord in enumerate(coords)}

    rows: list[list[Fraction]] = []
    for i in range(dim):
        for j in range(dim):
            if abs(weights[i] - weights[j]) != 1:
                continue
            real_row = [0] * len(coords)
            imag_row = [0] * len(coords)

            def add(sign: int, a: int, b: int) -> None:
                if weights[a] != weights[b]:
                    return
                if a == b:
                    real_row[index[("d", a)]] += sign
                elif a < b:
                    real_row[index[("r", a, b)]] += sign
                    imag_row[index[("i", a, b)]] += sign
                else:
                    real_row[index[("r", b, a)]] += sign
                    imag_row[index[("i", b, a)]] -= sign

            for k in range(n):
                add(+1, i ^ (1 << k), j)
                add(-1, i, j ^ (1 << k))
            for row in (real_row, imag_row):
                if any(row):
                    rows.append([Fraction(v) for v in row])

    basis_vectors = nullspace_exact(rows, len(coords))
    elements = []
    for vec in basis_vectors:
        scale_up = lcm(*(v.denominator for v in vec)) if vec else 1
        re = zeros_fractions((dim, dim))
        im = zeros_fractions((dim, dim))
        for coord, value in zip(coords, vec):
            v = value * scale_up
            if not v:
                continue
            if coord[0] == "d":
                re[coord[1], coord[1]] = v
            elif coord[0] == "r":
                re[coord[1], coord[2]] = v
                re[coord[2], coord[1]] = v
            else:
                im[coord[1], coord[2]] = v
                im[coord[2], coord[1]] = -v
        elements.append(ScaledGaussianOperator(n, re, im, 0))
    return CommutantSpan(n, len(elements), tuple(elements))


def haar_random_unitary(rng: np.random.Generator, dim: int = 2) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Ginibre matrix."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim)))
    z /= np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    phases = np.diagonal(r).copy()
    phases /= np.abs(phases)
    return q * phases


def twirl_check(matrix: np.ndarray, samples: int, seed: int) -> float:
    """Max entry deviation of U^(x m) H U^(x m)^dagger from H over Haar samples."""
    if samples < 1:
        raise ValueError("need at least one sample")
    matrix = np.asarray(matrix, dtype=np.complex128)
    dim = matrix.shape[0]
    if matrix.shape != (dim, dim) or dim & (dim - 1) or dim < 2:
        raise ValueError("expected a square matrix of power-of-2 dimension")
    qubits = dim.bit_length() - 1
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        single = haar_random_unitary(rng)
        collective = single
        for _ in range(qubits - 1):
            collective = np.kron(collective, single)
        twirled = collective @ matrix @ collective.conj().T
        worst = max(worst, float(np.abs(twirled - matrix).max()))
    return worst


def _max_abs_fraction(entries: np.ndarray) -> Fraction:
    worst = Fraction(0)
    for v in entries.reshape(-1):
        a = -v if v < 0 else v
        if a > worst:
            worst = a
    return worst


def _sparse_dict(op: ScaledGaussianOperator) -> dict[tuple[int, int], tuple[Fraction, Fraction]]:
    return {(r, c): (re, im) for r, c, re, im in op.nonzero_items()}


def _decompose_exact(operator: ScaledGaussianOperator, basis: WernerBasis) -> Decomposition:
    if operator.qubits != basis.n:
        raise ValueError("operator and basis dimensions differ")
    if not operator.is_hermitian():
        raise ValueError("decomposition requires a Hermitian operator")
    element_dicts = [_sparse_dict(e) for e in basis.elements]
    target = _sparse_dict(operator)

    def inner(a: dict, b: dict) -> Fraction:
        total = Fraction(0)
        small, large = (a, b) if len(a) <= len(b) else (b, a)
        for key, (re1, im1) in small.items():
            if key in large:
                re2, im2 = large[key]
                total += re1 * re2 + im1 * im2
        return total

    size = len(element_dicts)
    gram = [[inner(element_dicts[i], element_dicts[j]) for j in range(size)] for i in range(size)]
    rhs = [inner(element_dicts[i], target) for i in range(size)]
    coeffs = solve_exact(gram, rhs)

    reconstruction: dict[tuple[int, int], list[Fraction]] = {}
    for coeff, entries in zip(coeffs, element_dicts):
        if not coeff:
            continue
        for key, (re, im) in entries.items():
            acc = reconstruction.setdefault(key, [Fraction(0), Fraction(0)])
            acc[0] += coeff * re
            acc[1] += coeff * im
    residual = Fraction(0)
    for key in set(reconstruction) | set(target):
        re1, im1 = reconstruction.get(key, (Fraction(0), Fraction(0)))
        re2, im2 = target.get(key, (Fraction(0), Fraction(0)))
        residual = max(residual, abs(re1 - re2), abs(im1 - im2))

    # Basis elements all sit at scale n; the leftover sqrt2 power is recorded
    # instead of rescaling entries so odd differences stay exact.
    exponent = operator.scale - _basis_scale(basis)
    return Decomposition(tuple(coeffs), exponent, residual)


def _decompose_float(matrix: np.ndarray, basis: WernerBasis) -> Decomposition:
    dim = 1 << basis.n
    if matrix.shape != (dim, dim):
        raise ValueError("operator and basis dimensions differ")
    if float(np.abs(matrix - matrix.conj().T).max()) > 1e-8:
        raise ValueError("decomposition requires a Hermitian operator")
    columns = [e.to_complex().reshape(-1) for e in basis.elements]
    design = np.stack(
        [np.concatenate([col.real, col.imag]) for col in columns], axis=1
    )
    target = np.concatenate([matrix.real.reshape(-1), matrix.imag.reshape(-1)])
    solution, _, _, _ = scipy.linalg.lstsq(design, target, lapack_driver="gelsy")
    reconstruction = sum(
        c * col for c, col in zip(solution, columns)
    ).reshape(dim, dim)
    residual = float(np.abs(reconstruction - matrix).max())
    return Decomposition(tuple(float(c) for c in solution), 0, residual)


def _basis_scale(basis: WernerBasis) -> int:
    scales = {e.scale for e in basis.elements}
    if len(scales) != 1:
        raise ValueError("basis elements carry mixed scales")
    return scales.pop()
