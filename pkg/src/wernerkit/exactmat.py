"""Exact Gaussian-rational matrices with a shared (sqrt2)^(-s) scale.

Entries are pairs of Fractions (real, imaginary) held in numpy object
arrays; the represented value is entries * (sqrt2)^(-scale).  Products
add scales; sums and comparisons align scales, which requires the scale
difference to be even (it always is in the constructions here, because a
lone sqrt2 cannot relate two nonzero rational matrices).

Also hosts small dense exact linear-algebra routines (rank, nullspace,
linear solve) over Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np


def fraction_matrix(values) -> np.ndarray:
    """Object array of Fractions from any nested numeric structure."""
    arr = np.asarray(values)
    out = np.empty(arr.shape, dtype=object)
    flat_in = arr.reshape(-1)
    flat_out = out.reshape(-1)
    for i, v in enumerate(flat_in):
        flat_out[i] = v if isinstance(v, Fraction) else Fraction(v)
    return out


def zeros_fractions(shape) -> np.ndarray:
    return np.full(shape, Fraction(0), dtype=object)


@dataclass(frozen=True, eq=False)
class ScaledGaussianOperator:
    """Square operator entries * (sqrt2)^(-scale), entries Gaussian rational."""

    qubits: int
    re: np.ndarray
    im: np.ndarray
    scale: int

    def __post_init__(self) -> None:
        dim = 1 << self.qubits
        if self.re.shape != (dim, dim) or self.im.shape != (dim, dim):
            raise ValueError(f"entry matrices must be {dim}x{dim}")

    @classmethod
    def zeros(cls, qubits: int, scale: int = 0) -> "ScaledGaussianOperator":
        dim = 1 << qubits
        return cls(qubits, zeros_fractions((dim, dim)), zeros_fractions((dim, dim)), scale)

    @classmethod
    def identity(cls, qubits: int, scale: int = 0) -> "ScaledGaussianOperator":
        dim = 1 << qubits
        re = zeros_fractions((dim, dim))
        for i in range(dim):
            re[i, i] = Fraction(1)
        return cls(qubits, re, zeros_fractions((dim, dim)), scale)

    @classmethod
    def from_real(cls, qubits: int, real_entries, scale: int) -> "ScaledGaussianOperator":
        re = fraction_matrix(real_entries)
        return cls(qubits, re, zeros_fractions(re.shape), scale)

    @property
    def dim(self) -> int:
        return 1 << self.qubits

    def __matmul__(self, other: "ScaledGaussianOperator") -> "ScaledGaussianOperator":
        if self.qubits != other.qubits:
            raise ValueError("operator size mismatch")
        a_im = self.im.any()
        b_im = other.im.any()
        re = self.re @ other.re
        if a_im and b_im:
            re = re - self.im @ other.im
        if b_im:
            im = self.re @ other.im
            if a_im:
                im = im + self.im @ other.re
        elif a_im:
            im = self.im @ other.re
        else:
            im = zeros_fractions(re.shape)
        return ScaledGaussianOperator(self.qubits, re, im, self.scale + other.scale)

    def __add__(self, other: "ScaledGaussianOperator") -> "ScaledGaussianOperator":
        a, b, scale = _aligned(self, other)
        return ScaledGaussianOperator(self.qubits, a[0] + b[0], a[1] + b[1], scale)

    def __sub__(self, other: "ScaledGaussianOperator") -> "ScaledGaussianOperator":
        a, b, scale = _aligned(self, other)
        return ScaledGaussianOperator(self.qubits, a[0] - b[0], a[1] - b[1], scale)

    def __neg__(self) -> "ScaledGaussianOperator":
        return ScaledGaussianOperator(self.qubits, -self.re, -self.im, self.scale)

    def scalar_mul(self, q) -> "ScaledGaussianOperator":
        q = Fraction(q)
        return ScaledGaussianOperator(self.qubits, self.re * q, self.im * q, self.scale)

    def times_i(self) -> "ScaledGaussianOperator":
        return ScaledGaussianOperator(self.qubits, -self.im, self.re, self.scale)

    def transpose(self) -> "ScaledGaussianOperator":
        return ScaledGaussianOperator(self.qubits, self.re.T.copy(), self.im.T.copy(), self.scale)

    def conj(self) -> "ScaledGaussianOperator":
        return ScaledGaussianOperator(self.qubits, self.re, -self.im, self.scale)

    def dagger(self) -> "ScaledGaussianOperator":
        return ScaledGaussianOperator(self.qubits, self.re.T.copy(), -self.im.T, self.scale)

    def is_hermitian(self) -> bool:
        return bool((self.re == self.re.T).all() and (self.im == -self.im.T).all())

    def is_zero(self) -> bool:
        return not (self.re.any() or self.im.any())

    def max_abs_entry(self) -> Fraction:
        """Largest |Re| or |Im| among entries, ignoring the global scale."""
        worst = Fraction(0)
        for part in (self.re, self.im):
            for v in part.reshape(-1):
                a = -v if v < 0 else v
                if a > worst:
                    worst = a
        return worst

    def nonzero_items(self) -> list[tuple[int, int, Fraction, Fraction]]:
        """(row, col, re, im) for nonzero entries in row-major order."""
        items = []
        for r in range(self.dim):
            for c in range(self.dim):
                re, im = self.re[r, c], self.im[r, c]
                if re or im:
                    items.append((r, c, re, im))
        return items

    def to_complex(self) -> np.ndarray:
        factor = 2.0 ** (-self.scale / 2)
        out = np.empty((self.dim, self.dim), dtype=np.complex128)
        for r in range(self.dim):
            for c in range(self.dim):
                out[r, c] = float(self.re[r, c]) + 1j * float(self.im[r, c])
        return out * factor

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ScaledGaussianOperator):
            return NotImplemented
        if self.qubits != other.qubits:
            return False
        diff = self.scale - other.scale
        if diff % 2:
            return self.is_zero() and other.is_zero()
        a, b, _ = _aligned(self, other)
        return bool((a[0] == b[0]).all() and (a[1] == b[1]).all())


def _aligned(a: ScaledGaussianOperator, b: ScaledGaussianOperator):
    if a.qubits != b.qubits:
        raise ValueError("operator size mismatch")
    diff = a.scale - b.scale
    if diff % 2:
        raise ValueError("cannot align scales differing by an odd power of sqrt2")
    left = (a.re, a.im)
    right = (b.re, b.im)
    if diff > 0:
        factor = Fraction(1 << (diff // 2))
        right = (b.re * factor, b.im * factor)
        return left, right, a.scale
    if diff < 0:
        factor = Fraction(1 << (-diff // 2))
        left = (a.re * factor, a.im * factor)
        return left, right, b.scale
    return left, right, a.scale


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        sel = None
        for r in range(row, len(mat)):
            if mat[r][col]:
                sel = r
                break
        if sel is None:
            continue
        mat[row], mat[sel] = mat[sel], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [v * inv for v in mat[row]]
        for r in range(len(mat)):
            if r != row and mat[r][col]:
                f = mat[r][col]
                mat[r] = [v - f * w for v, w in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
        if row == len(mat):
            break
    return mat, pivots


def rank_exact(rows: list[list[Fraction]]) -> int:
    _, pivots = rref(rows)
    return len(pivots)


def nullspace_exact(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right nullspace of the row system, one vector per free column."""
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for prow, pcol in enumerate(pivots):
            vec[pcol] = -reduced[prow][fc]
        basis.append(vec)
    return basis


def solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a square nonsingular rational system by Gaussian elimination."""
    size = len(matrix)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(size):
        sel = next((r for r in range(col, size) if aug[r][col]), None)
        if sel is None:
            raise ValueError("singular system")
        aug[col], aug[sel] = aug[sel], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [aug[r][size] for r in range(size)]
