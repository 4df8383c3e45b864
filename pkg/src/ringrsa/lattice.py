"""Full-rank integer lattices with canonical upper-triangular bases.

Basis vectors are matrix COLUMNS throughout the package.  The canonical
basis is the (column-style) Hermite normal form: upper triangular,
strictly positive diagonal, and every entry right of the diagonal reduced
to 0 <= b[i][j] < b[i][i].  It is unique per lattice, so basis equality is
lattice equality.  The box {x : 0 <= x[i] < b[i][i]} then holds exactly
one representative of every coset of Z^n modulo the lattice, and
reduce_mod_lattice computes that representative by back substitution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from ._matops import bareiss_determinant

__all__ = [
    "HnfBasis",
    "CosetBox",
    "hnf",
    "determinant",
    "coset_box",
    "reduce_mod_lattice",
    "contains",
    "lattices_equal",
]


@dataclass(frozen=True)
class HnfBasis:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if n == 0 or any(len(r) != n for r in self.entries):
            raise ValueError("basis must be square and nonempty")
        for i, row in enumerate(self.entries):
            if row[i] <= 0:
                raise ValueError("diagonal entries must be strictly positive")
            if any(row[j] for j in range(i)):
                raise ValueError("basis must be upper triangular")
            if any(not 0 <= row[j] < row[i] for j in range(i + 1, n)):
                raise ValueError("off-diagonal entries must be reduced mod the diagonal")

    @property
    def dimension(self) -> int:
        return len(self.entries)

    @property
    def diag(self) -> tuple[int, ...]:
        return tuple(row[i] for i, row in enumerate(self.entries))


@dataclass(frozen=True)
class CosetBox:
    """Half-open integer box holding one point per residue class."""

    radices: tuple[int, ...]

    def __post_init__(self):
        if not self.radices or any(r < 1 for r in self.radices):
            raise ValueError("radices must be positive")

    @property
    def capacity(self) -> int:
        return math.prod(self.radices)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    # returns (g, x, y) with g = a*x + b*y and g = gcd(a, b) >= 0
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        g, ng = ng, g - q * ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Signed determinant; callers wanting the lattice volume take abs()."""
    return bareiss_determinant(matrix)


def hnf(matrix: Sequence[Sequence[int]]) -> HnfBasis:
    """Hermite normal form of the lattice spanned by the matrix columns.

    Integer column elimination with extended-gcd pivoting, processing rows
    bottom-up.  Since |det| * e_i always lies in the lattice, those columns
    are fed into the elimination and every entry in a not-yet-pivoted row
    is reduced modulo |det|, which keeps intermediate growth bounded.
    """
    n = len(matrix)
    if n == 0 or any(len(r) != n for r in matrix):
        raise ValueError("basis matrix must be square and nonempty")
    det = bareiss_determinant(matrix)
    if det == 0:
        raise ValueError("rank-deficient lattice")
    big_d = abs(det)

    active = [[row[j] for row in matrix] for j in range(n)]
    basis_cols: list[list[int] | None] = [None] * n
    for i in range(n - 1, -1, -1):
        extra = [0] * n
        extra[i] = big_d
        active.append(extra)
        pivot = None
        for col in active:
            if col[i] == 0:
                continue
            if pivot is None:
                pivot = col
                continue
            g, x, y = _xgcd(pivot[i], col[i])
            af, bf = pivot[i] // g, col[i] // g
            for r in range(i + 1):
                pr, cr = pivot[r], col[r]
                pivot[r] = x * pr + y * cr
                col[r] = af * cr - bf * pr
        assert pivot is not None
        if pivot[i] < 0:
            for r in range(i + 1):
                pivot[r] = -pivot[r]
        active = [c for c in active if c is not pivot]
        for col in active:
            for r in range(i):
                col[r] %= big_d
        for r in range(i):
            pivot[r] %= big_d
        basis_cols[i] = pivot

    cols = [c for c in basis_cols if c is not None]
    for j in range(1, n):
        for i in range(j - 1, -1, -1):
            q = cols[j][i] // cols[i][i]
            if q:
                for r in range(i + 1):
                    cols[j][r] -= q * cols[i][r]
    entries = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return HnfBasis(entries)


def coset_box(basis: HnfBasis) -> CosetBox:
    """The box spanned by the diagonal: one point per residue class."""
    return CosetBox(basis.diag)


def reduce_mod_lattice(basis: HnfBasis, vector: Sequence[int]) -> tuple[int, ...]:
    """Canonical coset representative of vector inside the box.

    Back substitution from the last coordinate: at row i subtract the
    floor quotient of the i-th basis column, leaving 0 <= w[i] < b[i][i].
    """
    n = basis.dimension
    if len(vector) != n:
        raise ValueError("vector length does not match the lattice dimension")
    entries = basis.entries
    w = list(vector)
    for i in range(n - 1, -1, -1):
        q = w[i] // entries[i][i]
        if q:
            for r in range(i + 1):
                w[r] -= q * entries[r][i]
    return tuple(w)


def contains(basis: HnfBasis, vector: Sequence[int]) -> bool:
    """True when the vector is a lattice point."""
    return not any(reduce_mod_lattice(basis, vector))


def lattices_equal(a: HnfBasis, b: HnfBasis) -> bool:
    """HNF bases are canonical, so entry equality decides lattice equality."""
    return a.entries == b.entries
