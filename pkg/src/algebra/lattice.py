# src/algebra/lattice.py
"""
Exact integer and rational linear algebra.

Vectors are tuples and matrices are tuples of row tuples, with ``int`` or
``Fraction`` entries. Nothing here touches floating point: group elements are
compared for equality, so every computation must be exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, lcm
from typing import Iterable, Optional, Sequence

from sympy import Matrix, Rational, ZZ
from sympy.matrices.normalforms import invariant_factors

Vector = tuple
Mat = tuple


def as_fraction_vector(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


def as_fraction_matrix(rows: Iterable[Iterable]) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(as_fraction_vector(row) for row in rows)


def identity_matrix(n: int) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def zero_vector(n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(0) for _ in range(n))


def transpose(matrix: Sequence[Sequence]) -> tuple:
    if not matrix:
        return ()
    return tuple(zip(*matrix))


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    cols = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def mat_vec(a: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def dot(u: Sequence, v: Sequence):
    return sum(x * y for x, y in zip(u, v))


def vec_add(u: Sequence, v: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(u, v))


def vec_scale(c, v: Sequence) -> tuple:
    return tuple(c * x for x in v)


def is_integral(values: Iterable) -> bool:
    return all(Fraction(x).denominator == 1 for x in values)


def denominator_lcm(values: Iterable) -> int:
    result = 1
    for x in values:
        result = lcm(result, Fraction(x).denominator)
    return result


def mod_one(values: Iterable) -> tuple[Fraction, ...]:
    """Reduce a rational vector into [0, 1)^n."""
    return tuple(Fraction(x) - floor(Fraction(x)) for x in values)


def _sympy_matrix(matrix: Sequence[Sequence]) -> Matrix:
    return Matrix([[Rational(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in matrix])


def _as_fraction(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def rank(matrix: Sequence[Sequence]) -> int:
    return _sympy_matrix(matrix).rank() if matrix else 0


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    if not matrix:
        return Fraction(1)
    return _as_fraction(_sympy_matrix(matrix).det())


def inverse(matrix: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    if not matrix:
        return ()
    m = _sympy_matrix(matrix)
    if m.det() == 0:
        raise ValueError("matrix is singular")
    inv = m.inv()
    return tuple(tuple(_as_fraction(inv[i, j]) for j in range(inv.cols)) for i in range(inv.rows))


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Solve a square nonsingular system exactly; None when singular."""
    try:
        return mat_vec(inverse(matrix), [Fraction(x) for x in rhs])
    except ValueError:
        return None


# --- integer column reduction ------------------------------------------------


def _column_echelon(a: list[list[int]], track: Optional[list[list[int]]] = None) -> int:
    """
    Unimodular column operations bringing `a` to column echelon form in place.

    Returns the number of nonzero columns; they come first, each with a
    positive pivot strictly below the previous column's pivot. When `track`
    is given the same operations are applied to its columns.
    """
    m = len(a)
    n = len(a[0]) if a else 0

    def swap(i: int, j: int):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if track is not None:
            for row in track:
                row[i], row[j] = row[j], row[i]

    def add(target: int, source: int, factor: int):
        for row in a:
            row[target] += factor * row[source]
        if track is not None:
            for row in track:
                row[target] += factor * row[source]

    p = 0
    for i in range(m):
        if p == n:
            break
        for j in range(p + 1, n):
            while a[i][j] != 0:
                if a[i][p] == 0 or abs(a[i][j]) < abs(a[i][p]):
                    swap(p, j)
                    continue
                add(j, p, -(a[i][j] // a[i][p]))
        if a[i][p] != 0:
            if a[i][p] < 0:
                add(p, p, -2)
            p += 1
    return p


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> tuple[tuple[int, ...], ...]:
    """Z-basis of {x in Z^ncols : row . x = 0 for every row}."""
    a = [[int(x) for x in row] for row in rows]
    track = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    if not a:
        return tuple(tuple(track[i][j] for i in range(ncols)) for j in range(ncols))
    p = _column_echelon(a, track)
    return tuple(tuple(track[i][j] for i in range(ncols)) for j in range(p, ncols))


def saturation(vectors: Sequence[Sequence[int]], dim: int) -> tuple[tuple[int, ...], ...]:
    """Z-basis of Z^dim intersected with the rational span of `vectors`."""
    annihilator = integer_kernel(vectors, dim)
    return integer_kernel(annihilator, dim)


def smith_invariants(matrix: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Nonzero Smith normal form invariant factors, as positive integers."""
    if not matrix or not matrix[0]:
        return ()
    factors = invariant_factors(Matrix([[int(x) for x in row] for row in matrix]), domain=ZZ)
    return tuple(sorted(abs(int(f)) for f in factors if f != 0))


@dataclass(frozen=True)
class Lattice:
    """
    A lattice of rank k inside Q^dim, stored as a column-echelon basis.

    Each basis column has a positive pivot strictly below the pivot of the
    column before it, which makes coordinates solvable by forward
    substitution.
    """
    dim: int
    basis: tuple[tuple[Fraction, ...], ...] = ()
    pivots: tuple[int, ...] = ()

    @classmethod
    def spanned_by(cls, dim: int, vectors: Iterable[Sequence]) -> "Lattice":
        vectors = [as_fraction_vector(v) for v in vectors]
        vectors = [v for v in vectors if any(v)]
        if not vectors:
            return cls(dim)
        scale = lcm(*(denominator_lcm(v) for v in vectors))
        a = [[int(v[i] * scale) for v in vectors] for i in range(dim)]
        p = _column_echelon(a)
        basis = tuple(
            tuple(Fraction(a[i][j], scale) for i in range(dim)) for j in range(p)
        )
        pivots = tuple(next(i for i in range(dim) if col[i] != 0) for col in basis)
        return cls(dim, basis, pivots)

    @classmethod
    def standard(cls, dim: int) -> "Lattice":
        return cls.spanned_by(dim, identity_matrix(dim))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def extended(self, vectors: Iterable[Sequence]) -> "Lattice":
        return Lattice.spanned_by(self.dim, list(self.basis) + list(vectors))

    def span_coordinates(self, v: Sequence) -> Optional[tuple[Fraction, ...]]:
        """Rational coordinates of v in the basis, or None outside the span."""
        v = as_fraction_vector(v)
        coords: list[Fraction] = []
        for col, pivot in zip(self.basis, self.pivots):
            residual = v[pivot] - sum(c * b[pivot] for c, b in zip(coords, self.basis))
            coords.append(residual / col[pivot])
        rebuilt = zero_vector(self.dim)
        for c, b in zip(coords, self.basis):
            rebuilt = vec_add(rebuilt, vec_scale(c, b))
        if rebuilt != v:
            return None
        return tuple(coords)

    def contains(self, v: Sequence) -> bool:
        coords = self.span_coordinates(v)
        return coords is not None and is_integral(coords)

    def contains_lattice(self, other: "Lattice") -> bool:
        return all(self.contains(b) for b in other.basis)

    def covolume(self) -> Fraction:
        """|det| of the basis; defined only for full-rank lattices."""
        if self.rank != self.dim:
            raise ValueError("covolume of a lattice that is not of full rank")
        if self.dim == 0:
            return Fraction(1)
        return abs(determinant(transpose(self.basis)))

    def reduce(self, v: Sequence) -> tuple[Fraction, ...]:
        """Canonical representative of v modulo a full-rank lattice."""
        v = list(as_fraction_vector(v))
        for col, pivot in zip(self.basis, self.pivots):
            q = floor(v[pivot] / col[pivot])
            if q:
                v = [x - q * y for x, y in zip(v, col)]
        return tuple(v)

    def coset_representatives(self) -> list[tuple[Fraction, ...]]:
        """Representatives of Z^dim / L for a full-rank sublattice L of Z^dim."""
        if self.rank != self.dim:
            raise ValueError("coset representatives need a full-rank lattice")
        ranges = [range(int(col[p])) for col, p in zip(self.basis, self.pivots)]
        reps: list[tuple[Fraction, ...]] = [zero_vector(self.dim)]
        for axis, axis_range in enumerate(ranges):
            reps = [
                tuple(Fraction(k) if i == axis else x for i, x in enumerate(rep))
                for rep in reps
                for k in axis_range
            ]
        return reps


def independent_rows(matrix: Sequence[Sequence]) -> tuple[int, ...]:
    """Indices of a maximal set of linearly independent rows, smallest first."""
    if not matrix:
        return ()
    _, pivots = _sympy_matrix(transpose(matrix)).rref()
    return tuple(pivots)
