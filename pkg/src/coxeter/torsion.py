# src/coxeter/torsion.py
"""
Torsion points of the dual torus S_I = Lambda_I^* (x) C^x and the W^I action on them.

A torsion point is a rational vector modulo 1 in the basis dual to the
chosen basis of Lambda_I. An element w of W^I with integral matrix N_w on
Lambda_I acts on the dual by the inverse transpose of N_w.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm
from typing import Iterable, Sequence

from src.algebra.affine_element import AffineElement
from src.algebra.lattice import inverse, is_integral, mat_mul, mat_vec, mod_one, transpose
from src.coxeter.relative_weyl import RelativeWeylGroup
from src.utils.errors import DomainError, InvariantViolation

logger = logging.getLogger(__name__)

Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class TorsionPoint:
    """A point of Lambda^* (x) Q/Z, stored reduced into [0, 1)."""
    coordinates: tuple[Fraction, ...]

    @classmethod
    def create(cls, values: Iterable) -> "TorsionPoint":
        return cls(mod_one(Fraction(v) for v in values))

    @classmethod
    def parse(cls, text: str, dim: int) -> "TorsionPoint":
        """'1/2,0' -> TorsionPoint; '' or '0' means the origin."""
        text = (text or "").strip()
        if not text or text == "0":
            return cls.origin(dim)
        try:
            values = [Fraction(part.strip()) for part in text.split(",")]
        except (ValueError, ZeroDivisionError) as e:
            raise DomainError(f"invalid torsion point {text!r}: {e}") from e
        if len(values) != dim:
            raise DomainError(f"torsion point {text!r} needs {dim} coordinates")
        return cls.create(values)

    @classmethod
    def origin(cls, dim: int) -> "TorsionPoint":
        return cls(tuple(Fraction(0) for _ in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.coordinates)

    @property
    def order(self) -> int:
        """Multiplicative order of the point in the torus."""
        return lcm(1, *(x.denominator for x in self.coordinates))

    def label(self) -> str:
        return ",".join(str(x) for x in self.coordinates) if self.coordinates else "0"


@dataclass(frozen=True)
class LatticeAction:
    """
    A finite group acting on a lattice by integral matrices.

    `matrices` holds N_w in the lattice basis; `dual` the inverse transposes
    acting on torsion points. Both lists are indexed alike.
    """
    matrices: tuple[Matrix, ...]
    dual: tuple[Matrix, ...]

    @classmethod
    def from_matrices(cls, matrices: Iterable[Sequence[Sequence]]) -> "LatticeAction":
        mats = tuple(tuple(tuple(Fraction(x) for x in row) for row in m) for m in matrices)
        for m in mats:
            if not all(is_integral(row) for row in m):
                raise InvariantViolation(f"matrix {m} is not integral on the lattice")
        dual = tuple(tuple(tuple(row) for row in transpose(inverse(m))) if m else () for m in mats)
        return cls(mats, dual)

    @property
    def dim(self) -> int:
        return len(self.matrices[0]) if self.matrices else 0

    @property
    def order(self) -> int:
        return len(self.matrices)

    def act(self, index: int, point: TorsionPoint) -> TorsionPoint:
        return TorsionPoint.create(mat_vec(self.dual[index], point.coordinates))


def lattice_action(group: RelativeWeylGroup) -> LatticeAction:
    """W^I on Lambda_I: N_w = B^-1 M_w B with B the lattice basis as columns."""
    if group.translation_rank != group.dim:
        raise InvariantViolation(
            f"face {group.face.label}: Lambda_I of rank {group.translation_rank} does not span A_I"
        )
    if group.dim == 0:
        return LatticeAction.from_matrices([() for _ in group.finite_part])
    columns = transpose(group.lattice_matrix())
    basis_inverse = inverse(columns)
    return LatticeAction.from_matrices(
        mat_mul(basis_inverse, mat_mul(linear, columns)) for linear in group.finite_part
    )


def stabilizer(action: LatticeAction, point: TorsionPoint) -> list[int]:
    """Indices of the elements fixing the point; closure under products is checked."""
    indices = [k for k in range(action.order) if action.act(k, point) == point]
    members = {action.matrices[k] for k in indices}
    for a in indices:
        for b in indices:
            if mat_mul(action.matrices[a], action.matrices[b]) not in members:
                raise InvariantViolation(f"stabilizer of {point.label()} is not closed")
    return indices


def orbit(action: LatticeAction, point: TorsionPoint) -> set[TorsionPoint]:
    return {action.act(k, point) for k in range(action.order)}


def torsion_points(dim: int, bound: int) -> list[TorsionPoint]:
    """All points whose coordinates have denominator dividing `bound`."""
    if bound < 1:
        raise DomainError(f"denominator bound must be >= 1, got {bound}")
    steps = [Fraction(k, bound) for k in range(bound)]
    return [TorsionPoint(coords) for coords in product(steps, repeat=dim)]


def orbit_representatives(action: LatticeAction, bound: int) -> list[TorsionPoint]:
    """One point per orbit, the lexicographically smallest, in sorted order."""
    seen: set[TorsionPoint] = set()
    representatives = []
    for point in torsion_points(action.dim, bound):
        if point in seen:
            continue
        members = orbit(action, point)
        seen |= members
        representatives.append(min(members, key=lambda p: p.coordinates))
    representatives.sort(key=lambda p: p.coordinates)
    logger.debug(f"{len(representatives)} orbits of torsion points with denominator | {bound}")
    return representatives


def same_orbit(action: LatticeAction, first: TorsionPoint, second: TorsionPoint) -> bool:
    return second in orbit(action, first)


def conjugacy_classes(elements: Sequence[AffineElement]) -> list[list[int]]:
    """Conjugacy classes of a finite group, as lists of indices into `elements`."""
    index = {g: k for k, g in enumerate(elements)}
    inverses = [h.inverse() for h in elements]
    assigned: set[int] = set()
    classes = []
    for k, g in enumerate(elements):
        if k in assigned:
            continue
        members = sorted({index[h * g * h_inv] for h, h_inv in zip(elements, inverses)})
        assigned.update(members)
        classes.append(members)
    return classes
