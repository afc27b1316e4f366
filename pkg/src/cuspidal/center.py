# src/cuspidal/center.py
"""
Center data of a Levi subsystem.

For a face I we work on the character side: the finite group
(P intersected with Q.I) / Z.I, where P = Z^r is the weight lattice in
fundamental-weight coordinates and Z.I the span of the linear parts of the
affine roots in I. It is the character group of the component group of the
center of L_I, and its elements restrict to each simple factor as classes
in P_f / Q_f.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from src.algebra.lattice import (
    Lattice,
    denominator_lcm,
    dot,
    inverse,
    mat_vec,
    mod_one,
    saturation,
    smith_invariants,
)
from src.algebra.root_system import AffineRootData
from src.coxeter.faces import AlcoveFace, LeviFactor
from src.utils.errors import InvariantViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CenterCharacter:
    """
    One character of the center group.

    `factor_classes` holds, per factor, the root coordinates of the
    restricted weight reduced mod 1; it names the class in P_f / Q_f.
    """
    weight: tuple[Fraction, ...]
    factor_orders: tuple[int, ...]
    factor_classes: tuple[tuple[Fraction, ...], ...] = ()


@dataclass(frozen=True)
class CenterData:
    face_label: str
    invariants: tuple[int, ...]  # cyclic factor orders > 1
    characters: tuple[CenterCharacter, ...]
    factors: tuple[LeviFactor, ...]

    @property
    def order(self) -> int:
        return prod(self.invariants)

    @property
    def key(self) -> str:
        """Table key for the center: invariant factors joined by ',' ('1' when trivial)."""
        return ",".join(str(f) for f in self.invariants) or "1"

    def projection_orders(self) -> list[tuple[int, ...]]:
        """For each character, the order of its image in P_f / Q_f per factor."""
        return [c.factor_orders for c in self.characters]


def _factor_class(affine: AffineRootData, factor: LeviFactor, weight) -> tuple[Fraction, ...]:
    cartan = [[affine.pairing(i, j) for j in factor.nodes] for i in factor.nodes]
    pairing = [dot(weight, affine.affine_simple_roots[i].coroot) for i in factor.nodes]
    return mod_one(mat_vec(inverse(cartan), pairing))


def center_data(face: AlcoveFace, affine: AffineRootData) -> CenterData:
    """
    Invariant factors via Smith normal form, and one representative weight per character.

    The order of the group equals [P intersected with Q.I : Z.I], the
    determinant of the inclusion matrix.
    """
    rank = affine.rank
    roots = [r.linear for r in face.roots]
    if not roots:
        return CenterData(face.label, (), (CenterCharacter((), ()),), face.factors)

    ambient = Lattice.spanned_by(rank, saturation(roots, rank))
    inclusion = [tuple(int(c) for c in ambient.span_coordinates(r)) for r in roots]
    invariants = tuple(f for f in smith_invariants(inclusion) if f > 1)

    # cosets of Z.I inside the saturated lattice, in its coordinates
    sublattice = Lattice.spanned_by(ambient.rank, inclusion)
    characters = []
    for coset in sublattice.coset_representatives():
        weight = tuple(sum(c * b[k] for c, b in zip(coset, ambient.basis)) for k in range(rank))
        classes = tuple(_factor_class(affine, f, weight) for f in face.factors)
        orders = tuple(denominator_lcm(c) for c in classes)
        characters.append(CenterCharacter(weight, orders, classes))

    data = CenterData(face.label, invariants, tuple(characters), face.factors)
    if len(characters) != data.order:
        raise InvariantViolation(
            f"face {face.label}: {len(characters)} cosets for a center of order {data.order}"
        )
    logger.debug(f"face {face.label}: center invariants {invariants}")
    return data


def a_type_count(data: CenterData) -> int:
    """Characters whose restriction to every A_n factor has order exactly n+1."""
    return sum(
        1
        for character in data.characters
        if all(order == f.rank + 1 for order, f in zip(character.factor_orders, data.factors))
    )
