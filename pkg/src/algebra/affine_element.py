# src/algebra/affine_element.py
"""Affine transformations x -> Mx + v with exact entries, and BFS over the groups they generate."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from config.settings import ELEMENT_ORDER_CAP, GROUP_ENUMERATION_CAP
from src.algebra.lattice import (
    as_fraction_matrix,
    as_fraction_vector,
    identity_matrix,
    inverse,
    mat_mul,
    mat_vec,
    vec_add,
    zero_vector,
)
from src.utils.errors import EnumerationBudgetExceeded

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AffineElement:
    """
    An affine map x -> linear @ x + translation.

    Composition follows (M1, v1) * (M2, v2) = (M1 M2, M1 v2 + v1), i.e. the
    right factor acts first.
    """
    linear: tuple[tuple[Fraction, ...], ...]
    translation: tuple[Fraction, ...]

    @classmethod
    def create(cls, linear: Iterable[Iterable], translation: Optional[Iterable] = None) -> "AffineElement":
        linear = as_fraction_matrix(linear)
        if translation is None:
            translation = zero_vector(len(linear))
        return cls(linear, as_fraction_vector(translation))

    @classmethod
    def identity(cls, dim: int) -> "AffineElement":
        return cls(identity_matrix(dim), zero_vector(dim))

    @classmethod
    def pure_translation(cls, vector: Sequence) -> "AffineElement":
        return cls(identity_matrix(len(vector)), as_fraction_vector(vector))

    @property
    def dim(self) -> int:
        return len(self.translation)

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        return AffineElement(
            mat_mul(self.linear, other.linear),
            vec_add(mat_vec(self.linear, other.translation), self.translation),
        )

    def apply(self, point: Sequence) -> tuple[Fraction, ...]:
        return vec_add(mat_vec(self.linear, as_fraction_vector(point)), self.translation)

    def inverse(self) -> "AffineElement":
        inv = inverse(self.linear)
        return AffineElement(inv, tuple(-x for x in mat_vec(inv, self.translation)))

    def is_identity(self) -> bool:
        return self == AffineElement.identity(self.dim)

    def is_translation(self) -> bool:
        return self.linear == identity_matrix(self.dim)

    def linear_part(self) -> "AffineElement":
        return AffineElement(self.linear, zero_vector(self.dim))

    def order(self, cap: int = ELEMENT_ORDER_CAP) -> Optional[int]:
        """Multiplicative order, or None when it exceeds `cap`."""
        power = self
        for k in range(1, cap + 1):
            if power.is_identity():
                return k
            power = power * self
        return None


def affine_reflection(linear_root: Sequence, coroot: Sequence, offset=0) -> AffineElement:
    """
    Reflection in the affine hyperplane <beta, x> + k = 0.

    `linear_root` is beta in weight coordinates, `coroot` is beta^v in coroot
    coordinates, so the pairing is a dot product and the map is
    x -> x - (<beta, x> + k) beta^v.
    """
    n = len(coroot)
    linear = tuple(
        tuple(Fraction(int(i == j)) - Fraction(coroot[i]) * Fraction(linear_root[j]) for j in range(n))
        for i in range(n)
    )
    translation = tuple(-Fraction(offset) * Fraction(c) for c in coroot)
    return AffineElement(linear, translation)


def enumerate_group(
    generators: Sequence[AffineElement],
    max_length: Optional[int] = None,
    cap: int = GROUP_ENUMERATION_CAP,
) -> dict[AffineElement, int]:
    """
    Breadth-first enumeration of the group generated by `generators`.

    Returns each element with its word length (the BFS depth). With
    `max_length` only the ball of that radius is produced, which is how
    infinite groups are explored. Raises EnumerationBudgetExceeded past `cap`.
    """
    if not generators:
        return {}
    start = AffineElement.identity(generators[0].dim)
    lengths = {start: 0}
    queue = deque([start])
    while queue:
        element = queue.popleft()
        depth = lengths[element]
        if max_length is not None and depth >= max_length:
            continue
        for gen in generators:
            product = element * gen
            if product not in lengths:
                lengths[product] = depth + 1
                if len(lengths) > cap:
                    raise EnumerationBudgetExceeded(
                        f"group enumeration exceeded {cap} elements"
                    )
                queue.append(product)
    logger.debug(f"Enumerated {len(lengths)} elements (max_length={max_length})")
    return lengths


def product_order(a: AffineElement, b: AffineElement, cap: int) -> Optional[int]:
    """Order of a*b, or None (infinite) beyond `cap`."""
    return (a * b).order(cap)
