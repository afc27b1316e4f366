# src/coxeter/group_labels.py
"""
Names for the finite parts W^I.

A group is matched against the candidate families by its order and the
multiset of its element orders, and the match is confirmed by finding
generators that satisfy the family's Coxeter presentation. S3 = D3 and
S2 x| {+-1}^2 = D4 coincide, and the first name listed wins.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import factorial, gcd, lcm, prod
from typing import Optional, Sequence

from config.settings import ELEMENT_ORDER_CAP, PRODUCT_ORDER_CAP
from src.algebra.affine_element import AffineElement, enumerate_group, product_order
from src.utils.errors import InvariantViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupLabel:
    label: str
    order: int
    recognized: bool = True
    elements: tuple[AffineElement, ...] = field(default=(), compare=False, repr=False)

    @cached_property
    def multiplication_table(self) -> tuple[tuple[int, ...], ...]:
        """table[i][j] is the index of elements[i] * elements[j]; empty for named groups."""
        index = {g: k for k, g in enumerate(self.elements)}
        try:
            return tuple(tuple(index[a * b] for b in self.elements) for a in self.elements)
        except KeyError as e:
            raise InvariantViolation(f"{self.label}: elements are not closed under multiplication") from e


def _partitions(n: int, largest: Optional[int] = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def _centralizer(parts: Sequence[int], weight: int = 1) -> int:
    counts = Counter(parts)
    return prod((weight * k) ** m * factorial(m) for k, m in counts.items())


@lru_cache(maxsize=None)
def symmetric_order_profile(n: int) -> tuple[tuple[int, int], ...]:
    """Element-order multiset of S_n, from cycle types."""
    profile: Counter = Counter()
    for parts in _partitions(n):
        profile[lcm(1, *parts)] += factorial(n) // _centralizer(parts)
    return tuple(sorted(profile.items()))


@lru_cache(maxsize=None)
def dihedral_order_profile(n: int) -> tuple[tuple[int, int], ...]:
    """Element-order multiset of the dihedral group of order 2n."""
    profile: Counter = Counter()
    for k in range(n):
        profile[n // gcd(n, k)] += 1
    profile[2] += n
    return tuple(sorted(profile.items()))


@lru_cache(maxsize=None)
def hyperoctahedral_order_profile(n: int) -> tuple[tuple[int, int], ...]:
    """
    Element-order multiset of S_n x| {+-1}^n.

    Classes are pairs of partitions (positive cycles, negative cycles);
    a negative k-cycle has order 2k.
    """
    total = 2**n * factorial(n)
    profile: Counter = Counter()
    for size in range(n + 1):
        for positive in _partitions(size):
            for negative in _partitions(n - size):
                order = lcm(1, *positive, *(2 * k for k in negative))
                profile[order] += total // (_centralizer(positive, 2) * _centralizer(negative, 2))
    return tuple(sorted(profile.items()))


def _chain_matrix(bonds: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Coxeter matrix of a chain diagram with the given bond orders."""
    n = len(bonds) + 1
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i, bond in enumerate(bonds):
        m[i][i + 1] = m[i + 1][i] = bond
    return tuple(tuple(row) for row in m)


def _candidates(order: int):
    """(label, element-order profile, Coxeter matrix of a presentation) per family of this order."""
    n = 1
    while factorial(n) <= order:
        if factorial(n) == order and n >= 2:
            yield f"S{n}", symmetric_order_profile(n), _chain_matrix([3] * (n - 2))
        n += 1
    if order % 2 == 0 and order >= 4:
        k = order // 2
        label = "S2×S2" if k == 2 else f"D{k}"
        yield label, dihedral_order_profile(k), _chain_matrix([k])
    n = 1
    while 2**n * factorial(n) <= order:
        if 2**n * factorial(n) == order and n >= 2:
            yield f"S{n}⋉{{±1}}^{n}", hyperoctahedral_order_profile(n), _chain_matrix([3] * (n - 2) + [4])
        n += 1


def element_order_profile(elements: Sequence[AffineElement]) -> tuple[tuple[int, int], ...]:
    profile: Counter = Counter()
    for g in elements:
        order = g.order(ELEMENT_ORDER_CAP)
        if order is None:
            raise InvariantViolation("element of a finite part has unbounded order")
        profile[order] += 1
    return tuple(sorted(profile.items()))


def coxeter_generators(
    elements: Sequence[AffineElement], matrix: Sequence[Sequence[int]]
) -> Optional[tuple[AffineElement, ...]]:
    """
    Involutions s_1..s_n of the group with (s_i s_j)^m_ij = 1 that generate all of it.

    A group of the same order as the Coxeter group of `matrix` that admits
    such generators is a quotient of it of full order, hence isomorphic.
    Returns None when the backtracking search finds none.
    """
    involutions = [g for g in elements if not g.is_identity() and (g * g).is_identity()]
    size = len(matrix)

    def extend(chosen: list[AffineElement]) -> Optional[tuple[AffineElement, ...]]:
        k = len(chosen)
        if k == size:
            generated = enumerate_group(chosen)
            return tuple(chosen) if len(generated) == len(elements) else None
        for s in involutions:
            if s in chosen:
                continue
            if all(product_order(chosen[j], s, PRODUCT_ORDER_CAP) == matrix[j][k] for j in range(k)):
                found = extend(chosen + [s])
                if found is not None:
                    return found
        return None

    return extend([])


def finite_part_isomorphism_label(elements: Sequence[AffineElement]) -> GroupLabel:
    """
    Label a finite group given by its elements.

    Tries trivial, S_n, D_n (S2×S2 for the Klein four group) and
    S_n x| {+-1}^n in that order. A family is accepted when the element
    orders agree and the group has generators satisfying the family's
    Coxeter presentation. Anything else comes back as "order N
    (unrecognized)" and keeps its elements, so its multiplication table
    stays available.
    """
    order = len(elements)
    if order <= 1:
        return GroupLabel("trivial", 1)
    profile = element_order_profile(elements)
    for label, expected, matrix in _candidates(order):
        if profile != expected:
            continue
        if coxeter_generators(elements, matrix) is not None:
            return GroupLabel(label, order)
        logger.info(f"group of order {order} has the element orders of {label} but not its presentation")
    logger.info(f"no family matches a group of order {order} with element orders {dict(profile)}")
    return GroupLabel(f"order {order} (unrecognized)", order, recognized=False, elements=tuple(elements))
