# src/cuspidal/rules.py
"""
Per-factor cuspidal rules.

A cuspidal pair on a simply connected almost-simple factor is supported on
a single central character, and the count for a face is

    c_I = sum over center characters chi of prod over factors n_X(chi|X)

where n_X(c) is the number of cuspidal pairs of the factor X with central
character class c. The classical cases follow the generalized Springer
correspondence:

  A_n   one pair, for the characters of exact order n+1
  B_n   Spin(N), N = 2n+1: trivial character when N is a square, the
        spin character when N is triangular
  C_n   Sp(2n): when 2n = j(j+1), one pair with value (-1)^n on -1
  D_n   Spin(N), N = 2n: each character nontrivial on ker(Spin -> SO) when
        N is triangular; when N = j^2 (j even), the character trivial on
        that kernel with value (-1)^(j/2) on -1
  G2, F4, E8   one pair; E6 one per character of order 3; E7 one for the
        character of order 2
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import isqrt, prod
from typing import Optional, Sequence

from src.algebra.root_system import AffineRootData
from src.coxeter.faces import LeviFactor
from src.cuspidal.center import CenterData

logger = logging.getLogger(__name__)

EXCEPTIONAL_ORDERS = {"G2": 1, "F4": 1, "E8": 1, "E6": 3, "E7": 2}


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def is_triangular(n: int) -> bool:
    """n = j(j+1)/2 for some j >= 1."""
    return n > 0 and is_square(8 * n + 1)


def _long_arm_leaf(affine: AffineRootData, factor: LeviFactor) -> Optional[int]:
    """
    Position (in factor.nodes) of the leaf ending the long arm of a D_n diagram.

    None for D4, where the three arms have the same length.
    """
    nodes = factor.nodes
    neighbours = {
        k: [m for m, j in enumerate(nodes) if j != i and affine.pairing(i, j) != 0]
        for k, i in enumerate(nodes)
    }
    branch = next((k for k, v in neighbours.items() if len(v) == 3), None)
    if branch is None:
        return None
    leaves = [k for k, v in neighbours.items() if len(v) == 1 and branch not in v]
    return leaves[0] if len(leaves) == 1 else None


def _type_d_count(n: int, order: int, kernel_trivial: bool) -> int:
    size = 2 * n
    if not kernel_trivial:
        return int(is_triangular(size))
    if not is_square(size):
        return 0
    j = isqrt(size)
    if j % 2:
        return 0
    sign_on_minus_one = 1 if (j // 2) % 2 == 0 else -1
    return int((order == 1) == (sign_on_minus_one == 1))


def factor_pair_count(
    affine: AffineRootData, factor: LeviFactor, order: int, coordinates: Sequence[Fraction]
) -> Optional[int]:
    """Cuspidal pairs of one factor with central character class of the given order."""
    kind, n = factor.cartan_type[0], factor.rank
    if factor.cartan_type in EXCEPTIONAL_ORDERS:
        return int(order == EXCEPTIONAL_ORDERS[factor.cartan_type])
    if kind == "A":
        return int(order == n + 1)
    if kind == "B":
        size = 2 * n + 1
        return int(is_square(size)) if order == 1 else int(is_triangular(size))
    if kind == "C":
        if not is_triangular(n):  # 2n = j(j+1)
            return 0
        return int(order == (2 if n % 2 else 1))
    if kind == "D":
        leaf = _long_arm_leaf(affine, factor)
        if leaf is None:
            # D4: 8 is neither square nor triangular
            return 0
        kernel_trivial = Fraction(coordinates[leaf]).denominator == 1
        return _type_d_count(n, order, kernel_trivial)
    return None


def factor_rule_count(data: CenterData, affine: AffineRootData) -> Optional[int]:
    """c_I by the per-factor rules, summed over the center characters; None if a factor has no rule."""
    total = 0
    for character in data.characters:
        counts = [
            factor_pair_count(affine, factor, order, classes)
            for factor, order, classes in zip(data.factors, character.factor_orders, character.factor_classes)
        ]
        if None in counts:
            return None
        total += prod(counts)
    logger.debug(f"face {data.face_label}: {total} by the per-factor rules")
    return total
