# src/algebra/root_system.py
"""
Exact root data for the simple types A-G.

Conventions
-----------
Weights are written in the fundamental-weight basis and cocharacters in the
simple-coroot basis, so the pairing <weight, cocharacter> is a dot product.
The Cartan matrix satisfies ``cartan[i][j] = <alpha_j, alpha_i^v>``; the
simple root alpha_j is column j of it, the simple coroot alpha_i^v is the
unit vector e_i. Bourbaki numbering throughout (B_n: alpha_n short,
C_n: alpha_n long, G2: alpha_1 short, F4: alpha_3 and alpha_4 short).
"""

from __future__ import annotations

import logging
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod
from typing import Optional

from sympy import Matrix, Poly, cyclotomic_poly, divisors, symbols

from config.settings import PRODUCT_ORDER_CAP
from src.algebra.affine_element import AffineElement, affine_reflection, product_order
from src.algebra.lattice import dot, solve
from src.utils.errors import DomainError, InvariantViolation

logger = logging.getLogger(__name__)

_TYPE_PATTERN = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")

# Degrees of the basic invariants, the independent path for weyl_degrees
DEGREE_TABLE = {
    "A": lambda n: list(range(2, n + 2)),
    "B": lambda n: [2 * k for k in range(1, n + 1)],
    "C": lambda n: [2 * k for k in range(1, n + 1)],
    "D": lambda n: sorted([2 * k for k in range(1, n)] + [n]),
    "E": lambda n: {6: [2, 5, 6, 8, 9, 12], 7: [2, 6, 8, 10, 12, 14, 18], 8: [2, 8, 12, 14, 18, 20, 24, 30]}[n],
    "F": lambda n: [2, 6, 8, 12],
    "G": lambda n: [2, 6],
}

_ALIASES = {"B1": "A1", "C1": "A1", "C2": "B2", "D3": "A3"}


def canonical_type_label(type_label: str) -> str:
    """Validate a type label and resolve the degenerate aliases (B1, C1, C2, D3)."""
    match = _TYPE_PATTERN.match(type_label or "")
    if not match:
        raise DomainError(f"unknown type label {type_label!r}")
    family, rank = match.group(1).upper(), int(match.group(2))
    label = f"{family}{rank}"
    label = _ALIASES.get(label, label)
    family, rank = label[0], int(label[1:])
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 3,
        "D": rank >= 4,
        "E": 6 <= rank <= 8,
        "F": rank == 4,
        "G": rank == 2,
    }[family]
    if not valid:
        raise DomainError(f"rank {rank} out of range for family {family} in {type_label!r}")
    return label


def _cartan_matrix(family: str, n: int) -> tuple[tuple[int, ...], ...]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int):
        a[i][j] = a[j][i] = -1

    if family in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if family == "B":
            a[n - 1][n - 2] = -2
        elif family == "C":
            a[n - 2][n - 1] = -2
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif family == "F":
        link(0, 1)
        link(1, 2)
        link(2, 3)
        a[2][1] = -2
    elif family == "G":
        link(0, 1)
        a[0][1] = -3
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True)
class Root:
    """A root with its coordinates in three bases and its squared length class."""
    coefficients: tuple[int, ...]  # simple-root coordinates
    weight: tuple[int, ...]  # fundamental-weight coordinates
    coroot: tuple[int, ...]  # simple-coroot coordinates of beta^v
    norm: Fraction  # (beta, beta) / 2, scaled so the long roots have norm 1

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    @property
    def height(self) -> int:
        return sum(self.coefficients)

    def negated(self) -> "Root":
        return Root(
            tuple(-c for c in self.coefficients),
            tuple(-c for c in self.weight),
            tuple(-c for c in self.coroot),
            self.norm,
        )


@dataclass(frozen=True)
class RootSystem:
    """Exact root datum of a simple simply-connected group."""
    type_label: str
    cartan_matrix: tuple[tuple[int, ...], ...]
    roots: tuple[Root, ...]
    highest_root: Root
    weyl_degrees: tuple[int, ...]
    requested_label: str = ""

    @property
    def family(self) -> str:
        return self.type_label[0]

    @property
    def rank(self) -> int:
        return len(self.cartan_matrix)

    @property
    def simple_roots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(row[j] for row in self.cartan_matrix) for j in range(self.rank))

    @property
    def simple_coroots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(i == j) for i in range(self.rank)) for j in range(self.rank))

    @property
    def all_roots(self) -> frozenset[tuple[int, ...]]:
        return frozenset(r.weight for r in self.roots)

    @property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if r.is_positive)

    @property
    def is_simply_laced(self) -> bool:
        return len({r.norm for r in self.roots}) == 1

    @property
    def weyl_order(self) -> int:
        return prod(self.weyl_degrees)

    def root_by_weight(self, weight: tuple[int, ...]) -> Root:
        for root in self.roots:
            if root.weight == tuple(weight):
                return root
        raise KeyError(weight)

    def is_long(self, root: Root) -> bool:
        return root.norm == 1

    def simple_reflection(self, i: int) -> AffineElement:
        """s_i acting on cocharacters (coroot coordinates)."""
        return affine_reflection(self.simple_roots[i], self.simple_coroots[i])

    def simple_reflections(self) -> list[AffineElement]:
        return [self.simple_reflection(i) for i in range(self.rank)]


def _reflect_root(cartan, i: int, root: Root) -> Root:
    rank = len(cartan)
    pairing = sum(root.coefficients[j] * cartan[i][j] for j in range(rank))
    coefficients = tuple(c - (pairing if k == i else 0) for k, c in enumerate(root.coefficients))
    weight = tuple(w - pairing * cartan[k][i] for k, w in enumerate(root.weight))
    co_pairing = sum(root.coroot[k] * cartan[k][i] for k in range(rank))
    coroot = tuple(c - (co_pairing if k == i else 0) for k, c in enumerate(root.coroot))
    return Root(coefficients, weight, coroot, root.norm)


def _symmetrizer(cartan) -> tuple[Fraction, ...]:
    """(alpha_i, alpha_i)/2 with the long simple roots at 1."""
    rank = len(cartan)
    d: list[Optional[Fraction]] = [None] * rank
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(rank):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                queue.append(j)
    top = max(d)
    return tuple(x / top for x in d)


def _generate_roots(cartan) -> tuple[Root, ...]:
    """Closure of the simple roots under the simple reflections."""
    rank = len(cartan)
    norms = _symmetrizer(cartan)
    simple = [
        Root(
            tuple(int(k == j) for k in range(rank)),
            tuple(cartan[k][j] for k in range(rank)),
            tuple(int(k == j) for k in range(rank)),
            norms[j],
        )
        for j in range(rank)
    ]
    seen = {r.coefficients: r for r in simple}
    queue = deque(simple)
    while queue:
        root = queue.popleft()
        for i in range(rank):
            image = _reflect_root(cartan, i, root)
            if image.coefficients not in seen:
                seen[image.coefficients] = image
                queue.append(image)
    return tuple(sorted(seen.values(), key=lambda r: (not r.is_positive, -abs(r.height), r.coefficients)))


def _coxeter_degrees(rank: int, cartan, roots: tuple[Root, ...]) -> list[int]:
    """Degrees from the eigenvalues of a Coxeter element, read off its cyclotomic factors."""
    x = symbols("x")
    element = AffineElement.identity(rank)
    reflections = [affine_reflection(tuple(row[j] for row in cartan), tuple(int(k == j) for k in range(rank))) for j in range(rank)]
    for s in reflections:
        element = element * s
    coxeter_number = len(roots) // rank
    remaining = Poly(Matrix([[int(v) for v in row] for row in element.linear]).charpoly(x).as_expr(), x)
    exponents: list[int] = []
    for d in divisors(coxeter_number):
        phi = Poly(cyclotomic_poly(d, x), x)
        while True:
            quotient, remainder = remaining.div(phi)
            if not remainder.is_zero:
                break
            remaining = quotient
            exponents.extend(k * coxeter_number // d for k in range(1, d) if gcd(k, d) == 1)
            if d == 1:
                exponents.append(0)
    if remaining.degree() != 0:
        raise InvariantViolation("Coxeter element eigenvalues are not roots of unity of order h")
    return sorted(m + 1 for m in exponents)


@lru_cache(maxsize=None)
def build_root_system(type_label: str) -> RootSystem:
    """
    Construct the exact root system of a simple type.

    Raises DomainError for an unknown label or a rank outside the family.
    """
    label = canonical_type_label(type_label)
    family, rank = label[0], int(label[1:])
    cartan = _cartan_matrix(family, rank)
    roots = _generate_roots(cartan)
    positive = [r for r in roots if r.is_positive]
    if 2 * len(positive) != len(roots):
        raise InvariantViolation(f"{label}: roots are not split into positive and negative halves")

    highest = max(positive, key=lambda r: r.height)
    for beta in positive:
        if any(h < b for h, b in zip(highest.coefficients, beta.coefficients)):
            raise InvariantViolation(f"{label}: highest root does not dominate {beta.coefficients}")

    degrees = _coxeter_degrees(rank, cartan, roots)
    expected = DEGREE_TABLE[family](rank)
    if degrees != expected:
        raise InvariantViolation(f"{label}: Coxeter-element degrees {degrees} differ from table {expected}")
    if sum(d - 1 for d in degrees) != len(positive):
        raise InvariantViolation(f"{label}: degrees do not account for the positive roots")

    logger.debug(f"Built {label}: {len(roots)} roots, degrees {degrees}")
    return RootSystem(
        type_label=label,
        cartan_matrix=cartan,
        roots=roots,
        highest_root=highest,
        weyl_degrees=tuple(degrees),
        requested_label=type_label.strip().upper(),
    )


def weyl_degrees(root_system: RootSystem) -> tuple[int, ...]:
    return root_system.weyl_degrees


@dataclass(frozen=True)
class AffineRoot:
    """An affine function x -> <linear, x> + offset on the cocharacter space."""
    name: str
    linear: tuple[int, ...]
    offset: Fraction
    coroot: tuple[int, ...]
    norm: Fraction

    def evaluate(self, point) -> Fraction:
        return dot(self.linear, point) + self.offset

    def reflection(self) -> AffineElement:
        return affine_reflection(self.linear, self.coroot, self.offset)


@dataclass(frozen=True)
class AffineRootData:
    """Affine simple roots a0..ar, the fundamental alcove and its vertices."""
    root_system: RootSystem
    affine_simple_roots: tuple[AffineRoot, ...]
    vertices: tuple[tuple[Fraction, ...], ...] = field(default=())

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @property
    def node_names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.affine_simple_roots)

    @property
    def alcove_inequalities(self) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
        """Pairs (beta, k) meaning <beta, x> + k >= 0."""
        return tuple((a.linear, a.offset) for a in self.affine_simple_roots)

    def reflections(self) -> list[AffineElement]:
        return [a.reflection() for a in self.affine_simple_roots]

    def pairing(self, i: int, j: int) -> int:
        """<a_j, a_i^v> between linear parts, the affine Cartan matrix entry."""
        return dot(self.affine_simple_roots[j].linear, self.affine_simple_roots[i].coroot)

    def coxeter_matrix(self) -> tuple[tuple[Optional[int], ...], ...]:
        gens = self.reflections()
        n = len(gens)
        return tuple(
            tuple(1 if i == j else product_order(gens[i], gens[j], PRODUCT_ORDER_CAP) for j in range(n))
            for i in range(n)
        )


@lru_cache(maxsize=None)
def affine_root_data(root_system: RootSystem) -> AffineRootData:
    """
    Affine simple roots Delta~ = {a0, a1..ar} with a0 = (-alpha_h, 1), and the
    vertices of the fundamental alcove: vertex j is where every affine simple
    root except a_j vanishes.
    """
    rank = root_system.rank
    highest = root_system.highest_root
    affine = [
        AffineRoot("a0", tuple(-c for c in highest.weight), Fraction(1), tuple(-c for c in highest.coroot), highest.norm)
    ]
    for j in range(rank):
        simple = root_system.roots[0]
        for root in root_system.roots:
            if root.coefficients == tuple(int(k == j) for k in range(rank)):
                simple = root
                break
        affine.append(AffineRoot(f"a{j + 1}", simple.weight, Fraction(0), simple.coroot, simple.norm))

    vertices = []
    for j in range(rank + 1):
        others = [a for k, a in enumerate(affine) if k != j]
        point = solve([a.linear for a in others], [-a.offset for a in others])
        if point is None:
            raise InvariantViolation(f"{root_system.type_label}: alcove vertex {j} is not a point")
        if affine[j].evaluate(point) <= 0:
            raise InvariantViolation(f"{root_system.type_label}: alcove is empty at vertex {j}")
        vertices.append(point)
    return AffineRootData(root_system, tuple(affine), tuple(vertices))

