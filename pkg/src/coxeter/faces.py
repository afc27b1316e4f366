# src/coxeter/faces.py
"""
Faces of the fundamental alcove.

A face is indexed by a proper subset I of the affine simple roots: it is the
part of the closed alcove where every root in I vanishes. Its vertices are
the alcove vertices v_j for j not in I, and its affine span A_I is the common
zero set of I.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from src.algebra.affine_element import AffineElement
from src.algebra.coxeter_types import cartan_type, connected_components
from src.algebra.lattice import (
    as_fraction_vector,
    independent_rows,
    integer_kernel,
    inverse,
    mat_vec,
    transpose,
    vec_add,
    vec_scale,
    vec_sub,
)
from src.algebra.root_system import AffineRoot, AffineRootData
from src.utils.errors import DomainError, InvariantViolation

logger = logging.getLogger(__name__)

EMPTY_FACE_TOKENS = ("", "-", "none", "empty")


@dataclass(frozen=True)
class LeviFactor:
    """A simple factor of the Levi subsystem with simple system I."""
    nodes: tuple[int, ...]
    cartan_type: str
    marker: str = ""  # "(l)" / "(s)" for type-A factors in non-simply-laced ambients

    @property
    def label(self) -> str:
        return f"{self.cartan_type}{self.marker}"

    @property
    def is_type_a(self) -> bool:
        return self.cartan_type.startswith("A")

    @property
    def rank(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class Chart:
    """
    Affine coordinates on A_I: x = base + sum_k u_k * basis[k].

    The basis is a Z-basis of V_I intersected with the cocharacter lattice,
    so integral linear maps preserving V_I stay integral in the chart.
    """
    base: tuple[Fraction, ...]
    basis: tuple[tuple[int, ...], ...]
    pivot_rows: tuple[int, ...]
    pivot_inverse: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def create(cls, base: Sequence, basis: Sequence[Sequence[int]]) -> "Chart":
        basis = tuple(tuple(int(x) for x in b) for b in basis)
        columns = transpose(basis)  # rows of the r x d matrix
        pivots = independent_rows(columns) if basis else ()
        if len(pivots) != len(basis):
            raise InvariantViolation("chart basis is not linearly independent")
        square = tuple(tuple(b[p] for b in basis) for p in pivots)
        return cls(as_fraction_vector(base), basis, tuple(pivots), inverse(square))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def direction_coordinates(self, direction: Sequence) -> tuple[Fraction, ...]:
        direction = as_fraction_vector(direction)
        coords = mat_vec(self.pivot_inverse, [direction[p] for p in self.pivot_rows])
        rebuilt = tuple(Fraction(0) for _ in direction)
        for c, b in zip(coords, self.basis):
            rebuilt = vec_add(rebuilt, vec_scale(c, b))
        if rebuilt != direction:
            raise InvariantViolation(f"vector {direction} is not parallel to the face")
        return coords

    def coordinates(self, point: Sequence) -> tuple[Fraction, ...]:
        return self.direction_coordinates(vec_sub(as_fraction_vector(point), self.base))

    def point(self, coords: Sequence) -> tuple[Fraction, ...]:
        result = self.base
        for c, b in zip(coords, self.basis):
            result = vec_add(result, vec_scale(Fraction(c), b))
        return result

    def restrict(self, element: AffineElement) -> AffineElement:
        """The map induced on A_I by an element that preserves it."""
        columns = [self.direction_coordinates(mat_vec(element.linear, b)) for b in self.basis]
        linear = transpose(columns) if columns else ()
        translation = self.coordinates(element.apply(self.base))
        return AffineElement(tuple(tuple(row) for row in linear), translation)


@dataclass(frozen=True)
class AlcoveFace:
    """A face of the fundamental alcove, indexed by a proper subset I of Delta~."""
    type_label: str
    rank: int
    nodes: tuple[int, ...]
    roots: tuple[AffineRoot, ...]
    factors: tuple[LeviFactor, ...]
    cocharacter_fixed_lattice: tuple[tuple[int, ...], ...]
    vertex_nodes: tuple[int, ...]
    vertices: tuple[tuple[Fraction, ...], ...]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(f"a{i}" for i in self.nodes)

    @property
    def label(self) -> str:
        return ",".join(self.names) if self.nodes else "-"

    @property
    def size(self) -> int:
        return len(self.nodes)

    @property
    def z_dimension(self) -> int:
        return self.rank - len(self.nodes)

    @property
    def dimension(self) -> int:
        return self.z_dimension

    @property
    def is_vertex(self) -> bool:
        return len(self.nodes) == self.rank

    @property
    def signature(self) -> str:
        """Sorted factor labels joined by '+', the cuspidal table key."""
        return "+".join(sorted(f.label for f in self.factors))

    def chart(self, vertex_node: int | None = None) -> Chart:
        """Chart on A_I based at the alcove vertex opposite `vertex_node`."""
        if vertex_node is None:
            vertex_node = self.vertex_nodes[0]
        if vertex_node not in self.vertex_nodes:
            raise DomainError(f"a{vertex_node} does not index a vertex of face {self.label}")
        base = self.vertices[self.vertex_nodes.index(vertex_node)]
        return Chart.create(base, self.cocharacter_fixed_lattice)


def _levi_factors(affine: AffineRootData, nodes: Sequence[int]) -> tuple[LeviFactor, ...]:
    nodes = list(nodes)
    components = connected_components(
        len(nodes), lambda a, b: affine.pairing(nodes[a], nodes[b]) != 0
    )
    simply_laced = affine.root_system.is_simply_laced
    factors = []
    for comp in components:
        members = tuple(nodes[k] for k in comp)
        cartan = [[affine.pairing(i, j) for j in members] for i in members]
        name = cartan_type(cartan)
        marker = ""
        if name.startswith("A") and not simply_laced:
            long = affine.affine_simple_roots[members[0]].norm == 1
            marker = "(l)" if long else "(s)"
        factors.append(LeviFactor(members, name, marker))
    return tuple(sorted(factors, key=lambda f: f.nodes))


def build_face(affine: AffineRootData, nodes: Sequence[int]) -> AlcoveFace:
    rank = affine.rank
    nodes = tuple(sorted(set(nodes)))
    if len(nodes) > rank:
        raise DomainError("a face must be a proper subset of the affine simple roots")
    roots = tuple(affine.affine_simple_roots[i] for i in nodes)
    lattice = integer_kernel([r.linear for r in roots], rank)
    vertex_nodes = tuple(j for j in range(rank + 1) if j not in nodes)
    return AlcoveFace(
        type_label=affine.root_system.type_label,
        rank=rank,
        nodes=nodes,
        roots=roots,
        factors=_levi_factors(affine, nodes),
        cocharacter_fixed_lattice=lattice,
        vertex_nodes=vertex_nodes,
        vertices=tuple(affine.vertices[j] for j in vertex_nodes),
    )


def enumerate_faces(affine: AffineRootData) -> list[AlcoveFace]:
    """All 2^(r+1) - 1 faces, sorted by (|I|, I)."""
    nodes = range(affine.rank + 1)
    faces = [build_face(affine, subset) for size in range(affine.rank + 1) for subset in combinations(nodes, size)]
    logger.debug(f"{affine.root_system.type_label}: {len(faces)} alcove faces")
    return faces


def parse_face_selector(selector: str, affine: AffineRootData) -> tuple[int, ...]:
    """Turn 'a0,a2' into node indices, enforcing valid names and properness."""
    text = (selector or "").strip()
    if text.lower() in EMPTY_FACE_TOKENS:
        return ()
    nodes = set()
    for token in text.split(","):
        token = token.strip().lower()
        if not token:
            continue
        if not token.startswith("a") or not token[1:].isdigit():
            raise DomainError(f"invalid affine node name {token!r} in face {selector!r}")
        index = int(token[1:])
        if index > affine.rank:
            raise DomainError(
                f"node {token!r} does not exist for {affine.root_system.type_label} (a0..a{affine.rank})"
            )
        nodes.add(index)
    if len(nodes) == affine.rank + 1:
        raise DomainError(f"face {selector!r} is all of the affine simple roots, not a proper subset")
    return tuple(sorted(nodes))
