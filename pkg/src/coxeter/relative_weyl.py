# src/coxeter/relative_weyl.py
"""
Relative affine Weyl groups.

For a face I the group W~^I = N(W~_I)/W~_I acts on the affine span A_I of
the face. It is generated by the elements v_s = w0(I+s) w0(I), s not in I,
restricted to A_I. Only candidates that preserve A_I (equivalently,
normalize W~_I) contribute a generator. The group is then split into its
finite part W^I and translation lattice Lambda_I by a closure over coset
representatives.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from config.settings import GROUP_ENUMERATION_CAP, PRODUCT_ORDER_CAP, SEMIDIRECT_WORD_LENGTH
from src.algebra.affine_element import AffineElement, enumerate_group, product_order
from src.algebra.coxeter_types import coxeter_type_label
from src.algebra.lattice import Lattice, identity_matrix, vec_scale, vec_sub, zero_vector
from src.algebra.root_system import AffineRootData
from src.coxeter.faces import AlcoveFace, Chart, build_face
from src.utils.errors import EnumerationBudgetExceeded, InvariantViolation
from src.utils.logger_config import get_face_logger

logger = logging.getLogger(__name__)


def alcove_barycenter(affine: AffineRootData) -> tuple[Fraction, ...]:
    """An interior point of the fundamental alcove; no affine root vanishes there."""
    n = len(affine.vertices)
    total = zero_vector(affine.rank)
    for vertex in affine.vertices:
        total = tuple(a + b for a, b in zip(total, vertex))
    return vec_scale(Fraction(1, n), total)


@lru_cache(maxsize=None)
def longest_parabolic_element(affine: AffineRootData, nodes: tuple[int, ...]) -> AffineElement:
    """
    w0 of the finite parabolic subgroup W~_J, found greedily.

    Right multiplication by s_j raises the length exactly when w(a_j) is a
    positive affine root, i.e. when a_j is positive at w^-1 of an interior
    point. The loop stops at the unique element sending every a_j, j in J,
    to a negative root.
    """
    reflections = affine.reflections()
    interior = alcove_barycenter(affine)
    element = AffineElement.identity(affine.rank)
    element_inverse = element
    for _ in range(len(affine.root_system.roots) + 1):
        moved = element_inverse.apply(interior)
        step = next((j for j in nodes if affine.affine_simple_roots[j].evaluate(moved) > 0), None)
        if step is None:
            return element
        element = element * reflections[step]
        element_inverse = reflections[step] * element_inverse
    raise InvariantViolation(f"parabolic subgroup on {nodes} has no longest element")


@lru_cache(maxsize=None)
def parabolic_subgroup(affine: AffineRootData, nodes: tuple[int, ...]) -> dict[AffineElement, int]:
    """All elements of the finite parabolic W~_J with their Coxeter lengths."""
    if len(nodes) > affine.rank:
        raise EnumerationBudgetExceeded("the full affine Weyl group is infinite")
    reflections = affine.reflections()
    elements = enumerate_group([reflections[j] for j in nodes])
    return elements or {AffineElement.identity(affine.rank): 0}


def preserves_face_span(element: AffineElement, face: AlcoveFace) -> bool:
    """True when the element maps the affine span of the face to itself."""
    images = [element.apply(vertex) for vertex in face.vertices]
    return all(root.evaluate(point) == 0 for root in face.roots for point in images)


@dataclass(frozen=True)
class RelativeWeylGroup:
    """
    W~^I as affine maps of A_I, written in the chart coordinates of `chart`.

    `finite_part` lists the linear parts in BFS order; `coset_translations`
    maps each of them to a translation t_w with (w, t_w) in the group.
    Every element is (w, t_w + lambda) with lambda in the translation
    lattice. When `split` holds all t_w lie in the lattice and the chart
    origin is fixed by a complement of the translations.
    """
    face: AlcoveFace
    chart: Chart
    generator_nodes: tuple[int, ...]
    ambient_generators: tuple[AffineElement, ...]
    generators: tuple[AffineElement, ...]
    non_normalizing: tuple[int, ...]
    coxeter_nodes: tuple[int, ...]
    coxeter_matrix: tuple[tuple[Optional[int], ...], ...]
    finite_part: tuple[tuple[tuple[Fraction, ...], ...], ...]
    coset_translations: dict = field(hash=False, compare=False)
    translation_lattice: Lattice = field(default_factory=lambda: Lattice(0))
    split: bool = False
    special_vertex: Optional[int] = None
    certified: bool = False
    type_label: Optional[str] = None
    failures: tuple[str, ...] = ()

    @property
    def dim(self) -> int:
        return self.chart.dim

    @property
    def finite_order(self) -> int:
        return len(self.finite_part)

    @property
    def translation_rank(self) -> int:
        return self.translation_lattice.rank

    def finite_elements(self) -> list[AffineElement]:
        return [AffineElement(linear, zero_vector(self.dim)) for linear in self.finite_part]

    def lattice_matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        """Basis of Lambda_I as columns, in chart coordinates."""
        return self.translation_lattice.basis

    def factor(self, element: AffineElement) -> tuple[tuple[tuple[Fraction, ...], ...], tuple[Fraction, ...]]:
        """
        Split an element as (w, lambda) with lambda in Lambda_I.

        Raises InvariantViolation when the linear part is not in W^I or the
        translation is off the lattice coset.
        """
        linear = element.linear
        if linear not in self.coset_translations:
            raise InvariantViolation(f"linear part {linear} is not in the finite part")
        offset = vec_sub(element.translation, self.coset_translations[linear])
        if not self.translation_lattice.contains(offset):
            raise InvariantViolation(f"translation {element.translation} is off its lattice coset")
        if self.split:
            return linear, element.translation
        return linear, offset

    def contains(self, element: AffineElement) -> bool:
        try:
            self.factor(element)
        except InvariantViolation:
            return False
        return True


def _relative_generators(face: AlcoveFace, affine: AffineRootData) -> tuple[list[int], list[AffineElement], list[int]]:
    base = longest_parabolic_element(affine, face.nodes)
    nodes, elements, rejected = [], [], []
    for s in face.vertex_nodes:
        bigger = tuple(sorted(face.nodes + (s,)))
        if len(bigger) > affine.rank:
            # W~ itself is infinite; a vertex face has no candidates
            continue
        candidate = longest_parabolic_element(affine, bigger) * base
        if preserves_face_span(candidate, face):
            nodes.append(s)
            elements.append(candidate)
        else:
            rejected.append(s)
    return nodes, elements, rejected


def coset_closure(
    generators: Sequence[AffineElement], dim: int, cap: int = GROUP_ENUMERATION_CAP
) -> tuple[dict, Lattice]:
    """
    Coset representatives and translation lattice of the group generated.

    Returns ({w: t_w}, L) such that the group is the union of the cosets
    (w, t_w + L). Each representative is multiplied by every generator
    once; a product landing on a known linear part adds its translation
    difference to L. L only grows, so earlier checks stay valid, and it is
    finally made stable under the linear parts.
    """
    identity = identity_matrix(dim)
    reps: dict = {identity: zero_vector(dim)}
    lattice = Lattice(dim)
    queue = deque([identity])
    while queue:
        linear = queue.popleft()
        current = AffineElement(linear, reps[linear])
        for gen in generators:
            product = current * gen
            known = reps.get(product.linear)
            if known is None:
                reps[product.linear] = product.translation
                if len(reps) > cap:
                    raise EnumerationBudgetExceeded(f"finite part exceeded {cap} elements")
                queue.append(product.linear)
                continue
            difference = vec_sub(product.translation, known)
            if any(difference) and not lattice.contains(difference):
                lattice = lattice.extended([difference])
    changed = True
    while changed:
        changed = False
        for gen in generators:
            images = [gen.linear_part().apply(b) for b in lattice.basis]
            if not all(lattice.contains(v) for v in images):
                lattice = lattice.extended(images)
                changed = True
    return reps, lattice


def _coxeter_data(nodes: Sequence[int], generators: Sequence[AffineElement]):
    pairs = [(s, g) for s, g in zip(nodes, generators) if not g.is_identity()]
    matrix = tuple(
        tuple(1 if i == j else product_order(a, b, PRODUCT_ORDER_CAP) for j, (_, b) in enumerate(pairs))
        for i, (_, a) in enumerate(pairs)
    )
    return tuple(s for s, _ in pairs), matrix


def semidirect_failures(group: RelativeWeylGroup, word_length: int = SEMIDIRECT_WORD_LENGTH) -> list[str]:
    """Check the factorization W^I x Lambda_I on the ball of the given word length."""
    if not group.generators:
        return []
    failures = []
    ball = enumerate_group(list(group.generators), max_length=word_length)
    for element in ball:
        try:
            group.factor(element)
        except InvariantViolation as e:
            failures.append(str(e))
    if not group.split:
        failures.append("no vertex of the face splits the translation lattice")
    logger.debug(f"semidirect check on {len(ball)} elements, {len(failures)} failures")
    return failures


def relative_weyl_group(face: AlcoveFace, affine: AffineRootData, certify: bool = False) -> RelativeWeylGroup:
    """
    Build W~^I for a face.

    With `certify` (faces carrying cuspidal data) the Coxeter type is
    named and every structural check is fatal; otherwise failures are
    recorded on the result.
    """
    face_log = get_face_logger(face.type_label, face.label, "engine.coxeter")
    nodes, ambient, rejected = _relative_generators(face, affine)
    if rejected:
        face_log.debug(f"candidates {['a%d' % s for s in rejected]} do not normalize W~_I")

    failures: list[str] = []
    chosen = None
    for vertex in face.vertex_nodes:
        chart = face.chart(vertex)
        generators = [chart.restrict(g) for g in ambient]
        reps, lattice = coset_closure(generators, chart.dim)
        split = all(lattice.contains(t) for t in reps.values())
        if chosen is None or split:
            chosen = (vertex, chart, generators, reps, lattice, split)
        if split:
            break
    assert chosen is not None
    vertex, chart, generators, reps, lattice, split = chosen
    if split:
        reps = {linear: zero_vector(chart.dim) for linear in reps}

    for s, gen in zip(nodes, generators):
        if not (gen * gen).is_identity():
            failures.append(f"v_a{s} is not an involution on A_I")
        wall = [x for j, x in zip(face.vertex_nodes, face.vertices) if j != s]
        ambient_gen = ambient[nodes.index(s)]
        if any(ambient_gen.apply(x) != x for x in wall):
            failures.append(f"v_a{s} does not fix the wall a{s} of A_I")

    coxeter_nodes, matrix = _coxeter_data(nodes, generators)
    if any(m == 1 for i, row in enumerate(matrix) for j, m in enumerate(row) if i != j):
        failures.append("two generators coincide on A_I")

    finite_part = tuple(reps)
    group = RelativeWeylGroup(
        face=face,
        chart=chart,
        generator_nodes=tuple(nodes),
        ambient_generators=tuple(ambient),
        generators=tuple(generators),
        non_normalizing=tuple(rejected),
        coxeter_nodes=coxeter_nodes,
        coxeter_matrix=matrix,
        finite_part=finite_part,
        coset_translations=reps,
        translation_lattice=lattice,
        split=split,
        special_vertex=vertex if split else None,
        certified=certify,
    )

    if certify:
        failures.extend(semidirect_failures(group))
        if failures:
            raise InvariantViolation(f"{face.type_label} face {face.label}: " + "; ".join(failures[:5]))
        type_label = coxeter_type_label(matrix)
    else:
        type_label = None
        if not split:
            failures.append("no vertex of the face splits the translation lattice")

    face_log.debug(
        f"|W^I| = {len(finite_part)}, rank Lambda = {lattice.rank}, split at "
        f"{'a%d' % vertex if split else 'none'}, type {type_label}"
    )
    return replace(group, type_label=type_label, failures=tuple(failures))


def cocharacter_index(face: AlcoveFace, group: RelativeWeylGroup) -> int:
    """
    [Lambda_I : X_*(Z_I^0)].

    In chart coordinates X_*(Z_I^0) is the standard lattice Z^d, so the
    index is 1 / covolume(Lambda_I) once the containment is confirmed.
    """
    lattice = group.translation_lattice
    dim = group.dim
    if dim == 0:
        return 1
    if lattice.rank != dim:
        raise InvariantViolation(
            f"{face.type_label} face {face.label}: Lambda_I has rank {lattice.rank} < {dim}"
        )
    for k in range(dim):
        unit = tuple(Fraction(int(i == k)) for i in range(dim))
        if not lattice.contains(unit):
            raise InvariantViolation(
                f"{face.type_label} face {face.label}: cocharacter e{k} is not a translation of W~^I"
            )
    index = 1 / lattice.covolume()
    if index.denominator != 1:
        raise InvariantViolation(f"{face.type_label} face {face.label}: non-integral index {index}")
    return int(index)


def generated_subgroup(group: RelativeWeylGroup, nodes: Iterable[int]) -> set[AffineElement]:
    """Elements of the subgroup generated by {v_s : s in nodes} (must be finite)."""
    wanted = set(nodes)
    generators = [g for s, g in zip(group.generator_nodes, group.generators) if s in wanted]
    if not generators:
        return {AffineElement.identity(group.dim)}
    return set(enumerate_group(generators))


def normalizer_quotient(
    affine: AffineRootData, face: AlcoveFace, outer_nodes: Sequence[int], chart: Optional[Chart] = None
) -> set[AffineElement]:
    """
    N_{W~_J}(W~_I)/W~_I by brute force, for I a subset of J.

    Each normalizing element is restricted to A_I; W~_I is the kernel of
    that restriction, so distinct images are distinct cosets.
    """
    outer = tuple(sorted(set(outer_nodes)))
    if not set(face.nodes) <= set(outer):
        raise InvariantViolation(f"face {face.label} is not contained in {outer}")
    chart = chart or face.chart()
    inner = parabolic_subgroup(affine, face.nodes)
    reflections = affine.reflections()
    quotient = set()
    for element in parabolic_subgroup(affine, outer):
        inverse = element.inverse()
        if all(element * reflections[i] * inverse in inner for i in face.nodes):
            quotient.add(chart.restrict(element))
    logger.debug(f"N_W~{outer}(W~_{face.nodes})/W~_I has {len(quotient)} elements")
    return quotient


def parabolic_lemma_holds(
    affine: AffineRootData,
    inner: Sequence[int],
    outer: Sequence[int],
    group: Optional[RelativeWeylGroup] = None,
) -> bool:
    """The subgroup of W~^I generated by v_s, s in J minus I, equals N_{W~_J}(W~_I)/W~_I."""
    face = build_face(affine, inner)
    group = group or relative_weyl_group(face, affine)
    extra = set(outer) - set(face.nodes)
    generated = generated_subgroup(group, extra)
    brute = normalizer_quotient(affine, face, outer, group.chart)
    if generated != brute:
        logger.warning(
            f"{face.type_label}: generated subgroup ({len(generated)}) differs from "
            f"normalizer quotient ({len(brute)}) for I={face.label}, J={sorted(outer)}"
        )
    return generated == brute
