# src/verify/suites.py
"""
Self-verification suites.

The golden suite compares the decompositions and per-dimension face labels of
the rank <= 3 types with the shipped golden data. invariants runs the
structural checks of every layer: root closure, Molien identities, the
normalizer lemma, the semidirect splitting, homology certificates and the
Hom vanishing and orthogonality properties.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, List, Optional

from pydantic import ValidationError

from config.schemas import CharacterName, CheckModel, GoldenComponent, GoldenExample, VerificationModel, VerifySuite
from config.settings import (
    GOLDEN_TYPES,
    HOM_VANISHING_BOUND,
    HOMOLOGY_TRUNCATIONS,
    LEMMA_CHECK_TYPES,
    MOLIEN_CHECK_ORDER,
    ROOT_CLOSURE_TYPES,
)
from src.algebra.root_system import affine_root_data, build_root_system
from src.blocks.decomposition import decompose, irreducible_parameters
from src.blocks.type_context import TypeContext
from src.coxeter.relative_weyl import cocharacter_index, parabolic_lemma_holds
from src.coxeter.torsion import same_orbit
from src.cuspidal.table import CuspidalTable
from src.homology.coset_complex import build_coset_complex, check_colimit_hypotheses
from src.homology.report import homology_report
from src.molien.hom import adjoint_quotient_series, cross_block_hom, hom_series, weyl_group_action
from src.utils.config_loader import load_golden_config
from src.utils.errors import EngineError, UnclassifiedCuspidalError
from src.utils.logger_config import get_face_logger

logger = logging.getLogger(__name__)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_model(self) -> CheckModel:
        return CheckModel(name=self.name, passed=self.passed, detail=self.detail)


def _guarded(name: str, body: Callable[[], Check]) -> Check:
    """Run one check; an engine error counts as a failure naming its message."""
    try:
        return body()
    except EngineError as e:
        logger.error(f"{name}: {e}")
        return Check(name, False, f"{type(e).__name__}: {e}")


def load_golden_examples() -> List[GoldenExample]:
    data = load_golden_config()
    examples = []
    for raw in data.get("examples", []):
        entry = dict(raw)
        entry["components"] = [
            GoldenComponent(torus_rank=c[0], group=c[1], multiplicity=c[2]) for c in entry["components"]
        ]
        try:
            examples.append(GoldenExample.model_validate(entry))
        except ValidationError as e:
            raise ValueError(f"golden example {entry.get('type')}: {e}") from e
    return examples


# --- golden examples -----------------------------------------------------------


def _counter_diff(expected: Counter, actual: Counter) -> str:
    missing = expected - actual
    extra = actual - expected
    parts = []
    if missing:
        parts.append(f"missing {sorted(missing.elements())}")
    if extra:
        parts.append(f"unexpected {sorted(extra.elements())}")
    return "; ".join(parts)


def check_golden_example(example: GoldenExample, table: Optional[CuspidalTable] = None) -> Check:
    name = f"golden {example.type}"
    context = TypeContext(example.type, table)
    try:
        decomposition = decompose(context)
    except UnclassifiedCuspidalError as e:
        return Check(name, False, f"face {e.face}: {e}")

    problems = []
    expected = Counter((c.torus_rank, c.group, c.multiplicity) for c in example.components)
    diff = _counter_diff(expected, decomposition.profile())
    if diff:
        problems.append(f"components: {diff}")

    for dim, labels in sorted(example.figure_labels.items()):
        faces = [f for f in context.faces if f.z_dimension == dim]
        actual = Counter(context.assignment(f).count for f in faces)
        if actual != Counter(labels):
            values = ", ".join(f"{f.label}={context.assignment(f).count}" for f in faces)
            problems.append(f"dimension {dim}: expected labels {sorted(labels)}, faces {values}")
            for f in faces:
                get_face_logger(context.type_label, f.label, "engine.verify").error(
                    f"c_I = {context.assignment(f).count} in a dimension whose labels disagree"
                )

    if example.text:
        diff = _counter_diff(Counter(example.text.split(" ⊔ ")), Counter(decomposition.text.split(" ⊔ ")))
        if diff:
            problems.append(f"text: {diff}")
    if problems:
        return Check(name, False, " | ".join(problems))
    return Check(name, True, decomposition.text)


def paper_examples_suite(table: Optional[CuspidalTable] = None) -> List[Check]:
    return [
        _guarded(f"golden {example.type}", lambda e=example: check_golden_example(e, table))
        for example in load_golden_examples()
    ]


# --- invariants ----------------------------------------------------------------


def check_root_closure(type_label: str) -> Check:
    system = build_root_system(type_label)
    weights = system.all_roots
    for root in weights:
        for i, alpha in enumerate(system.simple_roots):
            image = tuple(w - root[i] * a for w, a in zip(root, alpha))
            if image not in weights:
                return Check(f"roots {type_label}", False, f"s{i + 1} sends {root} outside the roots")
    positive = len(system.positive_roots)
    if sum(d - 1 for d in system.weyl_degrees) != positive:
        return Check(f"roots {type_label}", False, f"degrees {system.weyl_degrees} vs {positive} positive roots")
    return Check(f"roots {type_label}", True, f"{len(weights)} roots, degrees {list(system.weyl_degrees)}")


def check_molien(type_label: str) -> Check:
    series = adjoint_quotient_series(build_root_system(type_label), MOLIEN_CHECK_ORDER)
    return Check(f"molien {type_label}", True, series.render())


def check_constant_sheaf(type_label: str) -> Check:
    system = build_root_system(type_label)
    action = weyl_group_action(system)
    signed = hom_series(action, CharacterName.SIGN, CharacterName.SIGN, MOLIEN_CHECK_ORDER)
    expected = adjoint_quotient_series(system, MOLIEN_CHECK_ORDER)
    return Check(f"constant sheaf {type_label}", signed == expected, signed.render())


def check_lemma(type_label: str, context: Optional[TypeContext] = None) -> Check:
    """
    N_{W~_J}(W~_I)/W~_I restricted to A_I equals the relative group of I in J.

    The statement needs c_I > 0, so I runs over the block faces and J over
    the proper subsets of the affine nodes containing it.
    """
    context = context or TypeContext(type_label)
    affine = context.affine
    nodes = range(affine.rank + 1)
    failures = []
    pairs = 0
    for face in context.block_faces():
        rest = [j for j in nodes if j not in face.nodes]
        for extra in range(affine.rank - len(face.nodes) + 1):
            for added in combinations(rest, extra):
                outer = tuple(sorted(face.nodes + added))
                pairs += 1
                if not parabolic_lemma_holds(affine, face.nodes, outer, context.relative_group(face)):
                    failures.append(f"I={list(face.nodes)}, J={list(outer)}")
    return Check(f"normalizer lemma {type_label}", not failures, "; ".join(failures) or f"{pairs} pairs")


def check_semidirect(type_label: str) -> Check:
    context = TypeContext(type_label)
    indices = []
    for face in context.block_faces():
        group = context.relative_group(face)
        indices.append(f"{face.label}:{cocharacter_index(face, group)}")
    return Check(f"semidirect {type_label}", True, ", ".join(indices))


def check_finite_homology(type_label: str) -> Check:
    system = build_root_system(type_label)
    report = homology_report(build_coset_complex(system.simple_reflections()))
    colimit = check_colimit_hypotheses(system.simple_reflections(), None)
    passed = report.is_sphere() and report.boundary_squares_vanish and colimit.passed
    detail = f"H = {[g.label() for g in report.groups]}" + ("" if colimit.passed else f"; {colimit.failures[0]}")
    return Check(f"coset complex {type_label}", passed, detail)


def check_affine_homology(type_label: str) -> Check:
    affine = affine_root_data(build_root_system(type_label))
    failures = []
    for truncation in HOMOLOGY_TRUNCATIONS:
        report = homology_report(build_coset_complex(affine.reflections(), truncation))
        if not report.acyclic:
            failures.append(f"N={truncation}: {[g.label() for g in report.nonzero()]}")
    colimit = check_colimit_hypotheses(affine.reflections())
    failures.extend(colimit.failures)
    return Check(f"affine coset complex {type_label}", not failures, "; ".join(failures) or "acyclic")


def check_hom_vanishing(type_label: str) -> Check:
    parameters = irreducible_parameters(type_label, HOM_VANISHING_BOUND)
    failures = []
    for first in parameters:
        for second in parameters:
            series = cross_block_hom(first, second)
            related = first.key == second.key and same_orbit(first.lattice_action, first.point, second.point)
            if related and series[0] == 0:
                failures.append(f"End of {first.face_nodes}/{first.point.label()} has no identity")
            if not related and not series.is_zero():
                failures.append(f"Hom({first.point.label()}, {second.point.label()}) = {series.render()}")
    return Check(f"hom vanishing {type_label}", not failures, "; ".join(failures[:3]) or f"{len(parameters)} parameters")


def check_orthogonality(type_label: str) -> Check:
    """Degree-0 Hom between built-in characters is their inner product."""
    system = build_root_system(type_label)
    action = weyl_group_action(system)
    names = list(CharacterName)
    # rank one: the reflection character is the sign
    same = {(a, b) for a in names for b in names if a == b}
    if system.rank == 1:
        same |= {(CharacterName.SIGN, CharacterName.REFLECTION), (CharacterName.REFLECTION, CharacterName.SIGN)}
    failures = []
    for a in names:
        for b in names:
            expected = Fraction(int((a, b) in same))
            value = hom_series(action, a, b, 0)[0]
            if value != expected:
                failures.append(f"<{a.value}, {b.value}> = {value}, expected {expected}")
    return Check(f"orthogonality {type_label}", not failures, "; ".join(failures) or f"|W| = {action.order}")


def invariants_suite() -> List[Check]:
    checks: List[Check] = []
    for t in ROOT_CLOSURE_TYPES:
        checks.append(_guarded(f"roots {t}", lambda t=t: check_root_closure(t)))
    for t in GOLDEN_TYPES:
        checks.append(_guarded(f"molien {t}", lambda t=t: check_molien(t)))
        checks.append(_guarded(f"constant sheaf {t}", lambda t=t: check_constant_sheaf(t)))
        checks.append(_guarded(f"semidirect {t}", lambda t=t: check_semidirect(t)))
    for t in LEMMA_CHECK_TYPES:
        checks.append(_guarded(f"normalizer lemma {t}", lambda t=t: check_lemma(t)))
    for t in ("A1", "A2", "B2"):
        checks.append(_guarded(f"coset complex {t}", lambda t=t: check_finite_homology(t)))
        checks.append(_guarded(f"orthogonality {t}", lambda t=t: check_orthogonality(t)))
    for t in ("A1", "A2"):
        checks.append(_guarded(f"affine coset complex {t}", lambda t=t: check_affine_homology(t)))
    checks.append(_guarded("hom vanishing A1", lambda: check_hom_vanishing("A1")))
    return checks


def run_suite(suite: VerifySuite, table: Optional[CuspidalTable] = None) -> VerificationModel:
    suite = VerifySuite(suite)
    if suite == VerifySuite.PAPER_EXAMPLES:
        checks = paper_examples_suite(table)
        unit = "types"
    else:
        checks = invariants_suite()
        unit = "checks"
    passed = sum(c.passed for c in checks)
    summary = f"{passed}/{len(checks)} {unit} passed"
    logger.info(f"verify {suite.value}: {summary}")
    return VerificationModel(
        suite=suite, passed=passed == len(checks), summary=summary, checks=[c.to_model() for c in checks]
    )
