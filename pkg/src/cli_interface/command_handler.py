# src/cli_interface/command_handler.py
import logging
from fractions import Fraction
from typing import Dict, Optional, Tuple

from pydantic import BaseModel

from config.schemas import (
    AffineElementModel,
    CenterModel,
    CharacterName,
    CuspidalFaceModel,
    CuspidalModel,
    FaceModel,
    FacesModel,
    GeneratorModel,
    GroupModel,
    ParametersModel,
    RelativeWeylModel,
    SeriesModel,
    VerifySuite,
)
from config.settings import EXIT_FAILURE, EXIT_OK
from src.algebra.affine_element import AffineElement
from src.blocks.decomposition import decompose, irreducible_parameters, parameter_model
from src.blocks.restriction import induction_structure, restriction_structure
from src.blocks.type_context import TypeContext
from src.coxeter.faces import AlcoveFace
from src.coxeter.group_labels import finite_part_isomorphism_label
from src.coxeter.relative_weyl import RelativeWeylGroup, cocharacter_index
from src.coxeter.torsion import TorsionPoint, lattice_action, stabilizer
from src.cuspidal.table import CuspidalAssignment, CuspidalTable, load_cuspidal_table
from src.homology.coset_complex import build_coset_complex, check_colimit_hypotheses
from src.homology.report import homology_report
from src.molien.hom import IrreducibleParameter, MatrixGroupAction, adjoint_quotient_series, cross_block_hom
from src.molien.series import GradedSeries
from src.utils.errors import DomainError, InvariantViolation
from src.verify.suites import run_suite

logger = logging.getLogger(__name__)

Result = Tuple[int, BaseModel, str]


def _fractions(values) -> list:
    return [str(Fraction(x)) for x in values]


def series_model(series: GradedSeries) -> SeriesModel:
    return SeriesModel(order=series.order, coefficients=_fractions(series.coefficients), text=series.render())


def face_model(face: AlcoveFace) -> FaceModel:
    return FaceModel(
        face=list(face.names),
        label=face.label,
        z_dimension=face.z_dimension,
        factors=[f.label for f in face.factors],
        signature=face.signature,
        cocharacter_fixed_lattice=[list(b) for b in face.cocharacter_fixed_lattice],
        vertices=[_fractions(v) for v in face.vertices],
    )


def _element_model(element: AffineElement) -> AffineElementModel:
    return AffineElementModel(
        linear=[_fractions(row) for row in element.linear], translation=_fractions(element.translation)
    )


def relative_weyl_model(group: RelativeWeylGroup) -> RelativeWeylModel:
    label = finite_part_isomorphism_label(group.finite_elements())
    try:
        index: Optional[int] = cocharacter_index(group.face, group)
    except InvariantViolation:
        index = None
    return RelativeWeylModel(
        type=group.face.type_label,
        face=list(group.face.names),
        chart_base=_fractions(group.chart.base),
        chart_basis=[list(b) for b in group.chart.basis],
        generators=[
            GeneratorModel(node=f"a{s}", element=_element_model(g))
            for s, g in zip(group.generator_nodes, group.generators)
        ],
        non_normalizing=[f"a{s}" for s in group.non_normalizing],
        coxeter_nodes=[f"a{s}" for s in group.coxeter_nodes],
        coxeter_matrix=[list(row) for row in group.coxeter_matrix],
        type_label=group.type_label,
        finite_part=GroupModel(label=label.label, order=label.order),
        translation_rank=group.translation_rank,
        translation_lattice=[_fractions(b) for b in group.translation_lattice.basis],
        cocharacter_index=index,
        split=group.split,
        special_vertex=None if group.special_vertex is None else f"a{group.special_vertex}",
        failures=list(group.failures),
    )


def cuspidal_face_model(assignment: CuspidalAssignment) -> CuspidalFaceModel:
    center = assignment.center
    return CuspidalFaceModel(
        face=list(assignment.face.names),
        signature=assignment.face.signature,
        center=CenterModel(
            invariants=list(center.invariants),
            order=center.order,
            projection_orders=[list(p) for p in center.projection_orders()],
        ),
        c=assignment.count,
        rule=assignment.rule,
        source=assignment.record.source if assignment.record else None,
        status=assignment.record.status if assignment.record else None,
    )


class CommandHandler:
    """
    Translates parsed command-line arguments into engine calls.

    Each handler returns (exit code, result model, text rendering); the
    caller picks the output format.
    """

    def __init__(self, table_path: Optional[str] = None):
        """
        Args:
            table_path: Cuspidal table overriding the shipped one, or None.
        """
        self.table: CuspidalTable = load_cuspidal_table(table_path)
        self.table_path = table_path
        self._contexts: Dict[str, TypeContext] = {}
        logger.debug(f"CommandHandler initialized with table {self.table.origin}")

    def context(self, type_label: Optional[str]) -> TypeContext:
        if not type_label:
            raise DomainError("this command needs --type")
        if type_label not in self._contexts:
            self._contexts[type_label] = TypeContext(type_label, self.table)
        return self._contexts[type_label]

    def execute(self, args) -> Result:
        """Route a parsed command to its handler."""
        command = args.command
        if command == "decompose":
            return self._handle_decompose(args)
        elif command == "faces":
            return self._handle_faces(args)
        elif command == "relweyl":
            return self._handle_relweyl(args)
        elif command == "cuspidal":
            return self._handle_cuspidal(args)
        elif command == "hom":
            return self._handle_hom(args)
        elif command == "adjoint-series":
            return self._handle_adjoint_series(args)
        elif command == "homology":
            return self._handle_homology(args)
        elif command == "verify":
            return self._handle_verify(args)
        elif command == "params":
            return self._handle_params(args)
        elif command == "restrict":
            return self._handle_restrict(args)
        raise DomainError(f"unknown command {command!r}")

    def _handle_decompose(self, args) -> Result:
        decomposition = decompose(self.context(args.type))
        lines = [decomposition.text]
        for block in decomposition.blocks:
            for note in block.notes:
                lines.append(f"  note [{block.face.label}]: {note}")
        return EXIT_OK, decomposition.to_model(), "\n".join(lines)

    def _handle_faces(self, args) -> Result:
        context = self.context(args.type)
        model = FacesModel(type=context.type_label, faces=[face_model(f) for f in context.faces])
        lines = [
            f"{f.label:<16} dim {f.z_dimension}  {f.signature or '(torus)'}" for f in context.faces
        ]
        return EXIT_OK, model, "\n".join(lines)

    def _handle_relweyl(self, args) -> Result:
        context = self.context(args.type)
        face = context.face_from_selector(args.face)
        model = relative_weyl_model(context.relative_group(face))
        text = (
            f"{model.type} face {face.label}: W^I = {model.finite_part.label} "
            f"(order {model.finite_part.order}), rank Lambda_I = {model.translation_rank}, "
            f"Coxeter type {model.type_label or 'uncertified'}"
        )
        if model.non_normalizing:
            text += f"\n  non-normalizing: {', '.join(model.non_normalizing)}"
        return EXIT_OK, model, text

    def _handle_cuspidal(self, args) -> Result:
        context = self.context(args.type)
        faces = [context.face_from_selector(args.face)] if args.face is not None else context.faces
        entries = [cuspidal_face_model(context.assignment(f)) for f in faces]
        model = CuspidalModel(type=context.type_label, faces=entries)
        lines = [
            f"{','.join(e.face) or '-':<16} {e.signature or '(torus)':<14} center {e.center.invariants or [1]}  c = {e.c} ({e.rule})"
            for e in entries
        ]
        return EXIT_OK, model, "\n".join(lines)

    def _parameter(self, context: TypeContext, selector: str, point_text: str, index: int, rho) -> IrreducibleParameter:
        face = context.face_from_selector(selector)
        c = context.cuspidal_multiplicity(face)
        if not c:
            raise DomainError(f"face {face.label} of {context.type_label} carries no block (c = {c})")
        if not 1 <= index <= c:
            raise DomainError(f"cuspidal index {index} out of range 1..{c} for face {face.label}")
        group = context.relative_group(face)
        action = lattice_action(group)
        point = TorsionPoint.parse(point_text, action.dim)
        indices = stabilizer(action, point)
        stab = MatrixGroupAction(tuple(group.finite_part[k] for k in indices))
        return IrreducibleParameter(context.type_label, face.nodes, index, point, action, stab, rho)

    def _handle_hom(self, args) -> Result:
        context = self.context(args.type)
        first = self._parameter(context, args.face, args.point, args.index, CharacterName(args.rho))
        other_face = args.other_face if args.other_face is not None else args.face
        other_point = args.other_point if args.other_point is not None else args.point
        second = self._parameter(context, other_face, other_point, args.other_index or args.index, CharacterName(args.rho_prime))
        series = cross_block_hom(first, second, args.order)
        return EXIT_OK, series_model(series), series.render()

    def _handle_adjoint_series(self, args) -> Result:
        context = self.context(args.type)
        series = adjoint_quotient_series(context.root_system, args.order)
        return EXIT_OK, series_model(series), series.render()

    def _handle_homology(self, args) -> Result:
        context = self.context(args.type)
        if args.affine:
            generators = context.affine.reflections()
            truncation = args.length
        else:
            generators = context.root_system.simple_reflections()
            truncation = None
        report = homology_report(build_coset_complex(generators, truncation))
        colimit = check_colimit_hypotheses(generators, truncation)
        model = report.to_model(context.type_label, args.affine, colimit)
        lines = [f"H_{g.degree} = {g.label()}" for g in report.groups]
        lines.append("acyclic" if report.acyclic else f"nonzero in degrees {[g.degree for g in report.nonzero()]}")
        if model.note:
            lines.append(f"note: {model.note}")
        return EXIT_OK, model, "\n".join(lines)

    def _handle_verify(self, args) -> Result:
        table = self.table if self.table_path else None
        model = run_suite(VerifySuite(args.suite), table)
        lines = [f"[{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}" for c in model.checks]
        lines.append(model.summary)
        return (EXIT_OK if model.passed else EXIT_FAILURE), model, "\n".join(lines)

    def _handle_params(self, args) -> Result:
        context = self.context(args.type)
        parameters = [parameter_model(p) for p in irreducible_parameters(context, args.bound)]
        model = ParametersModel(type=context.type_label, denominator_bound=args.bound, parameters=parameters)
        lines = [
            f"{','.join(p.face) or '-':<12} #{p.cuspidal_index}  s = ({', '.join(p.point)})  "
            f"stabilizer {p.stabilizer.label}, {p.irreducible_count} irreducibles"
            for p in parameters
        ]
        return EXIT_OK, model, "\n".join(lines)

    def _handle_restrict(self, args) -> Result:
        context = self.context(args.type)
        build = induction_structure if args.induction else restriction_structure
        structure = build(context, args.small, args.large, include_empty=args.all_faces)
        lines = []
        for entry in structure.entries:
            label = entry.source.label
            if not entry.is_block:
                lines.append(f"{label:<12} (c = 0, no block)")
            elif entry.zero:
                lines.append(f"{label:<12} -> 0")
            else:
                lines.append(f"{label:<12} -> {label} along order {entry.subgroup_order} in {entry.group_order}")
        return EXIT_OK, structure.to_model(), "\n".join(lines)
