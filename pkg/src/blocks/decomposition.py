# src/blocks/decomposition.py
"""
The block decomposition of character sheaves.

Every face I with c_I > 0 contributes c_I copies of the component
L(S_I)/W^I: a loop space of a torus of rank rank(Lambda_I) divided by the
finite part of the relative Weyl group. Faces of dimension zero give points.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Union

from config.schemas import ComponentModel, DecompositionModel, GroupModel, ParameterModel
from config.settings import DEFAULT_DENOMINATOR_BOUND
from src.blocks.type_context import TypeContext
from src.coxeter.faces import AlcoveFace
from src.coxeter.group_labels import GroupLabel, finite_part_isomorphism_label
from src.coxeter.relative_weyl import RelativeWeylGroup
from src.coxeter.torsion import lattice_action, orbit_representatives, stabilizer
from src.molien.hom import IrreducibleParameter, MatrixGroupAction
from src.molien.series import GradedSeries
from src.utils.errors import DomainError, InvariantViolation
from src.utils.logger_config import get_face_logger

logger = logging.getLogger(__name__)

POINT = "*"


def render_component(torus_rank: int, group_label: str, multiplicity: int = 1) -> str:
    """'L(C^x)^d/G', 'L(C^x)/G' or '*', with '^⊔c' for multiplicity c > 1."""
    if torus_rank == 0:
        text = POINT
    elif torus_rank == 1:
        text = f"L(C^x)/{group_label}"
    else:
        text = f"L(C^x)^{torus_rank}/{group_label}"
    if multiplicity > 1:
        wrapped = text if text == POINT else f"({text})"
        return f"{wrapped}^⊔{multiplicity}"
    return text


@dataclass(frozen=True)
class Block:
    face: AlcoveFace
    c: int
    torus_rank: int
    group: GroupLabel
    notes: tuple[str, ...] = ()
    relative_group: Optional[RelativeWeylGroup] = field(default=None, compare=False, repr=False)

    @property
    def z_dimension(self) -> int:
        return self.face.z_dimension

    @property
    def is_cuspidal(self) -> bool:
        return self.face.is_vertex

    @property
    def description(self) -> str:
        return render_component(self.torus_rank, self.group.label)

    def render(self) -> str:
        return render_component(self.torus_rank, self.group.label, self.c)

    def profile(self) -> tuple[int, str, int]:
        return (self.torus_rank, self.group.label, self.c)

    def to_model(self) -> ComponentModel:
        return ComponentModel(
            face=list(self.face.names),
            c=self.c,
            torus_rank=self.torus_rank,
            group=GroupModel(label=self.group.label, order=self.group.order),
            cuspidal=self.is_cuspidal,
            description=self.description,
            z_dimension=self.z_dimension,
            notes=list(self.notes),
        )


@dataclass(frozen=True)
class BlockDecomposition:
    type_label: str
    blocks: tuple[Block, ...]

    @property
    def cuspidal_total(self) -> int:
        """Sum of c_I over the vertex faces: the number of zero-dimensional components."""
        return sum(b.c for b in self.blocks if b.is_cuspidal)

    @property
    def text(self) -> str:
        return " ⊔ ".join(b.render() for b in self.blocks)

    def profile(self) -> Counter:
        """Multiset of (torus rank, group label, multiplicity)."""
        return Counter(b.profile() for b in self.blocks)

    def block(self, nodes) -> Block:
        nodes = tuple(sorted(nodes))
        for b in self.blocks:
            if b.face.nodes == nodes:
                return b
        raise DomainError(f"{self.type_label}: face {nodes} carries no block")

    def to_model(self) -> DecompositionModel:
        return DecompositionModel(
            type=self.type_label,
            components=[b.to_model() for b in self.blocks],
            cuspidal_total=self.cuspidal_total,
            text=self.text,
        )


def _as_context(source: Union[str, TypeContext]) -> TypeContext:
    return source if isinstance(source, TypeContext) else TypeContext(source)


def build_block(context: TypeContext, face: AlcoveFace) -> Block:
    face_log = get_face_logger(context.type_label, face.label, "engine.blocks")
    c = context.assignment(face).count
    group = context.relative_group(face)
    label = finite_part_isomorphism_label(group.finite_elements())
    notes = []
    if group.translation_rank > face.z_dimension:
        raise InvariantViolation(
            f"{context.type_label} face {face.label}: torus rank {group.translation_rank} "
            f"exceeds dim z_I = {face.z_dimension}"
        )
    if group.translation_rank == 0 and label.order > 1:
        notes.append(f"rendered as a point although W^I is {label.label}")
        face_log.warning(notes[-1])
    if not label.recognized:
        coxeter = f", Coxeter type {group.type_label}" if group.type_label else ""
        notes.append(f"finite part not matched to a known family: {label.label}{coxeter}")
    face_log.debug(f"block c={c}, torus rank {group.translation_rank}, W^I = {label.label}")
    return Block(face, c, group.translation_rank, label, tuple(notes), group)


def decompose(source: Union[str, TypeContext]) -> BlockDecomposition:
    """
    All components (L S_I / W^I)^{⊔ c_I}, sorted by (|I|, I).

    Raises UnclassifiedCuspidalError when some face is not covered by the
    cuspidal table.
    """
    context = _as_context(source)
    blocks = tuple(build_block(context, face) for face in context.block_faces())

    principal = [b for b in blocks if not b.face.nodes]
    if len(principal) != 1:
        raise InvariantViolation(f"{context.type_label}: expected one block at I = ∅, found {len(principal)}")
    top = principal[0]
    if top.group.order != context.root_system.weyl_order or top.torus_rank != context.rank:
        raise InvariantViolation(
            f"{context.type_label}: the I = ∅ block has W^I of order {top.group.order} "
            f"and torus rank {top.torus_rank}, not W and {context.rank}"
        )
    decomposition = BlockDecomposition(context.type_label, blocks)
    logger.info(f"{context.type_label}: {decomposition.text}")
    return decomposition


def end_algebra_series(block: Block, order: int) -> GradedSeries:
    """Poincare series |W^I| (1 - t^2)^(-dim z_I) of the endomorphism algebra of a block."""
    if order < 0:
        raise DomainError(f"truncation order must be >= 0, got {order}")
    denominator = GradedSeries.one(order) - GradedSeries.monomial(1, 2, order)
    series = GradedSeries.one(order)
    for _ in range(block.z_dimension):
        series = series / denominator
    return series.scale(block.group.order)


def irreducible_parameters(
    source: Union[str, TypeContext], bound: int = DEFAULT_DENOMINATOR_BOUND
) -> list[IrreducibleParameter]:
    """
    Parameters (I, cuspidal index, s) with s a W^I-orbit representative of
    torsion points of S_I whose denominators divide `bound`.

    rho stays trivial here; the number of choices for it is the number of
    conjugacy classes of the stabilizer.
    """
    if bound < 1:
        raise DomainError(f"denominator bound must be >= 1, got {bound}")
    context = _as_context(source)
    parameters = []
    for face in context.block_faces():
        group = context.relative_group(face)
        action = lattice_action(group)
        c = context.assignment(face).count
        for point in orbit_representatives(action, bound):
            indices = stabilizer(action, point)
            stab = MatrixGroupAction(tuple(group.finite_part[k] for k in indices))
            for index in range(1, c + 1):
                parameters.append(
                    IrreducibleParameter(context.type_label, face.nodes, index, point, action, stab)
                )
    logger.debug(f"{context.type_label}: {len(parameters)} parameters with denominator | {bound}")
    return parameters


def parameter_model(parameter: IrreducibleParameter) -> ParameterModel:
    label = finite_part_isomorphism_label(parameter.stabilizer.elements())
    return ParameterModel(
        face=[f"a{i}" for i in parameter.face_nodes],
        cuspidal_index=parameter.cuspidal_index,
        point=[str(x) for x in parameter.point.coordinates],
        stabilizer=GroupModel(label=label.label, order=label.order),
        irreducible_count=len(parameter.stabilizer.classes()),
    )
