# src/blocks/restriction.py
"""
Block-level shape of parabolic restriction and induction.

For J inside J', restriction from the J'-blocks to the J-blocks kills the
summand of a face I' unless I' lies in J, and otherwise is restriction along
W^{I'}_J inside W^{I'}_{J'}, where W^{I'}_K = N_{W~_K}(W~_{I'}) / W~_{I'}.

Only faces with c_I' > 0 label blocks. Faces with c_I' = 0 are left out
unless asked for, and then carry block=False.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Union

from config.schemas import RestrictionEntryModel, RestrictionModel
from src.blocks.type_context import TypeContext
from src.coxeter.faces import AlcoveFace
from src.coxeter.relative_weyl import normalizer_quotient
from src.utils.errors import DomainError, InvariantViolation

logger = logging.getLogger(__name__)

RESTRICTION = "restriction"
INDUCTION = "induction"


@dataclass(frozen=True)
class RestrictionEntry:
    source: AlcoveFace
    c: Optional[int]
    zero: bool
    subgroup_order: Optional[int] = None
    group_order: Optional[int] = None
    inclusion_verified: bool = False

    @property
    def is_block(self) -> bool:
        """False only for faces known to carry no cuspidal data."""
        return self.c != 0

    def to_model(self) -> RestrictionEntryModel:
        return RestrictionEntryModel(
            source=list(self.source.names),
            c=self.c,
            zero=self.zero,
            subgroup_order=self.subgroup_order,
            group_order=self.group_order,
            inclusion_verified=self.inclusion_verified,
            block=self.is_block,
        )


@dataclass(frozen=True)
class RestrictionStructure:
    type_label: str
    direction: str
    small: tuple[int, ...]
    large: tuple[int, ...]
    entries: tuple[RestrictionEntry, ...]

    def entry(self, nodes: Sequence[int]) -> RestrictionEntry:
        nodes = tuple(sorted(nodes))
        for e in self.entries:
            if e.source.nodes == nodes:
                return e
        raise DomainError(f"no entry for block {nodes}")

    def to_model(self) -> RestrictionModel:
        return RestrictionModel(
            type=self.type_label,
            direction=self.direction,
            small=[f"a{i}" for i in self.small],
            large=[f"a{i}" for i in self.large],
            entries=[e.to_model() for e in self.entries],
        )


def _resolve(context: TypeContext, nodes: Union[str, Sequence[int]]) -> tuple[int, ...]:
    if isinstance(nodes, str):
        return context.face_from_selector(nodes).nodes
    return context.face(nodes).nodes


def _inclusion(context: TypeContext, face: AlcoveFace, small, large) -> RestrictionEntry:
    chart = face.chart()
    subgroup = normalizer_quotient(context.affine, face, small, chart)
    group = normalizer_quotient(context.affine, face, large, chart)
    verified = subgroup <= group
    if not verified:
        raise InvariantViolation(
            f"{context.type_label}: W^{face.label} over {small} is not inside its counterpart over {large}"
        )
    return RestrictionEntry(
        face, context.cuspidal_multiplicity(face), False, len(subgroup), len(group), verified
    )


def _subsets(context: TypeContext, nodes: Sequence[int], include_empty: bool):
    for size in range(len(nodes) + 1):
        for subset in combinations(nodes, size):
            if include_empty or context.cuspidal_multiplicity(context.face(subset)) != 0:
                yield subset


def _prepare(source, small, large) -> tuple[TypeContext, tuple[int, ...], tuple[int, ...]]:
    context = source if isinstance(source, TypeContext) else TypeContext(source)
    small, large = _resolve(context, small), _resolve(context, large)
    if not set(small) <= set(large):
        raise DomainError(f"J = {list(small)} is not contained in J' = {list(large)}")
    return context, small, large


def restriction_structure(
    source: Union[str, TypeContext],
    small: Union[str, Sequence[int]],
    large: Union[str, Sequence[int]],
    include_empty: bool = False,
) -> RestrictionStructure:
    """
    Map every block label I' inside J' to zero (I' not inside J) or to the
    verified inclusion W^{I'}_J in W^{I'}_{J'}. With `include_empty` the
    faces with c_I' = 0 are listed too.
    """
    context, small, large = _prepare(source, small, large)
    entries = []
    for nodes in _subsets(context, large, include_empty):
        face = context.face(nodes)
        if not set(nodes) <= set(small):
            entries.append(RestrictionEntry(face, context.cuspidal_multiplicity(face), True))
            continue
        entries.append(_inclusion(context, face, small, large))
    logger.debug(f"{context.type_label}: restriction {small} <- {large} with {len(entries)} entries")
    return RestrictionStructure(context.type_label, RESTRICTION, small, large, tuple(entries))


def induction_structure(
    source: Union[str, TypeContext],
    small: Union[str, Sequence[int]],
    large: Union[str, Sequence[int]],
    include_empty: bool = False,
) -> RestrictionStructure:
    """Every block label I inside J goes to itself along W^I_J in W^I_{J'}."""
    context, small, large = _prepare(source, small, large)
    entries = tuple(
        _inclusion(context, context.face(nodes), small, large) for nodes in _subsets(context, small, include_empty)
    )
    return RestrictionStructure(context.type_label, INDUCTION, small, large, entries)
