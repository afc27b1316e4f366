import logging

import pytest

from config.settings import LOG_LEVEL
from src.blocks.restriction import INDUCTION, induction_structure, restriction_structure
from src.blocks.type_context import TypeContext
from src.utils.errors import DomainError

# Configure logging
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def test_restriction_kills_blocks_outside_the_smaller_parabolic():
    structure = restriction_structure("A2", (1,), (1, 2))
    assert [e.source.nodes for e in structure.entries] == [(), (1, 2)]
    assert structure.entry((1, 2)).zero
    principal = structure.entry(())
    assert not principal.zero
    assert (principal.subgroup_order, principal.group_order) == (2, 6)
    assert principal.inclusion_verified
    assert all(e.is_block for e in structure.entries)


def test_faces_without_cuspidal_data_are_marked():
    structure = restriction_structure("A2", (1,), (1, 2), include_empty=True)
    assert [e.source.nodes for e in structure.entries] == [(), (1,), (2,), (1, 2)]
    edge = structure.entry((1,))
    assert edge.c == 0
    assert not edge.is_block
    assert (edge.subgroup_order, edge.group_order) == (1, 1)
    assert structure.entry((2,)).zero
    assert [e.block for e in structure.to_model().entries] == [True, False, False, True]


def test_equal_parabolics_keep_every_block():
    context = TypeContext("B2")
    structure = restriction_structure(context, "a0,a2", "a0,a2")
    assert [e.source.nodes for e in structure.entries] == [(), (0,)]
    assert len(restriction_structure(context, "a0,a2", "a0,a2", include_empty=True).entries) == 4
    for entry in structure.entries:
        assert not entry.zero
        assert entry.subgroup_order == entry.group_order


def test_selectors_must_be_nested():
    with pytest.raises(DomainError):
        restriction_structure("A2", "a0", "a1,a2")
    with pytest.raises(DomainError):
        induction_structure("A2", (0, 1), (1,))


def test_induction_covers_the_smaller_parabolic():
    structure = induction_structure("A2", "a1", "a1,a2")
    assert structure.direction == INDUCTION
    assert [e.source.nodes for e in structure.entries] == [()]
    assert not any(e.zero for e in structure.entries)
    assert len(induction_structure("A2", "a1", "a1,a2", include_empty=True).entries) == 2
    model = structure.to_model()
    assert model.small == ["a1"]
    assert model.large == ["a1", "a2"]


if __name__ == "__main__":
    test_restriction_kills_blocks_outside_the_smaller_parabolic()
    test_faces_without_cuspidal_data_are_marked()
    test_equal_parabolics_keep_every_block()
    test_selectors_must_be_nested()
    test_induction_covers_the_smaller_parabolic()
    print("✅ restriction tests passed")
