import logging
from fractions import Fraction

import pytest

from config.settings import LOG_LEVEL
from src.algebra.root_system import affine_root_data, build_root_system, canonical_type_label
from src.utils.errors import DomainError

# Configure logging
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def test_type_labels_and_aliases():
    assert canonical_type_label("b3") == "B3"
    assert canonical_type_label("C2") == "B2"
    assert canonical_type_label("D3") == "A3"
    assert canonical_type_label(" g2 ") == "G2"
    for bad in ["X3", "E9", "D2", "F3", "G3", "A0", ""]:
        with pytest.raises(DomainError):
            canonical_type_label(bad)


def test_root_counts_and_degrees():
    expected = {
        "A1": (2, (2,)),
        "A3": (12, (2, 3, 4)),
        "B3": (18, (2, 4, 6)),
        "C3": (18, (2, 4, 6)),
        "G2": (12, (2, 6)),
        "F4": (48, (2, 6, 8, 12)),
        "D4": (24, (2, 4, 4, 6)),
    }
    for label, (count, degrees) in expected.items():
        system = build_root_system(label)
        assert len(system.roots) == count, label
        assert system.weyl_degrees == degrees, label
        assert len(system.positive_roots) == count // 2


def test_highest_roots_in_weight_coordinates():
    assert build_root_system("B2").highest_root.weight == (0, 2)
    assert build_root_system("G2").highest_root.weight == (0, 1)
    assert build_root_system("B3").highest_root.weight == (0, 1, 0)
    assert build_root_system("C3").highest_root.weight == (2, 0, 0)
    assert build_root_system("A2").highest_root.weight == (1, 1)


def test_simple_roots_are_cartan_columns():
    system = build_root_system("B2")
    assert system.simple_roots == ((2, -2), (-1, 2))
    assert system.weyl_order == 8
    assert not system.is_simply_laced


def test_affine_alcove_of_a1():
    affine = affine_root_data(build_root_system("A1"))
    assert affine.node_names == ("a0", "a1")
    assert affine.affine_simple_roots[0].linear == (-2,)
    assert affine.affine_simple_roots[0].offset == 1
    assert affine.vertices == ((Fraction(0),), (Fraction(1, 2),))


def test_alcove_vertices_satisfy_the_inequalities():
    for label in ["A2", "B2", "G2", "B3", "C3"]:
        affine = affine_root_data(build_root_system(label))
        for j, vertex in enumerate(affine.vertices):
            for k, root in enumerate(affine.affine_simple_roots):
                value = root.evaluate(vertex)
                assert value > 0 if k == j else value == 0


if __name__ == "__main__":
    test_type_labels_and_aliases()
    test_root_counts_and_degrees()
    test_highest_roots_in_weight_coordinates()
    test_simple_roots_are_cartan_columns()
    test_affine_alcove_of_a1()
    test_alcove_vertices_satisfy_the_inequalities()
    print("✅ root system tests passed")
