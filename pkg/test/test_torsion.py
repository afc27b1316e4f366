import logging
from fractions import Fraction

import pytest

from config.settings import LOG_LEVEL
from src.algebra.affine_element import AffineElement, enumerate_group
from src.algebra.root_system import affine_root_data, build_root_system
from src.coxeter.faces import build_face
from src.coxeter.group_labels import (
    coxeter_generators,
    dihedral_order_profile,
    finite_part_isomorphism_label,
    hyperoctahedral_order_profile,
    symmetric_order_profile,
)
from src.coxeter.relative_weyl import relative_weyl_group
from src.coxeter.torsion import (
    TorsionPoint,
    lattice_action,
    orbit,
    orbit_representatives,
    same_orbit,
    stabilizer,
    torsion_points,
)
from src.utils.errors import DomainError

# Configure logging
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def _principal_action(label):
    affine = affine_root_data(build_root_system(label))
    return lattice_action(relative_weyl_group(build_face(affine, ()), affine))


def test_torsion_point_parsing():
    point = TorsionPoint.parse("1/2, 3/2", 2)
    assert point.coordinates == (Fraction(1, 2), Fraction(1, 2))
    assert point.order == 2
    assert TorsionPoint.parse("0", 3) == TorsionPoint.origin(3)
    assert TorsionPoint.create([Fraction(-1, 3)]).coordinates == (Fraction(2, 3),)
    with pytest.raises(DomainError):
        TorsionPoint.parse("x", 1)
    with pytest.raises(DomainError):
        TorsionPoint.parse("1/2", 2)


def test_torsion_point_grid():
    assert len(torsion_points(2, 3)) == 9
    assert len(torsion_points(0, 5)) == 1
    with pytest.raises(DomainError):
        torsion_points(1, 0)


def test_a1_orbits():
    action = _principal_action("A1")
    assert action.order == 2
    reps = orbit_representatives(action, 2)
    assert [p.coordinates for p in reps] == [(Fraction(0),), (Fraction(1, 2),)]
    for point in reps:
        assert len(stabilizer(action, point)) == 2
    assert len(orbit_representatives(action, 6)) == 4
    third = TorsionPoint.create([Fraction(1, 3)])
    assert orbit(action, third) == {third, TorsionPoint.create([Fraction(2, 3)])}
    assert same_orbit(action, third, TorsionPoint.create([Fraction(2, 3)]))
    assert len(stabilizer(action, third)) == 1


def test_a2_fixed_points():
    action = _principal_action("A2")
    origin = TorsionPoint.origin(2)
    assert len(stabilizer(action, origin)) == 6
    # orbit sizes add up to the number of points
    reps = orbit_representatives(action, 3)
    assert sum(len(orbit(action, p)) for p in reps) == 9


def test_order_profiles():
    assert symmetric_order_profile(3) == ((1, 1), (2, 3), (3, 2))
    assert dihedral_order_profile(4) == ((1, 1), (2, 5), (4, 2))
    assert sum(count for _, count in hyperoctahedral_order_profile(3)) == 48
    assert hyperoctahedral_order_profile(2) == dihedral_order_profile(4)


def test_weyl_group_labels():
    expected = {"A1": "S2", "A2": "S3", "A3": "S4", "B2": "D4", "G2": "D6", "B3": "S3⋉{±1}^3"}
    for label, name in expected.items():
        elements = list(enumerate_group(build_root_system(label).simple_reflections()))
        assert finite_part_isomorphism_label(elements).label == name, label
    assert finite_part_isomorphism_label([]).label == "trivial"


def _klein_four():
    diagonals = ([[1, 0], [0, 1]], [[-1, 0], [0, 1]], [[1, 0], [0, -1]], [[-1, 0], [0, -1]])
    return [AffineElement.create(m) for m in diagonals]


def test_presentations_confirm_the_family():
    label = finite_part_isomorphism_label(_klein_four())
    assert (label.label, label.order, label.recognized) == ("S2×S2", 4, True)
    s3 = list(enumerate_group(build_root_system("A2").simple_reflections()))
    assert coxeter_generators(s3, ((1, 3), (3, 1))) is not None
    assert coxeter_generators(s3, ((1, 2), (2, 1))) is None
    b3 = list(enumerate_group(build_root_system("B3").simple_reflections()))
    assert coxeter_generators(b3, ((1, 3, 2), (3, 1, 4), (2, 4, 1))) is not None


def test_unrecognized_groups_keep_their_multiplication_table():
    rotation = AffineElement.create([[0, -1], [1, -1]])
    cyclic = [AffineElement.identity(2), rotation, rotation * rotation]
    label = finite_part_isomorphism_label(cyclic)
    assert not label.recognized
    assert label.label == "order 3 (unrecognized)"
    assert label.elements == tuple(cyclic)
    assert label.multiplication_table == ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    assert finite_part_isomorphism_label(_klein_four()).multiplication_table == ()


if __name__ == "__main__":
    test_torsion_point_parsing()
    test_torsion_point_grid()
    test_a1_orbits()
    test_a2_fixed_points()
    test_order_profiles()
    test_weyl_group_labels()
    test_presentations_confirm_the_family()
    test_unrecognized_groups_keep_their_multiplication_table()
    print("✅ torsion and group label tests passed")
