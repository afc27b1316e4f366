import logging

from config.settings import LOG_LEVEL
from src.algebra.root_system import affine_root_data, build_root_system
from src.coxeter.faces import build_face
from src.coxeter.group_labels import finite_part_isomorphism_label
from src.coxeter.relative_weyl import (
    cocharacter_index,
    generated_subgroup,
    longest_parabolic_element,
    normalizer_quotient,
    parabolic_lemma_holds,
    parabolic_subgroup,
    relative_weyl_group,
    semidirect_failures,
)

# Configure logging
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def _affine(label):
    return affine_root_data(build_root_system(label))


def test_longest_parabolic_element_has_maximal_length():
    affine = _affine("A2")
    lengths = parabolic_subgroup(affine, (1, 2))
    assert len(lengths) == 6
    assert lengths[longest_parabolic_element(affine, (1, 2))] == 3
    b2 = _affine("B2")
    lengths = parabolic_subgroup(b2, (0, 2))
    assert len(lengths) == 8
    assert lengths[longest_parabolic_element(b2, (0, 2))] == 4


def test_principal_face_of_a1():
    affine = _affine("A1")
    group = relative_weyl_group(build_face(affine, ()), affine, certify=True)
    assert group.finite_order == 2
    assert group.translation_rank == 1
    assert group.split
    assert group.type_label == "A~1"
    assert group.coxeter_matrix[0][1] is None
    assert cocharacter_index(group.face, group) == 1
    assert not semidirect_failures(group)


def test_principal_faces_recover_the_weyl_group():
    for label, name in [("A2", "S3"), ("B2", "D4"), ("G2", "D6"), ("A3", "S4")]:
        affine = _affine(label)
        group = relative_weyl_group(build_face(affine, ()), affine, certify=True)
        assert group.translation_rank == affine.rank, label
        assert finite_part_isomorphism_label(group.finite_elements()).label == name


def test_vertex_faces_are_trivial():
    affine = _affine("B2")
    group = relative_weyl_group(build_face(affine, (0, 1)), affine, certify=True)
    assert group.dim == 0
    assert group.finite_order == 1
    assert group.translation_rank == 0
    assert group.generators == ()
    assert cocharacter_index(group.face, group) == 1


def test_edge_faces_of_b2():
    affine = _affine("B2")
    for nodes in [(0,), (1,)]:
        group = relative_weyl_group(build_face(affine, nodes), affine, certify=True)
        assert group.dim == 1
        assert group.finite_order == 2
        assert group.translation_rank == 1
        assert group.split


def test_factorization_of_ball_elements():
    affine = _affine("G2")
    group = relative_weyl_group(build_face(affine, ()), affine)
    for g in group.generators:
        assert group.contains(g)
        assert group.contains(g * g)


def test_normalizer_quotient_and_lemma():
    affine = _affine("A2")
    face = build_face(affine, ())
    assert len(normalizer_quotient(affine, face, (1,))) == 2
    assert len(normalizer_quotient(affine, face, (1, 2))) == 6
    group = relative_weyl_group(face, affine)
    assert len(generated_subgroup(group, (1, 2))) == 6
    assert parabolic_lemma_holds(affine, (), (1, 2))
    assert parabolic_lemma_holds(affine, (1,), (0, 1))
    assert parabolic_lemma_holds(_affine("B2"), (2,), (0, 2))


if __name__ == "__main__":
    test_longest_parabolic_element_has_maximal_length()
    test_principal_face_of_a1()
    test_principal_faces_recover_the_weyl_group()
    test_vertex_faces_are_trivial()
    test_edge_faces_of_b2()
    test_factorization_of_ball_elements()
    test_normalizer_quotient_and_lemma()
    print("✅ relative Weyl group tests passed")
