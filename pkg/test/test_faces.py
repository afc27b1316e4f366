import logging

import pytest

from config.settings import LOG_LEVEL
from src.algebra.root_system import affine_root_data, build_root_system
from src.coxeter.faces import build_face, enumerate_faces, parse_face_selector
from src.utils.errors import DomainError

# Configure logging
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def _affine(label):
    return affine_root_data(build_root_system(label))


def test_face_enumeration_order():
    faces = enumerate_faces(_affine("A1"))
    assert [f.label for f in faces] == ["-", "a0", "a1"]
    assert len(enumerate_faces(_affine("A2"))) == 7
    assert len(enumerate_faces(_affine("B3"))) == 15
    sizes = [f.size for f in enumerate_faces(_affine("A3"))]
    assert sizes == sorted(sizes)


def test_face_selectors():
    affine = _affine("A2")
    assert parse_face_selector("a0,a2", affine) == (0, 2)
    assert parse_face_selector(" A2 , a0 ", affine) == (0, 2)
    assert parse_face_selector("-", affine) == ()
    assert parse_face_selector("", affine) == ()
    for bad in ["a3", "a0,a1,a2", "b1", "a0;a1", "ax"]:
        with pytest.raises(DomainError):
            parse_face_selector(bad, affine)


def test_levi_signatures_with_length_markers():
    b2 = _affine("B2")
    assert build_face(b2, (0, 1)).signature == "A1(l)+A1(l)"
    assert build_face(b2, (2,)).signature == "A1(s)"
    assert build_face(b2, (0, 2)).signature == "B2"
    g2 = _affine("G2")
    assert build_face(g2, (1, 2)).signature == "G2"
    assert build_face(g2, (0, 2)).signature == "A2(l)"
    assert build_face(g2, (0, 1)).signature == "A1(l)+A1(s)"
    a3 = _affine("A3")
    assert build_face(a3, (0, 2)).signature == "A1+A1"
    assert build_face(a3, ()).signature == ""


def test_face_geometry():
    affine = _affine("A2")
    face = build_face(affine, (1,))
    assert face.z_dimension == 1
    assert face.vertex_nodes == (0, 2)
    assert len(face.cocharacter_fixed_lattice) == 1
    chart = face.chart()
    assert chart.dim == 1
    for vertex in face.vertices:
        assert face.roots[0].evaluate(vertex) == 0
        assert chart.point(chart.coordinates(vertex)) == vertex
    with pytest.raises(DomainError):
        face.chart(1)


def test_vertex_faces_are_points():
    affine = _affine("G2")
    face = build_face(affine, (0, 1))
    assert face.is_vertex
    assert face.z_dimension == 0
    assert face.chart().dim == 0


if __name__ == "__main__":
    test_face_enumeration_order()
    test_face_selectors()
    test_levi_signatures_with_length_markers()
    test_face_geometry()
    test_vertex_faces_are_points()
    print("✅ face tests passed")
