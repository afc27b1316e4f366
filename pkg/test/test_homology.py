import logging

import numpy as np
import pytest

from config.settings import LOG_LEVEL
from src.algebra.root_system import affine_root_data, build_root_system
from src.homology.coset_complex import build_coset_complex, check_colimit_hypotheses
from src.homology.report import TRUNCATION_NOTE, boundary_invariants, homology_report
from src.utils.errors import DomainError

# Configure logging
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def _finite(label):
    return build_root_system(label).simple_reflections()


def _affine(label):
    return affine_root_data(build_root_system(label)).reflections()


def test_finite_complexes_are_spheres():
    expected_counts = {
        "A1": {0: 2, -1: 1},
        "A2": {1: 6, 0: 6, -1: 1},
        "B2": {1: 8, 0: 8, -1: 1},
    }
    for label, counts in expected_counts.items():
        complex_ = build_coset_complex(_finite(label))
        assert complex_.cell_counts() == counts, label
        report = homology_report(complex_)
        assert report.is_sphere(), label
        top = report.nonzero()[0]
        assert top.degree == complex_.rank - 1
        assert top.label() == "Z"


def test_cells_are_minimal_representatives():
    complex_ = build_coset_complex(_finite("A2"))
    assert len(complex_.cells((0,))) == 3
    assert len(complex_.cells((0, 1))) == 1
    assert complex_.boundary(-1).shape == (0, 1)


def test_affine_a1_ball_is_acyclic():
    complex_ = build_coset_complex(_affine("A1"), truncation=6)
    assert complex_.cell_counts()[1] == 13
    report = homology_report(complex_)
    assert report.acyclic
    assert report.to_model("A1", True).note == TRUNCATION_NOTE
    assert homology_report(build_coset_complex(_affine("A1"), truncation=8)).acyclic


def test_affine_cells_follow_the_word_length_bound():
    # top cells are the elements of word length <= N, the ball is enumerated to N + 1
    for n in (2, 3, 6):
        counts = build_coset_complex(_affine("A1"), truncation=n).cell_counts()
        assert counts[1] == 2 * n + 1
        assert counts[0] == 2 * (n + 1)
        assert counts[-1] == 1
    assert build_coset_complex(_affine("A1"), truncation=3).cell_counts()[1] == 7


def test_affine_a2_ball_is_acyclic():
    report = homology_report(build_coset_complex(_affine("A2"), truncation=4))
    assert report.boundary_squares_vanish
    assert report.acyclic


def test_rational_ranks_only():
    report = homology_report(build_coset_complex(_finite("B2")), torsion=False)
    assert report.is_sphere()
    assert all(not g.torsion for g in report.groups)


def test_colimit_hypotheses():
    finite = check_colimit_hypotheses(_finite("A2"), None)
    assert finite.passed
    assert finite.pairs_checked == 6
    assert check_colimit_hypotheses(_affine("A1")).passed
    generators = _finite("A1")
    repeated = check_colimit_hypotheses(generators + generators, None)
    assert not repeated.passed
    assert any("coincide" in f for f in repeated.failures)


def test_boundary_invariants():
    assert boundary_invariants(np.array([[2]], dtype=np.int64)) == (1, (2,))
    assert boundary_invariants(np.array([[1, 1], [0, 0]], dtype=np.int64)) == (1, ())
    assert boundary_invariants(np.zeros((0, 3), dtype=np.int64)) == (0, ())


def test_bad_inputs():
    with pytest.raises(DomainError):
        build_coset_complex([])
    with pytest.raises(DomainError):
        build_coset_complex(_affine("A1"), truncation=0)


if __name__ == "__main__":
    test_finite_complexes_are_spheres()
    test_cells_are_minimal_representatives()
    test_affine_a1_ball_is_acyclic()
    test_affine_cells_follow_the_word_length_bound()
    test_affine_a2_ball_is_acyclic()
    test_rational_ranks_only()
    test_colimit_hypotheses()
    test_boundary_invariants()
    test_bad_inputs()
    print("✅ coset complex tests passed")
