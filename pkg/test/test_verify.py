import logging

import yaml

from config.schemas import VerifySuite
from config.settings import EXIT_FAILURE, GOLDEN_TYPES, LOG_LEVEL
from src.cuspidal.table import load_cuspidal_table
from src.main import main
from src.utils.config_loader import load_cuspidal_config
from src.verify.suites import (
    check_constant_sheaf,
    check_golden_example,
    check_lemma,
    check_orthogonality,
    load_golden_examples,
    run_suite,
)

# Configure logging
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def _tampered_table(tmp_path):
    data = load_cuspidal_config()
    for record in data["records"]:
        if record["type"] == "G2":
            record["chars"] = 0
    path = tmp_path / "tampered.yml"
    path.write_text(yaml.safe_dump(data, allow_unicode=True), encoding="utf-8")
    return path


def test_golden_examples_load():
    examples = load_golden_examples()
    assert tuple(e.type for e in examples) == GOLDEN_TYPES
    assert examples[0].text == "L(C^x)/S2 ⊔ * ⊔ *"


def test_paper_examples_pass():
    model = run_suite(VerifySuite.PAPER_EXAMPLES)
    assert model.passed, [c.detail for c in model.checks if not c.passed]
    assert model.summary == "7/7 types passed"


def test_tampered_table_is_reported(tmp_path):
    table = load_cuspidal_table(_tampered_table(tmp_path))
    g2 = next(e for e in load_golden_examples() if e.type == "G2")
    check = check_golden_example(g2, table)
    assert not check.passed
    assert "a1,a2=0" in check.detail
    model = run_suite(VerifySuite.PAPER_EXAMPLES, table)
    assert not model.passed
    assert model.summary == "6/7 types passed"


def test_tampered_table_fails_the_command(tmp_path, capsys):
    path = _tampered_table(tmp_path)
    assert main(["verify", "--suite", "paper-examples", "--cuspidal-table", str(path)]) == EXIT_FAILURE
    assert "[FAIL] golden G2" in capsys.readouterr().out


def test_single_invariant_checks():
    assert check_constant_sheaf("B2").passed
    assert check_orthogonality("A1").passed
    assert check_orthogonality("G2").passed


def test_normalizer_lemma_runs_over_block_faces():
    # A2: the principal face against its 7 parabolics, each vertex face against itself
    check = check_lemma("A2")
    assert check.passed
    assert check.detail == "10 pairs"
    for label in ("A3", "B3", "C3"):
        assert check_lemma(label).passed, label


def test_invariants_suite_passes():
    model = run_suite(VerifySuite.INVARIANTS)
    assert model.passed, [f"{c.name}: {c.detail}" for c in model.checks if not c.passed]


if __name__ == "__main__":
    import pathlib

    import pytest

    raise SystemExit(pytest.main([str(pathlib.Path(__file__)), "-q"]))
