import logging

import pytest
import yaml

from config.schemas import CuspidalRule, RecordStatus
from config.settings import LOG_LEVEL
from src.algebra.root_system import affine_root_data, build_root_system
from src.blocks.type_context import TypeContext
from src.coxeter.faces import build_face
from src.cuspidal.center import a_type_count, center_data
from src.cuspidal.rules import is_square, is_triangular
from src.cuspidal.table import cuspidal_count, load_cuspidal_table
from src.utils.config_loader import load_cuspidal_config
from src.utils.errors import CuspidalTableError, UnclassifiedCuspidalError

# Configure logging
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def _affine(label):
    return affine_root_data(build_root_system(label))


def test_shipped_table_loads():
    table = load_cuspidal_table()
    assert table.version == 1
    assert len(table.records) == 11
    g2 = table.find("A1(l)+A1(s)", "1", "G2")
    assert g2 is not None and g2.chars == 0 and g2.status == RecordStatus.OVERRIDE
    assert table.find("A1(l)+A1(s)", "1", "B3") is None
    assert table.find("E6", "3", "E6").chars == 2
    assert table.rules == (CuspidalRule.A_TYPE, CuspidalRule.FACTOR)


def test_center_of_a_type_vertices():
    affine = _affine("A2")
    data = center_data(build_face(affine, (1, 2)), affine)
    assert data.invariants == (3,)
    assert data.key == "3"
    assert len(data.characters) == 3
    assert a_type_count(data) == 2
    torus = center_data(build_face(affine, ()), affine)
    assert torus.key == "1"


def test_a1_vertex_center():
    affine = _affine("A1")
    data = center_data(build_face(affine, (0,)), affine)
    assert data.invariants == (2,)
    assert sorted(data.projection_orders()) == [(1,), (2,)]


def test_counts_by_rule():
    table = load_cuspidal_table()
    affine = _affine("G2")
    assert cuspidal_count(build_face(affine, ()), affine, table).rule == "torus"
    vertex = cuspidal_count(build_face(affine, (0, 2)), affine, table)
    assert (vertex.count, vertex.rule) == (2, "a-type-rule")
    g2 = cuspidal_count(build_face(affine, (1, 2)), affine, table)
    assert (g2.count, g2.rule) == (1, "table")
    override = cuspidal_count(build_face(affine, (0, 1)), affine, table)
    assert override.count == 0
    assert override.record.status == RecordStatus.OVERRIDE


def test_b2_edges():
    context = TypeContext("B2")
    assert context.assignment(context.face((0,))).count == 1
    assert context.assignment(context.face((1,))).count == 1
    assert context.assignment(context.face((2,))).count == 0
    assert context.assignment(context.face((0, 1))).count == 1


def test_rule_arithmetic():
    assert [n for n in range(1, 30) if is_triangular(n)] == [1, 3, 6, 10, 15, 21, 28]
    assert [n for n in range(30) if is_square(n)] == [0, 1, 4, 9, 16, 25]


def test_factor_rule_in_rank_four():
    table = load_cuspidal_table()
    affine = _affine("F4")
    b4 = cuspidal_count(build_face(affine, (0, 1, 2, 3)), affine, table)
    assert b4.face.signature == "B4"
    assert b4.center.key == "2"
    # Spin9: the trivial character only, 9 being a square
    assert (b4.count, b4.rule) == (1, "factor-rule")
    mixed = cuspidal_count(build_face(affine, (0, 2, 3, 4)), affine, table)
    assert mixed.face.signature == "A1(l)+C3"
    assert (mixed.count, mixed.rule) == (1, "factor-rule")
    f4 = cuspidal_count(build_face(affine, (1, 2, 3, 4)), affine, table)
    assert (f4.count, f4.rule) == (1, "table")
    assert f4.record.status == RecordStatus.EXTENDED

    d4 = _affine("D4")
    spin8 = cuspidal_count(build_face(d4, (1, 2, 3, 4)), d4, table)
    assert spin8.face.signature == "D4"
    assert (spin8.count, spin8.rule) == (0, "factor-rule")


def test_type_d_characters():
    affine = _affine("D5")
    data = center_data(build_face(affine, (1, 2, 3, 4, 5)), affine)
    assert data.key == "4"
    assert sorted(c.factor_orders for c in data.characters) == [(1,), (2,), (4,), (4,)]
    # Spin10: one pair for each character nontrivial on ker(Spin -> SO), 10 being triangular
    spin10 = cuspidal_count(build_face(affine, (1, 2, 3, 4, 5)), affine, load_cuspidal_table())
    assert (spin10.count, spin10.rule) == (2, "factor-rule")


def test_text_table_grammar(tmp_path):
    path = tmp_path / "table.txt"
    path.write_text(
        "# two records\n"
        "version=2\n"
        "type=B2; center=*; chars=0; source=test\n"
        "type=G2; chars=1; source=test; ambient=G2; status=extended\n",
        encoding="utf-8",
    )
    table = load_cuspidal_table(path)
    assert table.version == 2
    assert table.find("G2", "1", "G2").status == RecordStatus.EXTENDED
    assert table.find("G2", "1", "B3") is None


def test_malformed_tables_are_rejected(tmp_path):
    bad = {
        "missing.txt": "type=B2; center=*; source=test\n",
        "unknown.txt": "type=B2; chars=0; source=test; colour=red\n",
        "negative.txt": "type=B2; chars=-1; source=test\n",
        "nokey.txt": "type=B2; chars\n",
        "duplicate.txt": "type=B2; chars=0; source=a\ntype=B2; chars=1; source=b\n",
        "rules.txt": "rules = a-type, lookup\ntype=B2; chars=0; source=test\n",
    }
    for name, text in bad.items():
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        with pytest.raises(CuspidalTableError):
            load_cuspidal_table(path)
    with pytest.raises(FileNotFoundError):
        load_cuspidal_table(tmp_path / "absent.yml")


def test_unclassified_signature_names_the_face(tmp_path):
    data = load_cuspidal_config()
    data["records"] = [r for r in data["records"] if r["type"] != "B2"]
    path = tmp_path / "no_b2.yml"
    path.write_text(yaml.safe_dump(data, allow_unicode=True), encoding="utf-8")
    affine = _affine("B2")
    vertex = cuspidal_count(build_face(affine, (0, 2)), affine, load_cuspidal_table(path))
    assert (vertex.count, vertex.rule) == (0, "factor-rule")

    data["rules"] = ["a-type"]
    path.write_text(yaml.safe_dump(data, allow_unicode=True), encoding="utf-8")
    table = load_cuspidal_table(path)
    assert table.rules == (CuspidalRule.A_TYPE,)
    with pytest.raises(UnclassifiedCuspidalError) as info:
        cuspidal_count(build_face(affine, (0, 2)), affine, table)
    assert "B2" in str(info.value)
    assert info.value.face == "a0,a2"


if __name__ == "__main__":
    import pathlib
    import tempfile

    test_shipped_table_loads()
    test_center_of_a_type_vertices()
    test_a1_vertex_center()
    test_counts_by_rule()
    test_b2_edges()
    test_rule_arithmetic()
    test_factor_rule_in_rank_four()
    test_type_d_characters()
    with tempfile.TemporaryDirectory() as d:
        test_text_table_grammar(pathlib.Path(d))
        test_malformed_tables_are_rejected(pathlib.Path(d))
        test_unclassified_signature_names_the_face(pathlib.Path(d))
    print("✅ cuspidal tests passed")
