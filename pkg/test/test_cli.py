import json
import logging

import yaml

from config.schemas import DecompositionModel
from config.settings import EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_UNCLASSIFIED, LOG_LEVEL
from src.main import build_parser, main
from src.utils.config_loader import load_cuspidal_config

# Configure logging
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def test_parser_defaults():
    args = build_parser().parse_args(["homology", "--type", "A1", "--affine"])
    assert args.command == "homology"
    assert args.length == 6
    assert args.format == "text"
    args = build_parser().parse_args(["verify"])
    assert args.suite == "paper-examples"


def test_faces_as_json(capsys):
    assert main(["faces", "--type", "A1", "--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["type"] == "A1"
    assert len(data["faces"]) == 3


def test_decompose_as_text(capsys):
    assert main(["decompose", "--type", "B2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "L(C^x)^2/D4 ⊔ L(C^x)/S2 ⊔ L(C^x)/S2 ⊔ *"


def test_decompose_json_round_trip(capsys):
    assert main(["decompose", "--type", "C2", "--format", "json"]) == EXIT_OK
    model = DecompositionModel.model_validate_json(capsys.readouterr().out)
    assert model.type == "B2"
    assert model.cuspidal_total == 1


def test_series_commands(capsys):
    assert main(["adjoint-series", "--type", "A1", "--order", "8"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1 + t^3 + t^4 + t^7 + t^8"
    assert main(["hom", "--type", "A1", "--point", "1/2", "--order", "4"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1 + t^3 + t^4"
    assert main(["hom", "--type", "A1", "--point", "0", "--other-point", "1/2", "--order", "4"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "0"


def test_homology_command(capsys):
    assert main(["homology", "--type", "A2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "H_1 = Z" in out
    assert main(["homology", "--type", "A1", "--affine", "--length", "4", "--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["acyclic"] is True
    assert data["colimit_hypotheses"] is True


def test_domain_errors_exit_with_two(capsys, tmp_path):
    assert main(["decompose", "--type", "Z9"]) == EXIT_DOMAIN_ERROR
    assert main(["relweyl", "--type", "A2", "--face", "a7"]) == EXIT_DOMAIN_ERROR
    assert main(["faces"]) == EXIT_DOMAIN_ERROR
    assert main(["decompose", "--type", "A1", "--cuspidal-table", str(tmp_path / "absent.yml")]) == EXIT_DOMAIN_ERROR
    assert main(["hom", "--type", "A2", "--face", "a0", "--point", "0"]) == EXIT_DOMAIN_ERROR
    assert "error:" in capsys.readouterr().err


def test_unclassified_face_exits_with_three(capsys, tmp_path):
    data = load_cuspidal_config()
    data["records"] = [r for r in data["records"] if r["type"] != "G2"]
    data["rules"] = ["a-type"]
    path = tmp_path / "no_g2.yml"
    path.write_text(yaml.safe_dump(data, allow_unicode=True), encoding="utf-8")
    assert main(["decompose", "--type", "G2", "--cuspidal-table", str(path)]) == EXIT_UNCLASSIFIED
    assert "a1,a2" in capsys.readouterr().err


def test_restrict_and_params(capsys, tmp_path):
    assert main(["restrict", "--type", "A2", "--small", "a1", "--large", "a1,a2", "--log-dir", str(tmp_path)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "a2" in out and "-> 0" in out
    assert "no block" not in out
    assert main(["restrict", "--type", "A2", "--small", "a1", "--large", "a1,a2", "--all-faces"]) == EXIT_OK
    assert "(c = 0, no block)" in capsys.readouterr().out
    assert (tmp_path / "general.log").exists()
    assert main(["params", "--type", "A1", "--bound", "2", "--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert len(data["parameters"]) == 4


if __name__ == "__main__":
    import pathlib

    import pytest

    raise SystemExit(pytest.main([str(pathlib.Path(__file__)), "-q"]))
