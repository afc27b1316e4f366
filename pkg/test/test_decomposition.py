import logging
from collections import Counter
from fractions import Fraction

from config.schemas import DecompositionModel
from config.settings import LOG_LEVEL
from src.blocks.decomposition import (
    decompose,
    end_algebra_series,
    irreducible_parameters,
    parameter_model,
    render_component,
)
from src.blocks.type_context import TypeContext

# Configure logging
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def test_render_component():
    assert render_component(0, "trivial") == "*"
    assert render_component(0, "trivial", 2) == "*^⊔2"
    assert render_component(1, "S2") == "L(C^x)/S2"
    assert render_component(1, "S2", 3) == "(L(C^x)/S2)^⊔3"
    assert render_component(2, "D6") == "L(C^x)^2/D6"


def test_a1_decomposition():
    decomposition = decompose("A1")
    assert decomposition.text == "L(C^x)/S2 ⊔ * ⊔ *"
    assert decomposition.cuspidal_total == 2
    principal = decomposition.block(())
    assert principal.torus_rank == 1
    assert principal.group.label == "S2"
    assert not principal.is_cuspidal
    assert decomposition.block((0,)).is_cuspidal


def test_rank_two_texts():
    assert decompose("B2").text == "L(C^x)^2/D4 ⊔ L(C^x)/S2 ⊔ L(C^x)/S2 ⊔ *"
    assert decompose("G2").text == "L(C^x)^2/D6 ⊔ *^⊔2 ⊔ *"
    assert decompose("A2").cuspidal_total == 6


def test_profiles():
    assert decompose("B2").profile() == Counter({(2, "D4", 1): 1, (1, "S2", 1): 2, (0, "trivial", 1): 1})
    assert decompose("A3").profile() == Counter({(3, "S4", 1): 1, (1, "S2", 1): 2, (0, "trivial", 2): 4})


def test_blocks_never_exceed_their_face():
    context = TypeContext("B3")
    for block in decompose(context).blocks:
        assert block.torus_rank <= block.z_dimension
        assert block.c > 0
        assert not block.notes


def test_rank_four_decompositions():
    d4 = TypeContext("D4")
    decomposition = decompose(d4)
    principal = decomposition.block(())
    assert (principal.torus_rank, principal.group.order) == (4, 192)
    assert not principal.group.recognized
    assert any("order 192" in note for note in principal.notes)
    assert d4.assignment(d4.face((1, 2, 3, 4))).rule == "factor-rule"
    assert all(b.torus_rank <= b.z_dimension for b in decomposition.blocks)

    f4 = TypeContext("F4")
    decomposition = decompose(f4)
    assert decomposition.block(()).group.order == 1152
    spin9 = decomposition.block((0, 1, 2, 3))
    assert spin9.is_cuspidal and spin9.c == 1
    assert decomposition.block((1, 2, 3, 4)).c == 1
    assert decomposition.block((0, 2, 3, 4)).c == 1
    assert decomposition.cuspidal_total == sum(f4.assignment(f).count for f in f4.faces if f.is_vertex)


def test_end_algebra_series():
    a1 = decompose("A1")
    assert list(end_algebra_series(a1.block(()), 4).coefficients) == [2, 0, 2, 0, 2]
    assert end_algebra_series(a1.block((1,)), 4).render() == "1"
    a2 = decompose("A2")
    assert end_algebra_series(a2.block(()), 2).render() == "6 + 12t^2"


def test_irreducible_parameters_of_a1():
    assert len(irreducible_parameters("A1", 1)) == 3
    parameters = irreducible_parameters("A1", 2)
    principal = [p for p in parameters if p.face_nodes == ()]
    assert [p.point.coordinates for p in principal] == [(Fraction(0),), (Fraction(1, 2),)]
    for p in principal:
        model = parameter_model(p)
        assert model.stabilizer.order == 2
        assert model.irreducible_count == 2
    vertices = [p for p in parameters if p.face_nodes]
    assert len(vertices) == 2
    assert all(parameter_model(p).irreducible_count == 1 for p in vertices)


def test_parameters_repeat_per_cuspidal_index():
    parameters = irreducible_parameters("A2", 1)
    vertex = [p for p in parameters if p.face_nodes == (1, 2)]
    assert sorted(p.cuspidal_index for p in vertex) == [1, 2]


def test_json_model_round_trip():
    model = decompose("G2").to_model()
    assert model.cuspidal_total == 3
    assert DecompositionModel.model_validate_json(model.model_dump_json()) == model


if __name__ == "__main__":
    test_render_component()
    test_a1_decomposition()
    test_rank_two_texts()
    test_profiles()
    test_blocks_never_exceed_their_face()
    test_rank_four_decompositions()
    test_end_algebra_series()
    test_irreducible_parameters_of_a1()
    test_parameters_repeat_per_cuspidal_index()
    test_json_model_round_trip()
    print("✅ decomposition tests passed")
