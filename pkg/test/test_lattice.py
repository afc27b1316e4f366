import logging
from fractions import Fraction

from config.settings import LOG_LEVEL
from src.algebra.lattice import (
    Lattice,
    determinant,
    independent_rows,
    integer_kernel,
    inverse,
    rank,
    saturation,
    smith_invariants,
    solve,
)

# Configure logging
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def test_integer_kernel_is_primitive():
    kernel = integer_kernel([[1, 1, 0]], 3)
    assert len(kernel) == 2
    for v in kernel:
        assert v[0] + v[1] == 0
    assert Lattice.spanned_by(3, kernel).contains((1, -1, 0))
    assert Lattice.spanned_by(3, kernel).contains((0, 0, 1))


def test_saturation_recovers_primitive_span():
    sat = saturation([[2, 4]], 2)
    assert len(sat) == 1
    assert Lattice.spanned_by(2, sat).contains((1, 2))


def test_smith_invariants():
    assert smith_invariants([[2, 0], [0, 3]]) == (1, 6)
    assert smith_invariants([[2, 4], [4, 8]]) == (2,)
    assert smith_invariants([]) == ()


def test_lattice_membership_and_covolume():
    lattice = Lattice.spanned_by(2, [(2, 0), (0, 3)])
    assert lattice.rank == 2
    assert lattice.covolume() == 6
    assert lattice.contains((2, 3))
    assert not lattice.contains((1, 0))
    assert len(lattice.coset_representatives()) == 6
    half = Lattice.spanned_by(1, [(Fraction(1, 2),)])
    assert half.contains((Fraction(3, 2),))
    assert half.covolume() == Fraction(1, 2)


def test_exact_inverse_and_determinant():
    m = ((2, -1), (-1, 2))
    assert determinant(m) == 3
    inv = inverse(m)
    assert inv == ((Fraction(2, 3), Fraction(1, 3)), (Fraction(1, 3), Fraction(2, 3)))
    assert all(isinstance(x, Fraction) for row in inv for x in row)
    assert determinant(((Fraction(1, 2), 1), (1, 4))) == 1
    assert determinant(()) == 1


def test_singular_systems():
    singular = ((1, 2), (2, 4))
    assert rank(singular) == 1
    assert solve(singular, (1, 2)) is None
    assert solve(((2, 0), (0, 4)), (1, 1)) == (Fraction(1, 2), Fraction(1, 4))
    assert independent_rows(((1, 0), (2, 0), (0, 1))) == (0, 2)


if __name__ == "__main__":
    test_integer_kernel_is_primitive()
    test_saturation_recovers_primitive_span()
    test_smith_invariants()
    test_lattice_membership_and_covolume()
    test_exact_inverse_and_determinant()
    test_singular_systems()
    print("✅ lattice tests passed")
