# src/molien/hom.py
"""
Graded Hom series by Molien averaging.

For a finite group G acting on z by rational matrices, the graded
multiplicity of rho in Sym(z*[-2]) (x) Ext(z*[-1]) (x) rho' is

    (1/|G|) sum_g chi_rho(g) chi_rho'(g) det(1 + t g) / det(1 - t^2 g)

with the exterior generators in degree 1 and the symmetric ones in degree 2.
Every character here is rational, so no complex conjugation is needed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence, Union

from sympy import Matrix, Rational, symbols

from config.schemas import CharacterName
from src.algebra.affine_element import AffineElement, enumerate_group
from src.algebra.lattice import determinant
from src.algebra.root_system import RootSystem
from src.coxeter.torsion import LatticeAction, TorsionPoint, conjugacy_classes, same_orbit
from src.molien.series import GradedSeries, product_formula
from src.utils.errors import DomainError, InvariantViolation, NonIntegralSeriesError

logger = logging.getLogger(__name__)

MatrixType = tuple[tuple[Fraction, ...], ...]
CharacterSpec = Union[CharacterName, str, Sequence]

_u = symbols("u")


@dataclass(frozen=True)
class MatrixGroupAction:
    """A finite group given by its element list, acting on z by rational matrices."""
    matrices: tuple[MatrixType, ...]
    _classes: list = field(default_factory=list, compare=False, hash=False, repr=False)

    @classmethod
    def from_matrices(cls, matrices: Sequence[Sequence[Sequence]]) -> "MatrixGroupAction":
        mats = tuple(tuple(tuple(Fraction(x) for x in row) for row in m) for m in matrices)
        if not mats:
            raise DomainError("a matrix group needs at least the identity")
        action = cls(mats)
        elements = set(mats)
        dim = action.dim
        for a in mats:
            for b in mats:
                product = AffineElement(a, (Fraction(0),) * dim) * AffineElement(b, (Fraction(0),) * dim)
                if product.linear not in elements:
                    raise InvariantViolation("matrices are not closed under multiplication")
        return action

    @property
    def dim(self) -> int:
        return len(self.matrices[0])

    @property
    def order(self) -> int:
        return len(self.matrices)

    def elements(self) -> list[AffineElement]:
        zero = (Fraction(0),) * self.dim
        return [AffineElement(m, zero) for m in self.matrices]

    def classes(self) -> list[list[int]]:
        if not self._classes:
            self._classes.extend(conjugacy_classes(self.elements()))
        return self._classes


def trivial_group_action(dim: int) -> MatrixGroupAction:
    identity = tuple(tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim))
    return MatrixGroupAction.from_matrices([identity])


@lru_cache(maxsize=4096)
def char_poly_coefficients(matrix: MatrixType) -> tuple[Fraction, ...]:
    """c_0..c_n with det(1 - u g) = sum_k c_k u^k."""
    if not matrix:
        return (Fraction(1),)
    sym = Matrix([[Rational(x.numerator, x.denominator) for x in row] for row in matrix])
    coeffs = sym.charpoly(_u).all_coeffs()
    return tuple(Fraction(int(Rational(c).p), int(Rational(c).q)) for c in coeffs)


def _det_one_plus(matrix: MatrixType, order: int) -> GradedSeries:
    coeffs = char_poly_coefficients(matrix)
    return GradedSeries.from_coefficients([c * (-1) ** k for k, c in enumerate(coeffs)], order)


def _det_one_minus_square(matrix: MatrixType, order: int) -> GradedSeries:
    coeffs = char_poly_coefficients(matrix)
    values = [Fraction(0)] * (2 * len(coeffs))
    for k, c in enumerate(coeffs):
        values[2 * k] = c
    return GradedSeries.from_coefficients(values, order)


def builtin_character(name: Union[CharacterName, str]) -> Callable[[MatrixType], Fraction]:
    name = CharacterName(name)
    if name == CharacterName.TRIVIAL:
        return lambda m: Fraction(1)
    if name == CharacterName.SIGN:
        return lambda m: determinant(m) if m else Fraction(1)
    return lambda m: sum((m[i][i] for i in range(len(m))), Fraction(0))


def character_values(action: MatrixGroupAction, spec: CharacterSpec) -> tuple[Fraction, ...]:
    """
    Values of a character on every element of the action.

    `spec` is a built-in name or an explicit value list; explicit values
    must be rational and constant on conjugacy classes.
    """
    if isinstance(spec, (CharacterName, str)):
        try:
            function = builtin_character(spec)
        except ValueError as e:
            raise DomainError(f"unknown character {spec!r}; expected one of {[c.value for c in CharacterName]}") from e
        return tuple(function(m) for m in action.matrices)

    try:
        values = tuple(Fraction(v) for v in spec)
    except (TypeError, ValueError) as e:
        raise DomainError(f"character values must be rational: {e}") from e
    if len(values) != action.order:
        raise DomainError(f"character has {len(values)} values for a group of order {action.order}")
    for members in action.classes():
        if len({values[k] for k in members}) != 1:
            raise DomainError("character values are not constant on a conjugacy class")
    return values


def hom_series(
    action: MatrixGroupAction,
    rho: CharacterSpec = CharacterName.TRIVIAL,
    rho_prime: CharacterSpec = CharacterName.TRIVIAL,
    order: int = 8,
    check: bool = True,
) -> GradedSeries:
    """
    Graded Hom(rho, S (x) rho') as a truncated series.

    With `check` the coefficients must be nonnegative integers; anything
    else means the character data is wrong.
    """
    chi = character_values(action, rho)
    chi_prime = character_values(action, rho_prime)
    total = GradedSeries.zero(order)
    for matrix, a, b in zip(action.matrices, chi, chi_prime):
        weight = a * b
        if weight == 0:
            continue
        term = _det_one_plus(matrix, order) / _det_one_minus_square(matrix, order)
        total = total + term.scale(weight)
    result = total.scale(Fraction(1, action.order))
    if check and not result.is_natural():
        raise NonIntegralSeriesError(f"Hom series {result.render()} has non-natural coefficients")
    return result


@lru_cache(maxsize=None)
def weyl_group_action(root_system: RootSystem) -> MatrixGroupAction:
    """W acting on the cocharacter space through the simple reflections."""
    elements = enumerate_group(root_system.simple_reflections())
    return MatrixGroupAction(tuple(g.linear for g in elements))


def adjoint_quotient_series(root_system: RootSystem, order: int) -> GradedSeries:
    """
    Poincare series of H*(G/G): the Molien sum over W on the reflection
    representation, cross-checked against prod (1 + t^(2d-1)) / (1 - t^(2d)).
    """
    molien = hom_series(weyl_group_action(root_system), order=order)
    closed = product_formula(root_system.weyl_degrees, order)
    if molien != closed:
        raise InvariantViolation(
            f"{root_system.type_label}: Molien sum {molien.render()} differs from {closed.render()}"
        )
    return molien


@dataclass(frozen=True)
class IrreducibleParameter:
    """
    (I, cuspidal index, s, rho): a block face, a cuspidal datum on it, an
    orbit representative in S_I and a character of the stabilizer W^I_s.
    """
    type_label: str
    face_nodes: tuple[int, ...]
    cuspidal_index: int
    point: TorsionPoint
    lattice_action: LatticeAction
    stabilizer: MatrixGroupAction
    rho: CharacterSpec = CharacterName.TRIVIAL

    @property
    def key(self) -> tuple:
        return (self.type_label, self.face_nodes, self.cuspidal_index)


def cross_block_hom(
    first: IrreducibleParameter, second: IrreducibleParameter, order: int = 8
) -> GradedSeries:
    """
    Hom between the irreducibles of two parameters: zero unless the face,
    cuspidal datum and W^I-orbit of s agree, else the Molien Hom series on
    the stabilizer.
    """
    if first.key != second.key:
        return GradedSeries.zero(order)
    if not same_orbit(first.lattice_action, first.point, second.point):
        return GradedSeries.zero(order)
    rho_prime = second.rho
    if first.point != second.point and not isinstance(rho_prime, (CharacterName, str)):
        raise DomainError("explicit characters can only be compared at the same torsion point")
    return hom_series(first.stabilizer, first.rho, rho_prime, order)
