# src/molien/series.py
"""Truncated power series in one variable t with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from src.utils.errors import DomainError, InvariantViolation

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class GradedSeries:
    """
    Coefficients of t^0..t^order. Products and quotients are exact up to
    the truncation degree; mixing orders truncates to the smaller one.
    """
    coefficients: tuple[Fraction, ...]

    @classmethod
    def from_coefficients(cls, values: Iterable[Scalar], order: int) -> "GradedSeries":
        if order < 0:
            raise DomainError(f"truncation order must be >= 0, got {order}")
        values = [Fraction(v) for v in values][: order + 1]
        values += [Fraction(0)] * (order + 1 - len(values))
        return cls(tuple(values))

    @classmethod
    def zero(cls, order: int) -> "GradedSeries":
        return cls.from_coefficients([], order)

    @classmethod
    def one(cls, order: int) -> "GradedSeries":
        return cls.from_coefficients([1], order)

    @classmethod
    def monomial(cls, coefficient: Scalar, degree: int, order: int) -> "GradedSeries":
        values = [0] * degree + [coefficient]
        return cls.from_coefficients(values, order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, degree: int) -> Fraction:
        return self.coefficients[degree] if 0 <= degree <= self.order else Fraction(0)

    def _aligned(self, other: "GradedSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        n = self._aligned(other)
        return GradedSeries(tuple(self[k] + other[k] for k in range(n + 1)))

    def __sub__(self, other: "GradedSeries") -> "GradedSeries":
        return self + other.scale(-1)

    def __neg__(self) -> "GradedSeries":
        return self.scale(-1)

    def scale(self, factor: Scalar) -> "GradedSeries":
        return GradedSeries(tuple(Fraction(factor) * c for c in self.coefficients))

    def __mul__(self, other: "GradedSeries") -> "GradedSeries":
        n = self._aligned(other)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self[i]
            if a == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other[j]
        return GradedSeries(tuple(out))

    def inverse(self) -> "GradedSeries":
        """Multiplicative inverse; the constant term must be nonzero."""
        if self[0] == 0:
            raise InvariantViolation("series with zero constant term has no inverse")
        out = [Fraction(0)] * (self.order + 1)
        out[0] = 1 / self[0]
        for k in range(1, self.order + 1):
            total = sum(self[j] * out[k - j] for j in range(1, k + 1))
            out[k] = -total / self[0]
        return GradedSeries(tuple(out))

    def __truediv__(self, other: "GradedSeries") -> "GradedSeries":
        return self * other.inverse()

    def truncate(self, order: int) -> "GradedSeries":
        return GradedSeries.from_coefficients(self.coefficients, order)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def is_natural(self) -> bool:
        """All coefficients are nonnegative integers."""
        return all(c.denominator == 1 and c >= 0 for c in self.coefficients)

    def render(self) -> str:
        """'1 + t^3 + 2t^4'; the zero series renders as '0'."""
        terms = []
        for degree, c in enumerate(self.coefficients):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            size = abs(c)
            if degree == 0:
                body = str(size)
            else:
                power = "t" if degree == 1 else f"t^{degree}"
                body = power if size == 1 else f"{size}{power}"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.render()


def polynomial(coefficients: Sequence[Scalar], order: int) -> GradedSeries:
    return GradedSeries.from_coefficients(coefficients, order)


def product_formula(degrees: Sequence[int], order: int) -> GradedSeries:
    """Prod_i (1 + t^(2d_i - 1)) / (1 - t^(2d_i)), the closed form for H*(G/G)."""
    result = GradedSeries.one(order)
    for d in degrees:
        numerator = GradedSeries.one(order) + GradedSeries.monomial(1, 2 * d - 1, order)
        denominator = GradedSeries.one(order) - GradedSeries.monomial(1, 2 * d, order)
        result = result * numerator / denominator
    return result
