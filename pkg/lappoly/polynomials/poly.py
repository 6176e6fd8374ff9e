"""Dense univariate polynomials with exact integer or rational coefficients."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Tuple, Type, TypeVar, Union

from lappoly.exceptions import (
    InternalInvariantViolation,
    NotDivisible,
    OddCoefficientPresent,
)

Scalar = Union[int, Fraction]
P = TypeVar("P", bound="DensePoly")


class DensePoly:
    """
    Base class for dense polynomials; `coeffs[k]` is the coefficient of x^k.

    Trailing zeros are stripped on construction, so the zero polynomial has
    no coefficients and degree -1. Instances are immutable values.
    """

    __slots__ = ("_coeffs",)

    def __init__(self: DensePoly, coeffs: Iterable[Any] = ()) -> None:
        """
        Initialize a polynomial from ascending coefficients.

        Args:
            coeffs: The coefficients, constant term first.
        """
        values = [self._coerce(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "_coeffs", tuple(values))

    @staticmethod
    def _coerce(value: Any) -> Any:
        raise NotImplementedError

    def __setattr__(self: DensePoly, name: str, value: Any) -> None:
        """
        Reject mutation.

        Args:
            name: The attribute name.
            value: The value.

        Raises:
            AttributeError: Always; polynomials are immutable.
        """
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __reduce__(self: DensePoly) -> Tuple[Type[DensePoly], Tuple[Tuple[Any, ...]]]:
        """
        Pickle through the constructor.

        Returns:
            The class and its constructor arguments.
        """
        return type(self), (self._coeffs,)

    @classmethod
    def from_descending(cls: Type[P], coeffs: Sequence[Any]) -> P:
        """
        Build a polynomial from coefficients listed highest power first.

        Args:
            coeffs: The coefficients, leading term first.

        Returns:
            The polynomial.
        """
        return cls(reversed(list(coeffs)))

    @classmethod
    def x(cls: Type[P]) -> P:
        """
        The polynomial x.

        Returns:
            x.
        """
        return cls((0, 1))

    @classmethod
    def constant(cls: Type[P], value: Scalar) -> P:
        """
        A constant polynomial.

        Args:
            value: The constant.

        Returns:
            The polynomial equal to `value`.
        """
        return cls((value,))

    @classmethod
    def monomial(cls: Type[P], power: int, value: Scalar = 1) -> P:
        """
        The polynomial value * x^power.

        Args:
            power: The exponent.
            value: The coefficient.

        Returns:
            The monomial.
        """
        return cls([0] * power + [value])

    @classmethod
    def linear_root(cls: Type[P], root: Scalar) -> P:
        """
        The monic linear polynomial x - root.

        Args:
            root: The root.

        Returns:
            x - root.
        """
        return cls((-root, 1))

    @property
    def coeffs(self: DensePoly) -> Tuple[Any, ...]:
        """
        The ascending coefficient tuple.

        Returns:
            The coefficients, constant term first.
        """
        return self._coeffs

    @property
    def degree(self: DensePoly) -> int:
        """
        The degree; -1 for the zero polynomial.

        Returns:
            The degree.
        """
        return len(self._coeffs) - 1

    def is_zero(self: DensePoly) -> bool:
        """
        Whether this is the zero polynomial.

        Returns:
            True if every coefficient is zero.
        """
        return not self._coeffs

    def coeff(self: DensePoly, power: int) -> Any:
        """
        The coefficient of x^power, zero beyond the degree.

        Args:
            power: The exponent.

        Returns:
            The coefficient.
        """
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return self._coerce(0)

    @property
    def leading(self: DensePoly) -> Any:
        """
        The leading coefficient; zero for the zero polynomial.

        Returns:
            The leading coefficient.
        """
        return self.coeff(self.degree)

    def descending(self: DensePoly) -> List[Any]:
        """
        The coefficients listed highest power first.

        Returns:
            The coefficients, leading term first; `[0]` for the zero polynomial.
        """
        return list(reversed(self._coeffs)) or [self._coerce(0)]

    def to_strings(self: DensePoly) -> List[str]:
        """
        The descending coefficients as exact decimal strings.

        Returns:
            One string per coefficient, leading term first.
        """
        return [str(c) for c in self.descending()]

    def _result_type(self: DensePoly, other: Any) -> Type[DensePoly]:
        if isinstance(self, RatPoly) or isinstance(other, (RatPoly, Fraction)):
            return RatPoly
        return type(self)

    def __add__(self: DensePoly, other: Any) -> DensePoly:
        """
        Add a polynomial or scalar.

        Args:
            other: The summand.

        Returns:
            The sum.
        """
        if not isinstance(other, DensePoly):
            other = self._result_type(other).constant(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return self._result_type(other)(out)

    __radd__ = __add__

    def __neg__(self: DensePoly) -> DensePoly:
        """
        Negate.

        Returns:
            The negated polynomial.
        """
        return type(self)(-c for c in self._coeffs)

    def __sub__(self: DensePoly, other: Any) -> DensePoly:
        """
        Subtract a polynomial or scalar.

        Args:
            other: The subtrahend.

        Returns:
            The difference.
        """
        return self + (-other)

    def __rsub__(self: DensePoly, other: Any) -> DensePoly:
        """
        Subtract from a scalar.

        Args:
            other: The minuend.

        Returns:
            The difference.
        """
        return (-self) + other

    def __mul__(self: DensePoly, other: Any) -> DensePoly:
        """
        Multiply by a polynomial or scalar.

        Args:
            other: The factor.

        Returns:
            The product.
        """
        if not isinstance(other, DensePoly):
            return self.scale(other)
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return self._result_type(other)()
        out = [self._coerce(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return self._result_type(other)(out)

    __rmul__ = __mul__

    def __pow__(self: DensePoly, exponent: int) -> DensePoly:
        """
        Raise to a nonnegative integer power.

        Args:
            exponent: The exponent.

        Returns:
            The power.
        """
        result: DensePoly = type(self).constant(1)
        base: DensePoly = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self: DensePoly, factor: Scalar) -> DensePoly:
        """
        Multiply every coefficient by a scalar.

        Args:
            factor: The scalar.

        Returns:
            The scaled polynomial.
        """
        return self._result_type(factor)(c * factor for c in self._coeffs)

    def shift(self: P, power: int) -> P:
        """
        Multiply by x^power.

        Args:
            power: A nonnegative exponent.

        Returns:
            x^power times this polynomial.
        """
        if self.is_zero():
            return self
        return type(self)([0] * power + list(self._coeffs))

    def derivative(self: P) -> P:
        """
        The formal derivative.

        Returns:
            d/dx of this polynomial.
        """
        return type(self)(k * c for k, c in enumerate(self._coeffs) if k)

    def __eq__(self: DensePoly, other: object) -> bool:
        """
        Compare coefficients; integer and rational polynomials compare by value.

        Args:
            other: The other object.

        Returns:
            True if both are polynomials with equal coefficients.
        """
        if isinstance(other, DensePoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == type(self).constant(other)._coeffs
        return NotImplemented

    def __hash__(self: DensePoly) -> int:
        """
        Hash by coefficients.

        Returns:
            The hash.
        """
        return hash(self._coeffs)

    def __repr__(self: DensePoly) -> str:
        """
        Debug representation.

        Returns:
            The class name and ascending coefficients.
        """
        return f"{type(self).__name__}({list(self._coeffs)!r})"

    def __str__(self: DensePoly) -> str:
        """
        Human-readable form, e.g. `x^3 - 6x^2 + 9x - 2`.

        Returns:
            The formatted polynomial.
        """
        if self.is_zero():
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self._coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "x" if power == 1 else f"x^{power}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


class IntPoly(DensePoly):
    """A polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(value: Any) -> int:
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError(f"IntPoly coefficient {value} is not an integer.")
            return int(value.numerator)
        return int(value)


class RatPoly(DensePoly):
    """A polynomial with exact rational coefficients in lowest terms."""

    __slots__ = ()

    @staticmethod
    def _coerce(value: Any) -> Fraction:
        return Fraction(value)

    @classmethod
    def from_poly(cls: Type[RatPoly], poly: DensePoly) -> RatPoly:
        """
        Convert any dense polynomial to rational coefficients.

        Args:
            poly: The polynomial.

        Returns:
            The same polynomial as a RatPoly.
        """
        return cls(poly.coeffs)

    def to_strings(self: RatPoly) -> List[str]:
        """
        The descending coefficients as `p/q` strings (`p` when integral).

        Returns:
            One string per coefficient, leading term first.
        """
        return [str(c) for c in self.descending()]

    def clear_denominators(self: RatPoly) -> IntPoly:
        """
        Multiply through by the least common denominator.

        Returns:
            An integer polynomial with the same roots.
        """
        lcm = 1
        for c in self.coeffs:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        return IntPoly(c * lcm for c in self.coeffs)


def substitute_square(poly: P) -> P:
    """
    Map p(x) to p(x^2).

    Args:
        poly: The polynomial p.

    Returns:
        p(x^2): the coefficient at 2k is p's coefficient at k, odd powers vanish.
    """
    out: List[Any] = []
    for c in poly.coeffs:
        out.extend((c, 0))
    return type(poly)(out)


def divide_by_power(poly: P, power: int) -> P:
    """
    Divide exactly by x^power.

    Args:
        poly: The polynomial.
        power: The exponent k >= 0.

    Returns:
        poly / x^k.

    Raises:
        InternalInvariantViolation: If k is negative.
        NotDivisible: If one of the lowest k coefficients is nonzero.
    """
    if power < 0:
        raise InternalInvariantViolation(f"Cannot divide by x^{power}.")
    low = [c for c in poly.coeffs[:power] if c != 0]
    if low:
        raise NotDivisible(f"{poly} is not divisible by x^{power}.")
    return type(poly)(poly.coeffs[power:])


def even_part_unsquare(poly: P) -> P:
    """
    Recover q from p = q(x^2).

    Args:
        poly: The polynomial p with only even powers.

    Returns:
        q with q(x^2) = p.

    Raises:
        OddCoefficientPresent: If p has a nonzero odd-power coefficient.
    """
    odd = [k for k in range(1, len(poly.coeffs), 2) if poly.coeffs[k] != 0]
    if odd:
        raise OddCoefficientPresent(f"{poly} has nonzero odd powers {odd}.")
    return type(poly)(poly.coeffs[::2])


def evaluate(poly: DensePoly, point: Scalar) -> Fraction:
    """
    Evaluate exactly by Horner's rule.

    Args:
        poly: The polynomial.
        point: A rational point.

    Returns:
        The exact value.
    """
    value = Fraction(0)
    at = Fraction(point)
    for c in reversed(poly.coeffs):
        value = value * at + c
    return value
