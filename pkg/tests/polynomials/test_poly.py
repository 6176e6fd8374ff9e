import pickle
import random
from fractions import Fraction

import pytest

from lappoly.exceptions import (
    InternalInvariantViolation,
    NotDivisible,
    OddCoefficientPresent,
)
from lappoly.polynomials import (
    IntPoly,
    RatPoly,
    divide_by_power,
    evaluate,
    even_part_unsquare,
    substitute_square,
)


class TestIntPoly:
    def test_trailing_zeros_stripped(self):
        poly = IntPoly([1, 2, 0, 0])
        assert poly.coeffs == (1, 2)
        assert poly.degree == 1

    def test_zero(self):
        zero = IntPoly()
        assert zero.is_zero()
        assert zero.degree == -1
        assert zero.descending() == [0]
        assert str(zero) == "0"

    def test_from_descending(self):
        poly = IntPoly.from_descending([1, -6, 9, -2])
        assert poly.coeffs == (-2, 9, -6, 1)
        assert poly.to_strings() == ["1", "-6", "9", "-2"]
        assert poly.leading == 1

    def test_arithmetic(self):
        x = IntPoly.x()
        assert (x - 1) * (x + 1) == IntPoly.from_descending([1, 0, -1])
        assert (x - 2) ** 3 == IntPoly.from_descending([1, -6, 12, -8])
        assert 3 - x == IntPoly([3, -1])
        assert (x * 0).is_zero()

    def test_scale_shift_derivative(self):
        poly = IntPoly([1, 2, 3])
        assert poly.scale(-2) == IntPoly([-2, -4, -6])
        assert poly.shift(2) == IntPoly([0, 0, 1, 2, 3])
        assert poly.derivative() == IntPoly([2, 6])
        assert IntPoly.monomial(3, 5) == IntPoly([0, 0, 0, 5])

    def test_coeff_outside_range(self):
        assert IntPoly([1, 2]).coeff(5) == 0
        assert IntPoly([1, 2]).coeff(-1) == 0

    def test_str(self):
        assert str(IntPoly.from_descending([1, -6, 9, -2])) == "x^3 - 6x^2 + 9x - 2"
        assert str(IntPoly.from_descending([-1, 0, 1])) == "-x^2 + 1"

    def test_non_integral_rejected(self):
        with pytest.raises(ValueError):
            IntPoly([Fraction(1, 2)])

    def test_immutable(self):
        with pytest.raises(AttributeError):
            IntPoly([1])._coeffs = (2,)

    def test_hash_and_equality(self):
        assert {IntPoly([1, 1]), IntPoly([1, 1, 0])} == {IntPoly([1, 1])}
        assert IntPoly([3]) == 3

    def test_pickle(self):
        poly = IntPoly([1, -2, 3])
        assert pickle.loads(pickle.dumps(poly)) == poly


class TestRatPoly:
    def test_promotion(self):
        mixed = IntPoly([1, 1]) + RatPoly([Fraction(1, 2)])
        assert isinstance(mixed, RatPoly)
        assert mixed == RatPoly([Fraction(3, 2), 1])

    def test_scale_by_fraction(self):
        assert isinstance(IntPoly([2]).scale(Fraction(1, 3)), RatPoly)

    def test_equal_across_types(self):
        assert RatPoly([1, 2]) == IntPoly([1, 2])

    def test_strings(self):
        poly = RatPoly.from_descending([1, Fraction(-1, 2), Fraction(1, 3)])
        assert poly.to_strings() == ["1", "-1/2", "1/3"]

    def test_clear_denominators(self):
        poly = RatPoly([Fraction(1, 6), Fraction(-1, 2), 1])
        assert poly.clear_denominators() == IntPoly([1, -3, 6])

    def test_pickle(self):
        poly = RatPoly([Fraction(1, 3), 2])
        assert pickle.loads(pickle.dumps(poly)) == poly


class TestHelpers:
    def test_substitute_square(self):
        poly = IntPoly.from_descending([1, -6, 9, -2])
        assert substitute_square(poly) == IntPoly.from_descending(
            [1, 0, -6, 0, 9, 0, -2]
        )

    def test_unsquare_inverts_substitute(self):
        poly = IntPoly.from_descending([1, -6, 9, -2])
        assert even_part_unsquare(substitute_square(poly)) == poly

    def test_unsquare_odd(self):
        with pytest.raises(OddCoefficientPresent):
            even_part_unsquare(IntPoly([0, 1]))

    def test_divide_by_power(self):
        assert divide_by_power(IntPoly([0, 0, 1, 2]), 2) == IntPoly([1, 2])
        assert divide_by_power(IntPoly([1, 2]), 0) == IntPoly([1, 2])
        with pytest.raises(NotDivisible):
            divide_by_power(IntPoly([0, 1, 1]), 2)

    def test_divide_by_negative_power(self):
        with pytest.raises(InternalInvariantViolation):
            divide_by_power(IntPoly([1, 2]), -1)

    @pytest.mark.parametrize("seed", range(20))
    def test_divide_undoes_shift(self, seed):
        rng = random.Random(seed)
        coeffs = [rng.randint(-9, 9) for _ in range(rng.randint(1, 8))]
        coeffs[0] = coeffs[0] or 1
        for poly in (IntPoly(coeffs), RatPoly([Fraction(c, 3) for c in coeffs])):
            k = rng.randint(0, 5)
            assert divide_by_power(poly.shift(k), k) == poly
            if k:
                with pytest.raises(NotDivisible):
                    divide_by_power(poly.shift(k - 1), k)

    def test_evaluate(self):
        poly = IntPoly.from_descending([1, -6, 9, -2])
        assert evaluate(poly, 2) == 0
        assert evaluate(poly, Fraction(1, 2)) == Fraction(9, 8)
