"""
Certified real-root isolation for real-rooted polynomials.

The polynomial is split into square-free factors, each factor gets its Sturm
sequence, and every distinct root is isolated and then bisected over exact
rationals until its interval is no wider than the requested tolerance. A root
that lands exactly on a bisection point is reported with a zero-width interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy

from lappoly.exceptions import BadParameter, NotRealRooted
from lappoly.polynomials.poly import DensePoly, RatPoly, evaluate
from lappoly.utils.config import ROOT_TOL
from lappoly.utils.types import RootListData

_X = sympy.Symbol("x")

_Sequence = List[List[Fraction]]


@dataclass(frozen=True)
class Root:
    """A real root with its multiplicity and certified isolating interval."""

    value: float
    multiplicity: int
    lower: Fraction
    upper: Fraction


@dataclass(frozen=True)
class RootList:
    """
    All real roots of a polynomial, nonincreasing, with multiplicities.

    `error_bound` bounds |value - true root| for every entry.
    """

    roots: Tuple[Root, ...]
    error_bound: float

    @property
    def degree(self: RootList) -> int:
        """
        The number of roots counted with multiplicity.

        Returns:
            The degree of the source polynomial.
        """
        return sum(root.multiplicity for root in self.roots)

    def expanded(self: RootList) -> Tuple[float, ...]:
        """
        The root values repeated by multiplicity, nonincreasing.

        Returns:
            The zero sequence.
        """
        return tuple(
            root.value for root in self.roots for _ in range(root.multiplicity)
        )

    @property
    def largest(self: RootList) -> Optional[float]:
        """
        The largest root, or None for a constant polynomial.

        Returns:
            λ_max.
        """
        return self.roots[0].value if self.roots else None

    @property
    def smallest(self: RootList) -> Optional[float]:
        """
        The smallest root, or None for a constant polynomial.

        Returns:
            λ_min.
        """
        return self.roots[-1].value if self.roots else None

    def to_dict(self: RootList) -> RootListData:
        """
        The JSON form: values and multiplicities, nonincreasing.

        Returns:
            The serialized root list.
        """
        return {
            "error_bound": self.error_bound,
            "roots": [
                {"value": root.value, "multiplicity": root.multiplicity}
                for root in self.roots
            ],
        }


def _to_fractions(poly: sympy.Poly) -> List[Fraction]:
    # ascending order, for Horner evaluation through `_horner`
    return [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]


def _horner(coeffs: Sequence[Fraction], at: Fraction) -> Fraction:
    value = Fraction(0)
    for c in reversed(coeffs):
        value = value * at + c
    return value


def _sign_changes(sturm: _Sequence, at: Fraction) -> int:
    changes = 0
    last = 0
    for coeffs in sturm:
        value = _horner(coeffs, at)
        if value == 0:
            continue
        sign = 1 if value > 0 else -1
        if last and sign != last:
            changes += 1
        last = sign
    return changes


def _count(sturm: _Sequence, lower: Fraction, upper: Fraction) -> int:
    # distinct roots in the half-open interval (lower, upper]
    return _sign_changes(sturm, lower) - _sign_changes(sturm, upper)


def _cauchy_bound(coeffs: Sequence[Fraction]) -> Fraction:
    leading = abs(coeffs[-1])
    return 1 + max((abs(c) / leading for c in coeffs[:-1]), default=Fraction(0))


def _refine(
    sturm: _Sequence, lower: Fraction, upper: Fraction, tol: Fraction
) -> Tuple[Fraction, Fraction]:
    """Shrink (lower, upper], known to hold exactly one root, below width tol."""
    factor = sturm[0]
    if _horner(factor, upper) == 0:
        return upper, upper
    while upper - lower > tol:
        mid = (lower + upper) / 2
        if _horner(factor, mid) == 0:
            return mid, mid
        if _count(sturm, lower, mid) == 1:
            upper = mid
        else:
            lower = mid
    return lower, upper


def _isolate(
    sturm: _Sequence, bound: Fraction, tol: Fraction
) -> List[Tuple[Fraction, Fraction]]:
    intervals = []
    pending = [(-bound, bound)]
    while pending:
        lower, upper = pending.pop()
        found = _count(sturm, lower, upper)
        if found == 0:
            continue
        if found == 1:
            intervals.append(_refine(sturm, lower, upper, tol))
            continue
        mid = (lower + upper) / 2
        pending.append((lower, mid))
        pending.append((mid, upper))
    return intervals


def _as_sympy(poly: DensePoly) -> sympy.Poly:
    if isinstance(poly, RatPoly):
        poly = poly.clear_denominators()
    return sympy.Poly(poly.descending(), _X, domain="ZZ")


def real_roots(poly: DensePoly, tol: float = ROOT_TOL) -> RootList:
    """
    Isolate every real root of a real-rooted polynomial.

    Args:
        poly: A nonzero integer or rational polynomial.
        tol: The maximum width of every isolating interval.

    Returns:
        The roots, nonincreasing, with multiplicities summing to the degree.

    Raises:
        BadParameter: If the polynomial is zero or tol is not positive.
        NotRealRooted: If fewer real roots than the degree are found.
    """
    if poly.is_zero():
        raise BadParameter("The zero polynomial has no root list.")
    if tol <= 0:
        raise BadParameter(f"Root tolerance must be positive, got {tol}.")
    if poly.degree == 0:
        return RootList((), 0.0)

    width = Fraction(tol)
    _, factors = _as_sympy(poly).sqf_list()
    roots: List[Root] = []
    for factor, multiplicity in factors:
        if factor.degree() < 1:
            continue
        sturm = [_to_fractions(s) for s in factor.sturm()]
        bound = _cauchy_bound(sturm[0])
        for lower, upper in _isolate(sturm, bound, width):
            roots.append(
                Root(float((lower + upper) / 2), int(multiplicity), lower, upper)
            )

    found = sum(root.multiplicity for root in roots)
    if found != poly.degree:
        raise NotRealRooted(
            f"{poly} has {found} real roots counted with multiplicity, "
            f"expected {poly.degree}.",
            {"polynomial": poly.to_strings(), "real_roots": found},
        )
    roots.sort(key=lambda root: root.value, reverse=True)
    error_bound = max(float(root.upper - root.lower) / 2 for root in roots)
    return RootList(tuple(roots), error_bound)


def brackets_zero(poly: DensePoly, root: Root) -> bool:
    """
    Whether the isolating interval of a root provably contains a zero of poly.

    A root of multiplicity k is a simple root of the (k-1)-th derivative, so the
    sign test runs on that derivative.

    Args:
        poly: The polynomial the root was extracted from.
        root: The root.

    Returns:
        True if the derivative vanishes at an endpoint or changes sign across
        the interval.
    """
    derivative = poly
    for _ in range(root.multiplicity - 1):
        derivative = derivative.derivative()
    low = evaluate(derivative, root.lower)
    high = evaluate(derivative, root.upper)
    return low == 0 or high == 0 or (low < 0) != (high < 0)
