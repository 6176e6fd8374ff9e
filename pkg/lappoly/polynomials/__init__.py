"""Exact polynomial arithmetic and certified real-root isolation."""

from lappoly.polynomials.poly import (
    DensePoly,
    IntPoly,
    RatPoly,
    divide_by_power,
    evaluate,
    even_part_unsquare,
    substitute_square,
)
from lappoly.polynomials.roots import Root, RootList, brackets_zero, real_roots

__all__ = [
    "DensePoly",
    "IntPoly",
    "RatPoly",
    "divide_by_power",
    "evaluate",
    "even_part_unsquare",
    "substitute_square",
    "Root",
    "RootList",
    "brackets_zero",
    "real_roots",
]
