"""Exact rational and elementary number-theoretic helpers.

Every quantity in the package is a :class:`fractions.Fraction`; this module
adds the few constructors, parsers and integer routines the rest of the
package shares.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple, Union

__all__ = [
    "Rational",
    "DegenerateFraction",
    "SquareFreeDecomposition",
    "make_rational",
    "parse_rational",
    "format_rational",
    "squarefree_decompose",
    "is_squarefree",
    "gcd_pair",
    "sign",
]

Rational = Fraction
RationalLike = Union[Fraction, int, str]


class DegenerateFraction(ZeroDivisionError, ValueError):
    """Raised for a fraction with zero denominator."""


class SquareFreeDecomposition(NamedTuple):
    d: int
    p_prime: int


def make_rational(num: int, den: int) -> Fraction:
    """Reduced fraction ``num/den`` with positive denominator."""
    if den == 0:
        raise DegenerateFraction(f"degenerate fraction {num}/0")
    return Fraction(int(num), int(den))


def parse_rational(value: RationalLike) -> Fraction:
    """Parse ``"num/den"``, a bare integer string, an int or a Fraction.

    Floats are refused: nothing in the package is allowed to pass through
    binary floating point.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            n = int(num)
            d = int(den) if sep else 1
        except ValueError:
            raise ValueError(f"malformed rational {value!r}") from None
        return make_rational(n, d)
    raise TypeError(f"cannot read {type(value).__name__} as an exact rational")


def format_rational(x: RationalLike) -> str:
    """Serialize as ``"num/den"``; integers keep the ``/1``."""
    x = parse_rational(x)
    return f"{x.numerator}/{x.denominator}"


def gcd_pair(a: int, b: int) -> int:
    return gcd(a, b)


def sign(x) -> int:
    return (x > 0) - (x < 0)


def squarefree_decompose(p: int) -> SquareFreeDecomposition:
    """Write ``p = d**2 * p_prime`` with ``p_prime`` square-free.

    ``d`` is the largest integer whose square divides ``p``.  Trial division
    only; inputs are expected to be orders of small homology groups.
    """
    if p < 1:
        raise ValueError(f"squarefree_decompose needs a positive integer, got {p}")
    d = 1
    rest = p
    f = 2
    while f * f <= rest:
        if rest % f == 0:
            e = 0
            while rest % f == 0:
                rest //= f
                e += 1
            d *= f ** (e // 2)
        f += 1 if f == 2 else 2
    return SquareFreeDecomposition(d, p // (d * d))


def is_squarefree(p: int) -> bool:
    if p < 1:
        raise ValueError(f"expected a positive integer, got {p}")
    return squarefree_decompose(p).d == 1
