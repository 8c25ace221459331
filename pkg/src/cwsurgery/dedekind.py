"""Sawtooth function, Dedekind sums and the Dedekind symbol.

Conventions
-----------
``s(p, q) = sum_{k=1}^{|q|-1} ((k/q)) ((k p/q))`` with the sawtooth
``((x)) = x - floor(x) - 1/2`` for non-integral ``x`` and ``((x)) = 0`` at
integers.  The symbol is ``S(p/q) = 12 sign(q) s(p, q)``.  With these
choices the symbol obeys

    S(p/q) - p/q = -S(q/p) + q/p + 1/(pq) - 3        (p, q > 0 coprime)

which is the form the surgery formulas rely on.
"""
from __future__ import annotations

from fractions import Fraction
from math import floor, gcd

from .arithmetic import RationalLike, parse_rational

__all__ = [
    "sawtooth",
    "dedekind_sum",
    "dedekind_sum_naive",
    "dedekind_symbol",
]


def _check_args(p: int, q: int) -> None:
    if q == 0:
        raise ValueError("Dedekind sum needs q != 0")
    if gcd(p, q) != 1:
        raise ValueError(f"Dedekind sum needs coprime arguments, got ({p}, {q})")


def sawtooth(x: RationalLike) -> Fraction:
    x = parse_rational(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - Fraction(1, 2)


def dedekind_sum_naive(p: int, q: int) -> Fraction:
    """Direct summation of the defining sum; O(|q|).

    Kept as the audit path for :func:`dedekind_sum`.  For ``0 < k < |q|``
    neither ``k/q`` nor ``kp/q`` is an integer, so each sawtooth value is
    ``(2r - |q|) / (2|q|)`` with ``r`` the residue mod ``|q|``; the sum is
    accumulated over that common denominator.
    """
    _check_args(p, q)
    a = abs(q)
    total = 0
    for k in range(1, a):
        total += (2 * k - a) * (2 * (k * p % a) - a)
    # s(p, -q) = s(p, q): both sawtooth factors flip sign
    return Fraction(total, 4 * a * a)


def dedekind_sum(p: int, q: int) -> Fraction:
    """Dedekind sum ``s(p, q)`` by the Euclidean reciprocity recursion."""
    _check_args(p, q)
    q = abs(q)
    h = p % q
    acc = Fraction(0)
    sgn = 1
    # s(h, k) + s(k, h) = (h/k + k/h + 1/(hk))/12 - 1/4   for h, k > 0
    while q > 1 and h != 0:
        acc += sgn * (Fraction(h * h + q * q + 1, 12 * h * q) - Fraction(1, 4))
        sgn = -sgn
        h, q = q % h, h
    return acc


def dedekind_symbol(slope: RationalLike, q: int | None = None) -> Fraction:
    """``S(p/q) = 12 sign(q) s(p, q)``.

    Called either with a rational (``dedekind_symbol("2/3")``) or with the
    integer pair (``dedekind_symbol(2, 3)``).  The value only depends on the
    rational ``p/q``.
    """
    if q is None:
        if isinstance(slope, str) and slope.strip().endswith("/0"):
            raise ValueError("Dedekind symbol of a slope with q = 0")
        x = parse_rational(slope)
        p, q = x.numerator, x.denominator
    else:
        p = int(slope)
        if q == 0:
            raise ValueError("Dedekind symbol of a slope with q = 0")
    if q == 1 or q == -1:
        return Fraction(0)
    s = 12 * dedekind_sum(p, q)
    return s if q > 0 else -s
