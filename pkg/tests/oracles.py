"""Independent reference computations used only by the tests.

None of these call the code path they are used to check.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import floor, gcd, isqrt

from cwsurgery.casson_walker import TwoComponentLinkData, lambda_knot, lambda_link


def largest_square_root_divisor(p: int) -> int:
    """Largest d with d^2 | p, by testing every d up to sqrt(p)."""
    return max(d for d in range(1, isqrt(p) + 1) if p % (d * d) == 0)


def squarefree_by_trial(x: int) -> bool:
    return all(x % (k * k) for k in range(2, isqrt(x) + 1))


def sawtooth_fraction_sum(p: int, q: int) -> Fraction:
    """s(p, q) summed term by term in Fractions with the floor-based sawtooth."""
    def saw(x: Fraction) -> Fraction:
        return Fraction(0) if x.denominator == 1 else x - floor(x) - Fraction(1, 2)

    return sum((saw(Fraction(k, q)) * saw(Fraction(k * p, q)) for k in range(1, abs(q))), Fraction(0))


# --- polynomials with integer coefficients, lowest degree first -------------


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_divexact(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        coef, rem = divmod(num[k + len(den) - 1], den[-1])
        assert rem == 0
        out[k] = coef
        for j, d in enumerate(den):
            num[k + j] -= coef * d
    assert not any(num)
    return out


def _t_power_minus_one(k):
    return [-1] + [0] * (k - 1) + [1]


def torus_alexander(r: int, s: int):
    """Coefficients of (t^rs - 1)(t - 1) / ((t^r - 1)(t^s - 1))."""
    num = _poly_mul(_t_power_minus_one(r * s), _t_power_minus_one(1))
    den = _poly_mul(_t_power_minus_one(r), _t_power_minus_one(s))
    return _poly_divexact(num, den)


def conway_a2_from_alexander(coeffs) -> int:
    """Half the second derivative at t = 1 of the symmetrized, Delta(1) = 1 polynomial."""
    assert sum(coeffs) == 1
    deg = len(coeffs) - 1
    assert deg % 2 == 0
    shift = deg // 2
    second = sum(c * (k - shift) * (k - shift - 1) for k, c in enumerate(coeffs))
    assert second % 2 == 0
    return second // 2


# --- lens spaces from the Hopf link ----------------------------------------


def _egcd(a, b):
    if b == 0:
        return a, 1, 0
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y


def hopf_lens_lambda(fx: Fraction, fy: Fraction) -> Fraction:
    """lambda_w of surgery on the positive Hopf link with framings fx, fy.

    The exterior is T^2 x I; the two filling curves in the basis
    (mu_x, lambda_x) are (px, qx) and (qy, py).  Mapping the second to the
    unknot's longitude (0, 1) by an SL(2, Z) change of basis identifies the
    result with P/Q surgery on the unknot.
    """
    px, qx, py, qy = fx.numerator, fx.denominator, fy.numerator, fy.denominator
    g, x, y = _egcd(qy, py)
    x, y = x * g, y * g  # x qy + y py = 1
    P = px * py - qx * qy
    Q = x * px + y * qx
    if Q == 0:
        assert abs(P) == 1
        return Fraction(0)
    return lambda_knot(0, Fraction(P, Q))


# --- necessary condition from the surgery formulas, by brute force ---------


def homology_candidates_by_window(p: int, q: int, n: int, l: int):
    """(m, eps) with |m p - n q l^2| = p and gcd(m, n) = 1, by scanning m."""
    centre = Fraction(n * q * l * l, p)
    lo, hi = floor(centre) - 2, floor(centre) + 3
    out = []
    for m in range(lo, hi + 1):
        r = m * p - n * q * l * l
        if abs(r) == p and gcd(m, n) == 1:
            out.append((m, r // p))
    return out


def cw_equation_solvable(p: int, q: int, n: int, l: int, m: int) -> bool:
    """Is lambda_w(S^3_L) = lambda_w(M) solvable in integers a2x, a2y, a3?

    L = Kx u Ky with framings m/n and p/q and linking number l; M is p/q
    surgery on Ky.  The difference is affine in (a2x, a2y, a3), so the
    question is a linear Diophantine one.
    """
    fx, fy = Fraction(m, n), Fraction(p, q)

    def diff(a2x, a2y, a3):
        link = TwoComponentLinkData(a2x, a2y, a3, l, fx, fy)
        return lambda_link(link) - lambda_knot(a2y, fy)

    base = diff(0, 0, 0)
    gens = [diff(1, 0, 0) - base, diff(0, 1, 0) - base, diff(0, 0, 1) - base]
    den = reduce(lambda a, b: a * b // gcd(a, b), [x.denominator for x in gens + [base]], 1)
    B = int(base * den)
    G = reduce(gcd, [int(g * den) for g in gens], 0)
    if G == 0:
        return B == 0
    return B % G == 0
