"""Casson-Walker invariant of rational surgeries on knots and 2-component links.

Normalization is Walker's: ``lambda_w(Poincare sphere as +1 surgery on the
right-handed trefoil) = 2`` and ``lambda_w(L(p, q)) = -s(q, p)``.

For a knot ``K`` with Conway coefficient ``a2``,

    lambda_w(S^3_{p/q}(K)) / 2 = a2 q/p - S(q/p)/24.

For a rationally framed link ``L = Kx u Ky`` with framings ``fx = px/qx`` and
``fy = py/qy``, linking number ``l`` and linking matrix
``A = [[fx, l], [l, fy]]`` (``D = det A``, ``sigma`` its signature),

    D (lambda_w/2 - sigma/8) =
          a2(Kx) fy - fy/24 - fy/(24 qx^2) + fy l^2/24
        + a2(Ky) fx - fx/24 - fx/(24 qy^2) + fx l^2/24
        + 2 v3(L)
        + D/24 (S(fx) - fx + S(fy) - fy),

    v3(L) = (-a3(L) + (a2(Kx) + a2(Ky)) l + (l^3 - l)/12) / 2.

For integral framings this reduces to the Matveev-Polyak formula.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, Union

from .arithmetic import DegenerateFraction, RationalLike, parse_rational, sign
from .dedekind import dedekind_symbol

__all__ = [
    "NotRationalHomologySphere",
    "Slope",
    "FramedKnotSurgery",
    "TwoComponentLinkData",
    "LinkingForm",
    "LinkBreakdown",
    "as_slope",
    "linking_form",
    "v3",
    "lambda_knot",
    "lambda_link",
    "lambda_link_breakdown",
    "torus_knot_a2",
]


class NotRationalHomologySphere(ValueError):
    """The surgery has infinite first homology."""


@dataclass(frozen=True)
class Slope:
    """A surgery coefficient ``p/q``, stored reduced with ``q >= 1``."""

    p: int
    q: int = 1

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if q == 0:
            raise DegenerateFraction(f"degenerate slope {p}/0")
        g = gcd(p, q)
        if q < 0:
            g = -g
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        num, sep, den = text.strip().partition("/")
        try:
            return cls(int(num), int(den) if sep else 1)
        except ValueError:
            raise ValueError(f"malformed slope {text!r}") from None

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self):
        return f"{self.p}/{self.q}"


SlopeLike = Union[Slope, Fraction, int, str]


def as_slope(s: SlopeLike) -> Slope:
    if isinstance(s, Slope):
        return s
    if isinstance(s, str):
        return Slope.parse(s)
    x = parse_rational(s)
    return Slope(x.numerator, x.denominator)


@dataclass(frozen=True)
class FramedKnotSurgery:
    a2: int
    slope: Slope

    def __post_init__(self):
        object.__setattr__(self, "slope", as_slope(self.slope))
        if self.slope.p == 0:
            raise NotRationalHomologySphere("0-surgery is not a rational homology sphere")


@dataclass(frozen=True)
class TwoComponentLinkData:
    """Conway-coefficient data of a framed 2-component link.

    ``a3`` is the ``z^3`` coefficient of the link's Conway polynomial and ``lk``
    the linking number (the ``z`` coefficient).  Unlink: ``lk = a3 = 0``;
    Hopf link: ``lk = 1, a3 = 0``.
    """

    a2x: int
    a2y: int
    a3: Fraction
    lk: int
    fx: Slope
    fy: Slope

    def __post_init__(self):
        object.__setattr__(self, "a3", parse_rational(self.a3))
        object.__setattr__(self, "fx", as_slope(self.fx))
        object.__setattr__(self, "fy", as_slope(self.fy))

    @classmethod
    def from_dict(cls, data: dict) -> "TwoComponentLinkData":
        missing = {"a2x", "a2y", "a3", "lk", "fx", "fy"} - set(data)
        if missing:
            raise ValueError(f"link data missing fields: {sorted(missing)}")
        return cls(
            a2x=int(data["a2x"]),
            a2y=int(data["a2y"]),
            a3=parse_rational(data["a3"]),
            lk=int(data["lk"]),
            fx=as_slope(str(data["fx"])),
            fy=as_slope(str(data["fy"])),
        )

    def to_dict(self) -> dict:
        return {
            "a2x": self.a2x,
            "a2y": self.a2y,
            "a3": f"{self.a3.numerator}/{self.a3.denominator}",
            "lk": self.lk,
            "fx": str(self.fx),
            "fy": str(self.fy),
        }


@dataclass(frozen=True)
class LinkingForm:
    det: Fraction
    signature: int


def linking_form(link: TwoComponentLinkData) -> LinkingForm:
    """Determinant and signature of ``[[fx, lk], [lk, fy]]``, exactly.

    A 2x2 symmetric form is indefinite iff its determinant is negative;
    otherwise it is definite with the sign of its diagonal.
    """
    fx, fy = link.fx.value, link.fy.value
    det = fx * fy - link.lk * link.lk
    if det == 0:
        raise NotRationalHomologySphere(
            "linking matrix is degenerate: not a rational homology sphere"
        )
    sig = 0 if det < 0 else 2 * sign(fx)
    return LinkingForm(det, sig)


def v3(link: TwoComponentLinkData) -> Fraction:
    l = link.lk
    return Fraction(1, 2) * (
        -link.a3 + (link.a2x + link.a2y) * l + Fraction(l**3 - l, 12)
    )


def lambda_knot(a2: int, slope: SlopeLike) -> Fraction:
    """Casson-Walker invariant of ``p/q`` surgery on a knot with Conway ``a2``."""
    s = as_slope(slope)
    if s.p == 0:
        raise NotRationalHomologySphere("0-surgery is not a rational homology sphere")
    inv = Fraction(s.q, s.p)
    return 2 * (a2 * inv - dedekind_symbol(inv) / 24)


@dataclass
class LinkBreakdown:
    """Each summand of the right-hand side, plus the solved invariant."""

    terms: Dict[str, Fraction] = field(default_factory=dict)
    det: Fraction = Fraction(0)
    signature: int = 0
    rhs: Fraction = Fraction(0)
    value: Fraction = Fraction(0)

    def to_dict(self) -> dict:
        fmt = lambda x: f"{x.numerator}/{x.denominator}"  # noqa: E731
        return {
            "terms": {k: fmt(v) for k, v in self.terms.items()},
            "det": fmt(self.det),
            "signature": self.signature,
            "rhs": fmt(self.rhs),
            "lambda_w": fmt(self.value),
        }


def lambda_link_breakdown(link: TwoComponentLinkData) -> LinkBreakdown:
    form = linking_form(link)
    D = form.det
    fx, fy = link.fx.value, link.fy.value
    qx, qy = link.fx.q, link.fy.q
    l2 = link.lk * link.lk
    terms = {
        "a2x*fy": link.a2x * fy,
        "-fy/24": -fy / 24,
        "-fy/(24qx^2)": -fy / (24 * qx * qx),
        "fy*l^2/24": fy * l2 / 24,
        "a2y*fx": link.a2y * fx,
        "-fx/24": -fx / 24,
        "-fx/(24qy^2)": -fx / (24 * qy * qy),
        "fx*l^2/24": fx * l2 / 24,
        "2v3": 2 * v3(link),
        "D/24*(S(fx)-fx)": D / 24 * (dedekind_symbol(fx) - fx),
        "D/24*(S(fy)-fy)": D / 24 * (dedekind_symbol(fy) - fy),
    }
    rhs = sum(terms.values(), Fraction(0))
    value = 2 * (rhs / D + Fraction(form.signature, 8))
    return LinkBreakdown(terms, D, form.signature, rhs, value)


def lambda_link(link: TwoComponentLinkData) -> Fraction:
    """Casson-Walker invariant of surgery on a framed 2-component link."""
    return lambda_link_breakdown(link).value


def torus_knot_a2(r: int, s: int) -> int:
    """Conway ``a2`` of the ``(r, s)`` torus knot, ``(r^2-1)(s^2-1)/24``."""
    if gcd(r, s) != 1:
        raise ValueError(f"T({r},{s}) is not a knot: gcd(r, s) != 1")
    if abs(r) < 2 or abs(s) < 2:
        return 0
    a2, rem = divmod((r * r - 1) * (s * s - 1), 24)
    assert rem == 0
    return a2
