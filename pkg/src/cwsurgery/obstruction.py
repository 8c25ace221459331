"""Arithmetic obstructions to a knot in ``M`` having a non-trivial surgery back to ``M``.

Setting: ``M`` is ``p/q`` surgery on a knot ``Ky`` in ``S^3`` (``p > 0``).  A
knot ``K`` in ``M`` gives a knot ``Kx`` in ``S^3`` with ``lk(Kx, Ky) = l``, and a
slope ``s`` on ``K`` with ``Delta(s, mu_K) = n`` becomes the framing ``m/n`` on
``Kx``.  ``M_K(s)`` is then surgery on the framed link ``Kx u Ky``.  With
``c = gcd(n, p)``, ``p = c p0`` and ``n = c n0``, the rules below are necessary
conditions for ``M_K(s) = M``:

* homology: ``m p - n q l^2 = eps p`` for some ``eps`` in ``{+1, -1}``, with
  ``gcd(m, n) = 1``;
* Casson-Walker residual (:func:`cw_residual`) must vanish;
* Dedekind congruence: ``p (S(m/n) - (m + eps)/n)`` is an integer divisible by
  ``p0``;
* key rule: with ``d0 = p0 / gcd(p0, l)`` and ``p0 = d0^2 p0'``, ``d0 != 1`` and
  ``d0 | 24`` force ``gcd(d0, p0') != 1``.

Sign of the residual
--------------------
Evaluated on genuine link data, the residual equals
``12 * eps * p * (lambda_w(S^3_L) - lambda_w(M))``; that is
``RESIDUAL_SIGN * 12 * eps * p * (lambda_w(M) - lambda_w(S^3_L))`` with
``RESIDUAL_SIGN = -1``.  The test-suite checks this on random instances.

The engine only ever reports *obstructed* when a necessary condition fails.
It never claims that a homeomorphism exists.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

from ._parallel import ordered_map
from .arithmetic import is_squarefree, squarefree_decompose
from .dedekind import dedekind_symbol

__all__ = [
    "RESIDUAL_SIGN",
    "HypothesisError",
    "Verdict",
    "Congruence",
    "KeyResult",
    "CaseStatus",
    "ManifoldClass",
    "ObstructionInstance",
    "D0Decomposition",
    "FiredRule",
    "ObstructionReport",
    "ScanReport",
    "CaseOutcome",
    "Certificate",
    "homology_solutions",
    "d0_decompose",
    "cw_residual",
    "dedekind_congruence",
    "dedekind_congruence_value",
    "key_obstruction",
    "obstruct_slope",
    "theorem_main_scan",
    "scan_many",
    "eliminate_case",
    "certify_complement",
]

RESIDUAL_SIGN = -1
TORSION_SQUARE_ROOTS = (1, 2, 3, 6)


class HypothesisError(ValueError):
    """Input lies outside the hypotheses a theorem-level routine needs."""


class Verdict(str, enum.Enum):
    OBSTRUCTED_BY_HOMOLOGY = "ObstructedByHomology"
    OBSTRUCTED_BY_KEY = "ObstructedByKey"
    OBSTRUCTED_BY_DEDEKIND_CONGRUENCE = "ObstructedByDedekindCongruence"
    OBSTRUCTED_BY_CASE_ANALYSIS = "ObstructedByCaseAnalysis"
    INCONCLUSIVE = "Inconclusive"

    @property
    def obstructed(self) -> bool:
        return self is not Verdict.INCONCLUSIVE


class Congruence(str, enum.Enum):
    PASS = "Pass"
    FAIL_NOT_INTEGRAL = "FailNotIntegral"
    FAIL_CONGRUENCE = "FailCongruence"


class KeyResult(str, enum.Enum):
    OBSTRUCTED = "Obstructed"
    INCONCLUSIVE = "Inconclusive"


class CaseStatus(str, enum.Enum):
    ELIMINATED = "Eliminated"
    NOT_APPLICABLE = "NotApplicable"
    SURVIVES = "Survives"


class ManifoldClass(str, enum.Enum):
    REDUCIBLE = "reducible"
    LENS = "lens"
    FINITE = "finite"
    SSFS = "ssfs"


# ---------------------------------------------------------------------------
# data


@dataclass(frozen=True)
class ObstructionInstance:
    p: int
    q: int
    n: int
    l: int
    m: int
    eps: int

    def __post_init__(self):
        if self.p < 1 or self.n < 1:
            raise ValueError("need p >= 1 and n >= 1")
        if self.q == 0 or gcd(self.p, self.q) != 1:
            raise ValueError(f"q = {self.q} must be nonzero and coprime to p = {self.p}")
        if self.eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        if gcd(self.m, self.n) != 1:
            raise ValueError(f"slope {self.m}/{self.n} is not reduced")
        if self.m * self.p - self.n * self.q * self.l**2 != self.eps * self.p:
            raise ValueError("m p - n q l^2 != eps p: not a homology solution")

    @property
    def c(self) -> int:
        return gcd(self.n, self.p)

    @property
    def p0(self) -> int:
        return self.p // self.c

    @property
    def n0(self) -> int:
        return self.n // self.c


@dataclass(frozen=True)
class D0Decomposition:
    d0: int
    p0_prime: int
    l_prime: int


@dataclass(frozen=True)
class FiredRule:
    rule: str
    reason: str

    def to_dict(self):
        return {"rule": self.rule, "reason": self.reason}


@dataclass
class ObstructionReport:
    p: int
    q: int
    n: int
    l: int
    verdict: Verdict
    fired_rules: List[FiredRule] = field(default_factory=list)
    candidates: List[Tuple[int, int]] = field(default_factory=list)
    surviving: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def obstructed(self) -> bool:
        return self.verdict.obstructed

    def to_dict(self) -> dict:
        return {
            "instance": {"p": self.p, "q": self.q, "n": self.n, "l": self.l},
            "verdict": self.verdict.value,
            "fired_rules": [r.to_dict() for r in self.fired_rules],
            "candidates": [{"m": m, "eps": e} for m, e in self.candidates],
            "surviving": [{"m": m, "eps": e} for m, e in self.surviving],
        }


@dataclass
class ScanReport:
    p: int
    q: int
    entries: List[Tuple[int, Verdict]]

    @property
    def all_obstructed(self) -> bool:
        return all(v.obstructed for _, v in self.entries)

    @property
    def surviving(self) -> List[int]:
        return [l for l, v in self.entries if not v.obstructed]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "all_obstructed": self.all_obstructed,
            "entries": [{"l": l, "verdict": v.value} for l, v in self.entries],
        }


@dataclass
class CaseOutcome:
    c: int
    n: int
    status: CaseStatus
    reason: str
    witness: Optional[dict] = None

    def to_dict(self) -> dict:
        d = {"c": self.c, "n": self.n, "status": self.status.value, "reason": self.reason}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class Certificate:
    p: int
    q: int
    manifold_class: ManifoldClass
    clause: str
    delta_bound: int
    delta_source: str
    cases: List[CaseOutcome]
    assumptions: List[str]

    @property
    def issued(self) -> bool:
        return all(c.status is CaseStatus.ELIMINATED for c in self.cases)

    @property
    def open_cases(self) -> List[CaseOutcome]:
        return [c for c in self.cases if c.status is not CaseStatus.ELIMINATED]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "class": self.manifold_class.value,
            "clause": self.clause,
            "delta_bound": self.delta_bound,
            "delta_source": self.delta_source,
            "issued": self.issued,
            "cases": [c.to_dict() for c in self.cases],
            "open_cases": [{"c": c.c, "n": c.n} for c in self.open_cases],
            "assumptions": list(self.assumptions),
        }


# ---------------------------------------------------------------------------
# rules


def _check_pqn(p: int, q: int, n: int) -> None:
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if q == 0 or gcd(p, q) != 1:
        raise ValueError(f"q = {q} must be nonzero and coprime to p = {p}")


def homology_solutions(p: int, q: int, n: int, l: int) -> List[Tuple[int, int]]:
    """All ``(m, eps)`` with ``m p - n q l^2 = eps p`` and ``gcd(m, n) = 1``.

    ``eps = +1`` is listed first.  An empty list means the order of the first
    homology already rules the slope out.
    """
    _check_pqn(p, q, n)
    out = []
    base = n * q * l * l
    for eps in (1, -1):
        num = base + eps * p
        if num % p == 0:
            m = num // p
            if gcd(m, n) == 1:
                out.append((m, eps))
    return out


def d0_decompose(p0: int, l: int) -> D0Decomposition:
    """``d0 = p0 / gcd(p0, l)``, then ``p0 = d0^2 p0'`` and ``l = d0 p0' l'``."""
    if p0 < 1:
        raise ValueError(f"p0 must be positive, got {p0}")
    if (l * l) % p0:
        raise ValueError(
            f"p0 = {p0} does not divide l^2 = {l * l}: inconsistent with the homology constraint"
        )
    g = gcd(p0, l)
    d0 = p0 // g
    p0_prime, r1 = divmod(p0, d0 * d0)
    l_prime, r2 = divmod(l, d0 * p0_prime)
    assert r1 == 0 and r2 == 0 and gcd(d0, l_prime) == 1
    return D0Decomposition(d0, p0_prime, l_prime)


def key_obstruction(p0: int, l: int) -> KeyResult:
    dec = d0_decompose(p0, l)
    if dec.d0 != 1 and 24 % dec.d0 == 0 and gcd(dec.d0, dec.p0_prime) == 1:
        return KeyResult.OBSTRUCTED
    return KeyResult.INCONCLUSIVE


def dedekind_congruence_value(p: int, n: int, m: int, eps: int) -> Fraction:
    """``p (S(m/n) - (m + eps)/n)``."""
    if n == 1:
        return Fraction(-p * (m + eps))
    return p * (dedekind_symbol(Fraction(m, n)) - Fraction(m + eps, n))


def dedekind_congruence(inst: ObstructionInstance) -> Congruence:
    value = dedekind_congruence_value(inst.p, inst.n, inst.m, inst.eps)
    if value.denominator != 1:
        return Congruence.FAIL_NOT_INTEGRAL
    if value.numerator % inst.p0:
        return Congruence.FAIL_CONGRUENCE
    return Congruence.PASS


def cw_residual(
    inst: ObstructionInstance, a2x: int, a2y: int, v3, sigma: int
) -> Fraction:
    """Casson-Walker residual of the instance; zero when ``S^3_L = M``.

    ``a2x``, ``a2y`` are the Conway ``a2`` of ``Kx`` and ``Ky``, ``v3`` the
    link's ``v3`` and ``sigma`` the signature of the linking matrix.

    The usual display assumes ``p/q > 0``.  For ``q < 0`` the reciprocity step
    picks up an extra ``6 eps p``, added here so the value stays equal to
    ``12 eps p (lambda_w(S^3_L) - lambda_w(M))`` for either sign of ``q``.
    """
    p, q, n, l, m, eps = inst.p, inst.q, inst.n, inst.l, inst.m, inst.eps
    l2 = l * l
    v3 = Fraction(v3)
    return (
        24 * a2x * n * p
        + 24 * a2y * q * (m - eps)
        + (3 * eps * sigma - 3 * eps - n) * p
        + (n * p + m * q) * l2
        - Fraction(inst.n0 * l2 * (q * q + 1), inst.p0)
        + 24 * n * q * 2 * v3
        + eps * dedekind_congruence_value(p, n, m, eps)
        + (6 * eps * p if q < 0 else 0)
    )


def obstruct_slope(p: int, q: int, n: int, l: int) -> ObstructionReport:
    """Run every rule on the slope data ``(p, q, n, l)``.

    Rules run cheapest first and all failures are recorded.  Only ``l^2``
    enters, so the report uses ``|l|``.
    """
    _check_pqn(p, q, n)
    l = abs(l)
    cands = homology_solutions(p, q, n, l)
    report = ObstructionReport(p, q, n, l, Verdict.INCONCLUSIVE, candidates=cands)
    if not cands:
        report.fired_rules.append(FiredRule(
            "homology",
            f"no eps in {{+1,-1}} makes m = n q l^2/p + eps = {n * q * l * l}/{p} + eps "
            f"an integer coprime to n = {n}",
        ))
        report.verdict = Verdict.OBSTRUCTED_BY_HOMOLOGY
        return report

    c = gcd(n, p)
    p0 = p // c
    dec = d0_decompose(p0, l)
    key_fires = dec.d0 != 1 and 24 % dec.d0 == 0 and gcd(dec.d0, dec.p0_prime) == 1
    if key_fires:
        report.fired_rules.append(FiredRule(
            "key",
            f"d0 = {dec.d0} divides 24 and is coprime to p0' = {dec.p0_prime}",
        ))

    cong_all = True
    for m, eps in cands:
        value = dedekind_congruence_value(p, n, m, eps)
        if value.denominator != 1:
            report.fired_rules.append(FiredRule(
                "dedekind-congruence",
                f"m = {m}, eps = {eps}: p(S(m/n) - (m+eps)/n) = {value} is not an integer",
            ))
        elif value.numerator % p0:
            report.fired_rules.append(FiredRule(
                "dedekind-congruence",
                f"m = {m}, eps = {eps}: p(S(m/n) - (m+eps)/n) = {value} is not 0 mod p0 = {p0}",
            ))
        else:
            cong_all = False
            if not key_fires:
                report.surviving.append((m, eps))

    if key_fires:
        report.verdict = Verdict.OBSTRUCTED_BY_KEY
    elif cong_all:
        report.verdict = Verdict.OBSTRUCTED_BY_DEDEKIND_CONGRUENCE
    return report


# ---------------------------------------------------------------------------
# theorem-level drivers


def _check_torsion_shape(p: int, where: str) -> Tuple[int, int]:
    d, p_prime = squarefree_decompose(p)
    if d not in TORSION_SQUARE_ROOTS:
        raise HypothesisError(
            f"{where}: p = {p} = {d}^2 * {p_prime} with d = {d} not in {{1, 2, 3, 6}}"
        )
    if d > 1 and gcd(d, p_prime) != 1:
        raise HypothesisError(
            f"{where}: p = {p} = {d}^2 * {p_prime} with gcd(d, p') = {gcd(d, p_prime)} != 1"
        )
    return d, p_prime


def theorem_main_scan(p: int, q: int) -> ScanReport:
    """Check every non-null-homologous class ``l = 1..p-1`` at distance ``n = 1``.

    Requires ``p/q > 0`` and ``p = d^2 p'`` with ``p'`` square-free,
    ``d`` in ``{1, 2, 3, 6}`` and ``gcd(d, p') = 1`` when ``d > 1``; under these
    hypotheses every entry comes back obstructed.
    """
    if p < 1 or q <= 0:
        raise HypothesisError(f"outside the scan hypotheses: need p/q > 0, got {p}/{q}")
    if gcd(p, q) != 1:
        raise ValueError(f"p = {p} and q = {q} are not coprime")
    _check_torsion_shape(p, "outside the scan hypotheses")
    entries = [(l, obstruct_slope(p, q, 1, l).verdict) for l in range(1, p)]
    return ScanReport(p, q, entries)


def _scan_pair(pq):
    return theorem_main_scan(*pq)


def scan_many(pairs: Sequence[Tuple[int, int]], workers: Optional[int] = None) -> List[ScanReport]:
    """:func:`theorem_main_scan` over many ``(p, q)``; output order matches input."""
    return ordered_map(_scan_pair, list(pairs), workers=workers)


def _representative(residue: int, modulus: int, p: int) -> int:
    """Smallest positive integer ``= residue (mod modulus)`` coprime to ``p``."""
    x = residue % modulus or modulus
    while gcd(x, p) != 1:
        x += modulus
    return x


def _residue_combos(c: int, n: int, p: int, modulus: int):
    """Representatives ``(q, l, m, eps)`` of every residue class of ``(q, l', eps)``.

    Only non-null-homologous ``l`` are produced: ``l = p0 l'`` with ``c`` not
    dividing ``l'``.  ``m`` comes from the homology identity.
    """
    p0, n0 = p // c, n // c
    for q_res in range(modulus):
        # the class must contain integers coprime to p
        if gcd(gcd(q_res, modulus), p) != 1:
            continue
        q = _representative(q_res, modulus, p)
        for lp in range(1, modulus + 1):
            if lp % c == 0:
                continue
            l = p0 * lp
            for eps in (1, -1):
                m = n0 * q * p0 * lp * lp + eps
                yield q, l, m, eps


def _mod3_survivor(p: int, n: int, q: int, l: int, m: int, eps: int) -> bool:
    """Whether the residual can vanish mod 3 for this residue representative.

    For ``3 | n`` every term carrying ``a2x``, ``a2y`` or ``a3`` is a multiple
    of 3, so the residual is congruent mod 3 to its value at zero Conway data.
    """
    if gcd(m, n) != 1:
        return False
    inst = ObstructionInstance(p, q, n, l, m, eps)
    fx, fy = Fraction(m, n), Fraction(p, q)
    det = fx * fy - l * l
    sigma = 0 if det < 0 else (2 if fx > 0 else -2)
    v3 = Fraction(l**3 - l, 24)
    r = cw_residual(inst, 0, 0, v3, sigma)
    return r.denominator == 1 and r.numerator % 3 == 0


def eliminate_case(c: int, n: int, p: int, q: int = 1) -> CaseOutcome:
    """Try to rule out every slope at distance ``n`` with ``c = gcd(n, p)``.

    * ``c = 1``: every class ``l = 1..p-1`` must fall to the homology or key
      rule (for square-free ``p`` the homology rule does it).
    * ``(2, 2)``, ``(2, 6)``: parity; ``m`` is forced even, so ``m/n`` is not
      reduced.
    * ``(3, 3)``, ``(3, 6)``: the residual mod 3, using ``3 S(m/3) = +-2``,
      has no solution.

    The last two branches need square-free ``p`` and are checked over a full
    residue system of ``(q mod 6, l' mod 6, eps)``.  Other ``(c, n)`` are
    reported ``NotApplicable``.
    """
    if p < 1 or n < 1 or c != gcd(n, p):
        raise ValueError(f"inconsistent case: c = {c} but gcd(n, p) = gcd({n}, {p}) = {gcd(n, p)}")

    if c == 1:
        if q == 0 or gcd(p, q) != 1:
            raise ValueError(f"q = {q} must be nonzero and coprime to p = {p}")
        rules = set()
        for l in range(1, p):
            v = obstruct_slope(p, q, n, l).verdict
            if v not in (Verdict.OBSTRUCTED_BY_HOMOLOGY, Verdict.OBSTRUCTED_BY_KEY):
                return CaseOutcome(c, n, CaseStatus.SURVIVES,
                                   f"l = {l} is not ruled out by the homology or key rule",
                                   {"q": q, "l": l})
            rules.add("homology" if v is Verdict.OBSTRUCTED_BY_HOMOLOGY else "key")
        return CaseOutcome(c, n, CaseStatus.ELIMINATED, "/".join(sorted(rules)) or "homology")

    if (c, n) not in {(2, 2), (2, 6), (3, 3), (3, 6)}:
        return CaseOutcome(c, n, CaseStatus.NOT_APPLICABLE,
                           f"no elimination argument for (c, n) = ({c}, {n})")
    if not is_squarefree(p):
        return CaseOutcome(c, n, CaseStatus.NOT_APPLICABLE,
                           f"argument for (c, n) = ({c}, {n}) needs square-free p, got {p}")

    combos = list(_residue_combos(c, n, p, 6))
    if c == 2:
        for q_, l, m, eps in combos:
            if gcd(m, n) == 1:
                return CaseOutcome(c, n, CaseStatus.SURVIVES, "parity argument fails",
                                   {"q": q_, "l": l, "m": m, "eps": eps})
        return CaseOutcome(c, n, CaseStatus.ELIMINATED, "parity")

    for q_, l, m, eps in combos:
        if _mod3_survivor(p, n, q_, l, m, eps):
            return CaseOutcome(c, n, CaseStatus.SURVIVES, "mod-3 residual can vanish",
                               {"q": q_, "l": l, "m": m, "eps": eps})
    return CaseOutcome(c, n, CaseStatus.ELIMINATED, "mod-3 Dedekind")


_DELTA_BOUNDS = {
    ManifoldClass.REDUCIBLE: (1, "reducible surgery has distance 1 from the meridian"),
    ManifoldClass.LENS: (1, "cyclic surgery theorem"),
    ManifoldClass.FINITE: (3, "finite filling theorem: distance at most 3"),
    ManifoldClass.SSFS: (8, "small Seifert fibered filling: distance at most 8"),
}

_CLAUSES = {
    ManifoldClass.REDUCIBLE: "i",
    ManifoldClass.LENS: "ii",
    ManifoldClass.FINITE: "iii",
    ManifoldClass.SSFS: "iv",
}


def _validate_clause(p: int, cls: ManifoldClass) -> None:
    clause = f"clause ({_CLAUSES[cls]})"
    if cls in (ManifoldClass.REDUCIBLE, ManifoldClass.LENS):
        _check_torsion_shape(p, f"{clause} hypotheses violated")
        return
    problems = []
    if not is_squarefree(p):
        problems.append(f"|H1| = {p} is not square-free")
    if cls is ManifoldClass.SSFS:
        if gcd(p, 35) != 1:
            problems.append(f"|H1| = {p} is divisible by 5 or 7")
        if p % 6 == 0:
            problems.append(f"6 divides |H1| = {p}")
    if problems:
        raise HypothesisError(f"{clause} hypotheses violated: " + "; ".join(problems))


def certify_complement(p: int, q: int, manifold_class) -> Certificate:
    """Certificate that every knot in ``M`` is determined by its complement.

    ``M`` is ``p/q`` surgery on a knot in ``S^3`` of the given class.  Inputs
    from outside this package are taken on trust and listed in
    ``Certificate.assumptions``: the distance bound for the class, that
    null-homologous knots in an L-space are determined by their complements,
    and that non-hyperbolic knots in small Seifert fibered spaces are too.
    The certificate is issued only if every ``(c, n)`` case is eliminated.
    """
    cls = ManifoldClass(manifold_class)
    if p < 1 or q == 0 or gcd(p, q) != 1:
        raise HypothesisError(f"need p >= 1 and q coprime to p, got {p}/{q}")
    _validate_clause(p, cls)
    bound, source = _DELTA_BOUNDS[cls]
    assumptions = [
        f"distance bound n <= {bound}: {source}",
        "null-homologous knots in an L-space are determined by their complements",
    ]
    if cls is not ManifoldClass.REDUCIBLE:
        assumptions.append(
            "non-hyperbolic knots in small Seifert fibered spaces are determined by their complements"
        )

    if bound == 1:
        scan = theorem_main_scan(p, q)
        if scan.all_obstructed:
            kinds = sorted({v.value for _, v in scan.entries})
            case = CaseOutcome(1, 1, CaseStatus.ELIMINATED,
                               "slope scan: " + ("/".join(kinds) or "no non-null-homologous class"))
        else:
            case = CaseOutcome(1, 1, CaseStatus.SURVIVES, "slope scan left classes open",
                               {"l": scan.surviving})
        cases = [case]
    else:
        cases = [eliminate_case(gcd(n, p), n, p, q) for n in range(1, bound + 1)]
    return Certificate(p, q, cls, _CLAUSES[cls], bound, source, cases, assumptions)
