"""Cosmetic crossing checks driven by a table of knot data.

A knot ``K`` satisfies the cosmetic crossing conjecture when

(a) its double branched cover ``Sigma(K)`` is an L-space,
(c) ``det(K) = 9 p'`` with ``p'`` square-free and prime to 3,

and either

(b) ``Sigma(K)`` is surgery on a knot in ``S^3``, or
(b') the unknotting number or the H(2)-unknotting number of ``K`` is one.

A crossing change lifts to a distance-2 surgery on a knot in ``Sigma(K)``;
``det(K)`` is odd, so the distance is prime to ``|H1|`` and the slope scan of
:mod:`cwsurgery.obstruction` applies.

Facts from the literature (L-space status, unknotting numbers, surgery
descriptions) are table data, never computed here.  Condition (b) holds only
when a surgery witness is recorded.
"""
from __future__ import annotations

import csv
import enum
import io
import re
from dataclasses import dataclass, field
from importlib import resources
from math import gcd
from pathlib import Path
from typing import Dict, Iterable, List, NamedTuple, Optional, Union

from .arithmetic import squarefree_decompose
from .casson_walker import Slope, lambda_knot, torus_knot_a2

__all__ = [
    "KnotTableError",
    "Condition",
    "CosmeticStatus",
    "SurgeryWitness",
    "KnotRecord",
    "CosmeticVerdict",
    "ConditionC",
    "COR_TEN_KNOTS",
    "load_knot_table",
    "load_bundled_table",
    "check_condition_c",
    "cosmetic_verdict",
    "reproduce_cor_ten",
]

# ten-crossing knots not settled by the square-free homology criterion
COR_TEN_KNOTS = (
    "10_65", "10_66", "10_67", "10_77", "10_87",
    "10_98", "10_108", "10_129", "10_147", "10_164",
)

COLUMNS = ("name", "det", "dbc_lspace", "u", "u_h2", "dbc_surgery", "provenance")
_TORUS_RE = re.compile(r"^T\((-?\d+),(-?\d+)\)@(-?\d+)/(-?\d+)$")


class KnotTableError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class Condition(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


class CosmeticStatus(str, enum.Enum):
    CONFIRMED_BY_SURGERY = "ConfirmedBySurgeryWitness"
    CONFIRMED_BY_UNKNOTTING = "ConfirmedByUnknottingNumber"
    OPEN = "Open"


@dataclass(frozen=True)
class SurgeryWitness:
    """``Sigma(K)`` as ``slope`` surgery on a knot with Conway coefficient ``a2``."""

    knot: str
    a2: int
    slope: Slope
    torus: Optional[tuple] = None

    @classmethod
    def torus_knot(cls, r: int, s: int, slope: Slope) -> "SurgeryWitness":
        return cls(f"T({r},{s})", torus_knot_a2(r, s), slope, (r, s))

    @classmethod
    def parse(cls, text: str) -> "SurgeryWitness":
        m = _TORUS_RE.match(text.replace(" ", ""))
        if not m:
            raise ValueError(f"surgery witness {text!r} is not of the form T(r,s)@P/Q")
        r, s, p, q = map(int, m.groups())
        if q == 0:
            raise ValueError(f"surgery witness {text!r} has slope denominator 0")
        return cls.torus_knot(r, s, Slope(p, q))

    def __str__(self):
        return f"{self.knot}@{self.slope}"


@dataclass(frozen=True)
class KnotRecord:
    name: str
    determinant: int
    dbc_is_lspace: Optional[bool] = None
    unknotting_number: Optional[int] = None
    h2_unknotting_number: Optional[int] = None
    dbc_surgery: Optional[SurgeryWitness] = None
    provenance: str = ""

    def __post_init__(self):
        if self.determinant < 1 or self.determinant % 2 == 0:
            raise ValueError(
                f"{self.name}: determinant {self.determinant} must be a positive odd integer"
            )
        for label, v in (("u", self.unknotting_number), ("u_h2", self.h2_unknotting_number)):
            if v is not None and v < 0:
                raise ValueError(f"{self.name}: {label} must be nonnegative")
        w = self.dbc_surgery
        if w is not None and abs(w.slope.p) != self.determinant:
            raise ValueError(
                f"{self.name}: witness {w} has |H1| = {abs(w.slope.p)}, "
                f"but det = {self.determinant}"
            )

    def replace(self, **changes) -> "KnotRecord":
        from dataclasses import replace
        return replace(self, **changes)


class ConditionC(NamedTuple):
    holds: bool
    p_prime: Optional[int] = None


@dataclass
class CosmeticVerdict:
    name: str
    conditions: Dict[str, Condition]
    verdict: CosmeticStatus
    reasons: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "conditions": {k: v.value for k, v in self.conditions.items()},
            "verdict": self.verdict.value,
            "reasons": list(self.reasons),
        }


def _tri(text: str, line: int) -> Optional[bool]:
    t = text.strip().lower()
    if t in ("true", "yes", "1"):
        return True
    if t in ("false", "no", "0"):
        return False
    if t in ("", "unknown", "?"):
        return None
    raise KnotTableError(f"dbc_lspace must be true/false/unknown, got {text!r}", line)


def _opt_int(text: str, label: str, line: int) -> Optional[int]:
    t = text.strip()
    if t == "" or t.lower() == "unknown":
        return None
    try:
        return int(t)
    except ValueError:
        raise KnotTableError(f"{label} must be an integer or empty, got {text!r}", line) from None


def load_knot_table(source: Union[str, Path, Iterable[str]]) -> List[KnotRecord]:
    """Read knot records from CSV.

    ``source`` is a path, an open text stream, or the CSV text itself.  The
    header must be ``name,det,dbc_lspace,u,u_h2,dbc_surgery,provenance``.
    Empty optional cells mean *unknown*.
    """
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source):
        text = Path(source).read_text()
    elif isinstance(source, str):
        text = source
    else:
        text = "".join(source)
    reader = csv.reader(io.StringIO(text))
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise KnotTableError("empty knot table") from None
    if tuple(header) != COLUMNS:
        raise KnotTableError(f"header must be {','.join(COLUMNS)}, got {','.join(header)}", 1)

    records = []
    for row in reader:
        line = reader.line_num
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != len(COLUMNS):
            raise KnotTableError(f"expected {len(COLUMNS)} fields, got {len(row)}", line)
        name, det, lspace, u, u_h2, surgery, provenance = (c.strip() for c in row)
        if not name:
            raise KnotTableError("missing knot name", line)
        try:
            det_i = int(det)
        except ValueError:
            raise KnotTableError(f"det must be an integer, got {det!r}", line) from None
        try:
            witness = SurgeryWitness.parse(surgery) if surgery else None
            rec = KnotRecord(
                name=name,
                determinant=det_i,
                dbc_is_lspace=_tri(lspace, line),
                unknotting_number=_opt_int(u, "u", line),
                h2_unknotting_number=_opt_int(u_h2, "u_h2", line),
                dbc_surgery=witness,
                provenance=provenance,
            )
        except KnotTableError:
            raise
        except ValueError as e:
            raise KnotTableError(str(e), line) from None
        records.append(rec)
    return records


def load_bundled_table() -> List[KnotRecord]:
    """The ten-crossing knots whose cosmetic crossing status the package settles or leaves open."""
    text = resources.files("cwsurgery").joinpath("data/knots10.csv").read_text()
    return load_knot_table(text)


def check_condition_c(determinant: int) -> ConditionC:
    """``det = 9 p'`` with ``p'`` square-free and prime to 3."""
    if determinant < 1:
        raise ValueError(f"determinant must be positive, got {determinant}")
    if determinant % 9:
        return ConditionC(False)
    p_prime = determinant // 9
    if p_prime % 3 == 0 or squarefree_decompose(p_prime).d != 1:
        return ConditionC(False)
    return ConditionC(True, p_prime)


def _check_witness(rec: KnotRecord, reasons: List[str]) -> Condition:
    w = rec.dbc_surgery
    if w is None:
        reasons.append("(b) no surgery description of the double branched cover recorded")
        return Condition.UNKNOWN
    p = abs(w.slope.p)
    # sanity: the invariant of the witness must be computable
    lam = lambda_knot(w.a2, w.slope)
    if gcd(2, p) != 1:
        reasons.append(f"(b) witness {w}: |H1| = {p} is even")
        return Condition.FAILS
    reasons.append(
        f"(b) double branched cover is {w.slope} surgery on {w.knot} (a2 = {w.a2}, "
        f"lambda_w = {lam.numerator}/{lam.denominator}); |H1| = {p} = det, "
        f"gcd(2, {p}) = 1"
    )
    return Condition.HOLDS


def cosmetic_verdict(record: KnotRecord) -> CosmeticVerdict:
    reasons: List[str] = []

    if record.dbc_is_lspace is None:
        a = Condition.UNKNOWN
        reasons.append("(a) L-space status of the double branched cover unknown")
    else:
        a = Condition.HOLDS if record.dbc_is_lspace else Condition.FAILS
        reasons.append(f"(a) double branched cover {'is' if record.dbc_is_lspace else 'is not'} an L-space")

    b = _check_witness(record, reasons)

    u, uh = record.unknotting_number, record.h2_unknotting_number
    if u == 1 or uh == 1:
        b_prime = Condition.HOLDS
        reasons.append("(b') " + ("unknotting number one" if u == 1 else "H(2)-unknotting number one"))
    elif u is not None and uh is not None:
        b_prime = Condition.FAILS
        reasons.append(f"(b') u = {u}, u_H(2) = {uh}")
    else:
        b_prime = Condition.UNKNOWN
        reasons.append("(b') no unknotting number one recorded")

    cc = check_condition_c(record.determinant)
    if cc.holds:
        c = Condition.HOLDS
        reasons.append(f"(c) det = {record.determinant} = 9 * {cc.p_prime}")
    else:
        c = Condition.FAILS
        reasons.append(f"(c) det = {record.determinant} is not 9 p' with p' square-free and prime to 3")

    conditions = {"a": a, "b": b, "bPrime": b_prime, "c": c}
    if a is Condition.HOLDS and c is Condition.HOLDS and b is Condition.HOLDS:
        verdict = CosmeticStatus.CONFIRMED_BY_SURGERY
    elif a is Condition.HOLDS and c is Condition.HOLDS and b_prime is Condition.HOLDS:
        verdict = CosmeticStatus.CONFIRMED_BY_UNKNOTTING
    else:
        verdict = CosmeticStatus.OPEN
    return CosmeticVerdict(record.name, conditions, verdict, reasons)


def _knot_key(name: str):
    return tuple(int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name))


def reproduce_cor_ten(table: List[KnotRecord]) -> Dict[str, List[str]]:
    """Split the ten exceptional knots into resolved and open."""
    if not table:
        raise ValueError("empty knot table")
    by_name = {r.name: r for r in table}
    missing = [k for k in COR_TEN_KNOTS if k not in by_name]
    if missing:
        raise ValueError(f"knot table is missing {', '.join(missing)}")
    resolved, still_open = [], []
    for name in sorted(COR_TEN_KNOTS, key=_knot_key):
        v = cosmetic_verdict(by_name[name])
        (still_open if v.verdict is CosmeticStatus.OPEN else resolved).append(name)
    return {"resolved": resolved, "open": still_open}
