"""Command-line front end.

Every command prints a JSON report (or a plain-text rendering of the same
data with ``--output text``).  Exit codes are shared by all subcommands:

0  computed / obstructed / certificate issued
1  inconclusive / open / certificate refused
2  bad input or theorem hypotheses not met
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Any, Dict, List, Optional

from . import cosmetic, obstruction
from .arithmetic import format_rational
from .casson_walker import TwoComponentLinkData, as_slope, lambda_knot, lambda_link_breakdown
from .dedekind import dedekind_sum, dedekind_sum_naive, dedekind_symbol

__all__ = ["UsageError", "CommandRequest", "RunReport", "parse_request", "run", "main"]

EXIT_OK, EXIT_OPEN, EXIT_ERROR = 0, 1, 2
SUBCOMMANDS = ("dedekind", "lambda", "obstruct", "certify", "cosmetic")


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class CommandRequest:
    subcommand: str
    action: Optional[str]
    parameters: Dict[str, Any]
    output_format: str = "json"
    approx: bool = False

    def echo(self) -> dict:
        params = {}
        for k, v in self.parameters.items():
            params[k] = str(v) if not isinstance(v, (int, bool, type(None))) else v
        cmd = self.subcommand if self.action is None else f"{self.subcommand} {self.action}"
        return {"command": cmd, "parameters": params}


@dataclass
class RunReport:
    request: dict
    result: Any
    exit_code: int
    timing_ms: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict:
        # timing stays out so identical requests give identical bytes
        return {"request": self.request, "result": self.result, "exit_code": self.exit_code}


def _slope_arg(text: str):
    try:
        return as_slope(text)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(str(e))


def _coprime_slope_arg(text: str):
    num, sep, den = text.strip().partition("/")
    try:
        p, q = int(num), int(den) if sep else 1
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed slope {text!r}")
    if q == 0:
        raise argparse.ArgumentTypeError(f"slope {text!r} has q = 0")
    if gcd(p, q) != 1:
        raise argparse.ArgumentTypeError(f"slope {text!r} is not reduced")
    return as_slope(text)


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--output", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument("--approx", action="store_true", default=argparse.SUPPRESS,
                        help="append decimal approximations, marked as such")

    top = _Parser(prog="cwsurgery", parents=[common],
                  description="Casson-Walker surgery invariants and obstructions")
    sub = top.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    ded = sub.add_parser("dedekind", help="Dedekind sums and symbols")
    dsub = ded.add_subparsers(dest="action", required=True, parser_class=_Parser)
    s = dsub.add_parser("sum", parents=[common])
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--naive", action="store_true", help="direct summation instead of reciprocity")
    s = dsub.add_parser("symbol", parents=[common])
    s.add_argument("--slope", type=_coprime_slope_arg, required=True)

    lam = sub.add_parser("lambda", help="Casson-Walker invariant of a surgery")
    lsub = lam.add_subparsers(dest="action", required=True, parser_class=_Parser)
    s = lsub.add_parser("knot", parents=[common])
    s.add_argument("--a2", type=int, required=True)
    s.add_argument("--slope", type=_slope_arg, required=True)
    s = lsub.add_parser("link", parents=[common])
    s.add_argument("--input", type=Path, required=True, help="JSON with a2x, a2y, a3, lk, fx, fy")
    s.add_argument("--breakdown", action="store_true")

    obs = sub.add_parser("obstruct", help="obstructions for a slope or a full scan")
    osub = obs.add_subparsers(dest="action", required=True, parser_class=_Parser)
    s = osub.add_parser("slope", parents=[common])
    for name in ("p", "q", "n", "l"):
        s.add_argument(f"--{name}", type=int, required=True)
    s = osub.add_parser("scan", parents=[common])
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--q", type=int, required=True)

    s = sub.add_parser("certify", parents=[common], help="knot complement certificate")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--class", dest="manifold_class", required=True,
                   choices=[c.value for c in obstruction.ManifoldClass])

    s = sub.add_parser("cosmetic", parents=[common], help="cosmetic crossing verdicts")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--table", type=Path)
    g.add_argument("--reproduce-cor-ten", action="store_true")
    s.add_argument("--name")
    return top


def parse_request(argv: List[str]) -> CommandRequest:
    ns = vars(_build_parser().parse_args(argv))
    sub = ns.pop("subcommand")
    action = ns.pop("action", None)
    fmt = ns.pop("output", "json")
    approx = ns.pop("approx", False)
    if sub == "dedekind" and action == "sum":
        if ns["q"] == 0:
            raise UsageError("dedekind sum: q must be nonzero")
        if gcd(ns["p"], ns["q"]) != 1:
            raise UsageError(f"dedekind sum: p = {ns['p']} and q = {ns['q']} are not coprime")
    if sub in ("obstruct", "certify"):
        if ns["q"] == 0:
            raise UsageError(f"{sub}: q must be nonzero")
        if ns["p"] < 1:
            raise UsageError(f"{sub}: p must be positive")
        if gcd(ns["p"], ns["q"]) != 1:
            raise UsageError(f"{sub}: p = {ns['p']} and q = {ns['q']} are not coprime")
        if action == "slope" and ns["n"] < 1:
            raise UsageError("obstruct slope: n must be positive")
    if sub == "cosmetic" and ns.get("name") and ns.get("reproduce_cor_ten"):
        raise UsageError("cosmetic: --name only applies with --table")
    return CommandRequest(sub, action, ns, fmt, approx)


def _approx(x: Fraction, digits: int = 20) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def _rational_payload(key: str, x: Fraction, approx: bool) -> dict:
    out = {key: format_rational(x)}
    if approx:
        out[f"{key}_approx"] = f"~{_approx(x)}"
    return out


def _dispatch(req: CommandRequest):
    p = req.parameters
    if req.subcommand == "dedekind":
        if req.action == "sum":
            fn = dedekind_sum_naive if p["naive"] else dedekind_sum
            value = fn(p["p"], p["q"])
            res = {"p": p["p"], "q": p["q"], "method": "naive" if p["naive"] else "reciprocity"}
            res.update(_rational_payload("value", value, req.approx))
            return res, EXIT_OK
        value = dedekind_symbol(p["slope"].value)
        res = {"slope": str(p["slope"])}
        res.update(_rational_payload("value", value, req.approx))
        return res, EXIT_OK

    if req.subcommand == "lambda":
        if req.action == "knot":
            value = lambda_knot(p["a2"], p["slope"])
            res = {"a2": p["a2"], "slope": str(p["slope"])}
            res.update(_rational_payload("lambda_w", value, req.approx))
            return res, EXIT_OK
        try:
            data = json.loads(Path(p["input"]).read_text())
        except (OSError, json.JSONDecodeError) as e:
            raise UsageError(f"cannot read link data: {e}") from None
        link = TwoComponentLinkData.from_dict(data)
        bd = lambda_link_breakdown(link)
        res = {"link": link.to_dict()}
        res.update(_rational_payload("lambda_w", bd.value, req.approx))
        if p["breakdown"]:
            res["breakdown"] = bd.to_dict()
        return res, EXIT_OK

    if req.subcommand == "obstruct":
        if req.action == "slope":
            rep = obstruction.obstruct_slope(p["p"], p["q"], p["n"], p["l"])
            return rep.to_dict(), EXIT_OK if rep.obstructed else EXIT_OPEN
        scan = obstruction.theorem_main_scan(p["p"], p["q"])
        return scan.to_dict(), EXIT_OK if scan.all_obstructed else EXIT_OPEN

    if req.subcommand == "certify":
        cert = obstruction.certify_complement(p["p"], p["q"], p["manifold_class"])
        return cert.to_dict(), EXIT_OK if cert.issued else EXIT_OPEN

    if req.subcommand == "cosmetic":
        if p["reproduce_cor_ten"]:
            return cosmetic.reproduce_cor_ten(cosmetic.load_bundled_table()), EXIT_OK
        table = cosmetic.load_knot_table(Path(p["table"]))
        if p.get("name"):
            table = [r for r in table if r.name == p["name"]]
            if not table:
                raise UsageError(f"knot {p['name']!r} not in table")
        verdicts = [cosmetic.cosmetic_verdict(r) for r in table]
        code = EXIT_OK if all(v.verdict is not cosmetic.CosmeticStatus.OPEN for v in verdicts) else EXIT_OPEN
        return [v.to_dict() for v in verdicts], code

    raise UsageError(f"unknown subcommand {req.subcommand!r}")


def run(request: CommandRequest) -> RunReport:
    t0 = time.perf_counter()
    try:
        result, code = _dispatch(request)
    except (ValueError, ZeroDivisionError) as e:
        result = {"error": {"type": type(e).__name__, "message": str(e)}}
        code = EXIT_ERROR
    ms = (time.perf_counter() - t0) * 1000.0
    return RunReport(request.echo(), result, code, ms)


def _render_text(report: RunReport) -> str:
    lines = [f"command: {report.request['command']}"]
    res = report.result
    if isinstance(res, dict):
        for k, v in res.items():
            lines.append(f"{k}: {v if isinstance(v, (str, int)) else json.dumps(v)}")
    else:
        for item in res:
            lines.append(json.dumps(item))
    lines.append(f"exit_code: {report.exit_code}")
    return "\n".join(lines)


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        req = parse_request(argv)
    except UsageError as e:
        print(json.dumps({"error": {"type": "UsageError", "message": str(e)}, "exit_code": EXIT_ERROR},
                         indent=2))
        return EXIT_ERROR
    report = run(req)
    if req.output_format == "text":
        print(_render_text(report))
    else:
        print(json.dumps(report.to_dict(), indent=2))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
