"""Command-line entry point: ``umbral poly|sums|verify``.

Exit codes: 0 success, 1 an identity expected to hold did not, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from umbral import __version__
from umbral.errors import UmbralError
from umbral.identities import (
    EQUAL,
    IDENTITY_IDS,
    MISMATCH,
    IdentityInstance,
    SweepConfig,
    VerificationReport,
    run_sweep,
    summarize,
)
from umbral.numeric import format_rational
from umbral.power_sums import ALGORITHMS, Family, power_sum_row
from umbral.sequences import Kind, SequenceFamily, scaled_family_polynomial
from umbral.series import Polynomial

SCHEMA_VERSION = "1.0"
JOBS_ENV = "UMBRAL_JOBS"

SELECTIONS = {
    "all": IDENTITY_IDS,
    "lemma1": ("Lemma1.B", "Lemma1.Bhat", "Lemma1.E", "Lemma1.H"),
    "lemma1-b": ("Lemma1.B",),
    "lemma1-bhat": ("Lemma1.Bhat",),
    "lemma1-e": ("Lemma1.E",),
    "lemma1-h": ("Lemma1.H",),
    "thm3": ("Thm3",),
    "thm4": ("Thm4.printed", "Thm4.corrected"),
    "thm4-printed": ("Thm4.printed",),
    "thm4-corrected": ("Thm4.corrected",),
    "thm5": ("Thm5",),
    "thm6": ("Thm6",),
    "eq16": ("Eq16",),
    "eq17": ("Eq17",),
}

# Shown for reference; a mismatch here fails the run only under --expect equal.
DEMONSTRATION_IDS = frozenset({"Thm4.printed"})

# options whose value may be a negative rational such as -2/3
_RATIONAL_OPTIONS = ("--lambda", "--order", "--alpha")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def _rational_list(text: str) -> tuple[Fraction, ...]:
    return tuple(_rational(part) for part in text.split(",") if part.strip())


def _k_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"k-range must look like a..b, got {text!r}")
    if a < 0 or b < a:
        raise argparse.ArgumentTypeError(f"k-range needs 0 <= a <= b, got {text!r}")
    return a, b


def _selection(text: str) -> tuple[str, ...]:
    chosen: list[str] = []
    for part in text.split(","):
        key = part.strip().lower()
        if key not in SELECTIONS:
            raise argparse.ArgumentTypeError(
                f"unknown identity {part!r}; choose from {', '.join(SELECTIONS)}"
            )
        chosen.extend(i for i in SELECTIONS[key] if i not in chosen)
    return tuple(chosen)


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--lambda -2/3`` into ``--lambda=-2/3`` so argparse keeps the value."""
    out: list[str] = []
    it = iter(range(len(argv)))
    for i in it:
        tok = argv[i]
        if tok in _RATIONAL_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            next(it, None)
        else:
            out.append(tok)
    return out


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        jobs = int(raw)
    except ValueError:
        raise UsageError(f"{JOBS_ENV} must be a positive integer, got {raw!r}")
    if jobs < 1:
        raise UsageError(f"{JOBS_ENV} must be a positive integer, got {raw!r}")
    return jobs


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="umbral", description="Exact higher-order Bernoulli/Euler/Frobenius-Euler toolkit.")
    parser.add_argument("--version", action="version", version=f"umbral {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fmt = dict(choices=("text", "csv", "json"), default="text", help="output format")

    p = sub.add_parser("poly", help="print one polynomial")
    p.add_argument("kind", choices=[k.value for k in Kind])
    p.add_argument("--order", type=_rational, default=Fraction(1), help="order alpha (rational)")
    p.add_argument("--n", type=int, required=True, help="index n >= 0")
    p.add_argument("--lambda", dest="lam", type=_rational, help="lambda for frobenius-euler")
    p.add_argument("--m-scale", "--scale", dest="scale", type=int, default=1, help="print m^n P_n(x/m)")
    p.add_argument("--hat", action="store_true", help="bernoulli only: divide the scaled polynomial by m^alpha")
    p.add_argument("--pretty", action="store_true", help="also print the polynomial in x notation")
    p.add_argument("--format", **fmt)

    s = sub.add_parser("sums", help="tabulate multiple power sums over k")
    s.add_argument("family", choices=[f.value for f in Family])
    s.add_argument("--k", dest="krange", type=_k_range, required=True, help="inclusive range a..b")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--lambda", dest="lam", type=_rational)
    s.add_argument("--algorithm", choices=ALGORITHMS, default="series")
    s.add_argument("--format", **fmt)

    v = sub.add_parser("verify", help="run an identity sweep")
    v.add_argument("selection", type=_selection, help=f"comma list of: {', '.join(SELECTIONS)}")
    v.add_argument("--n-max", type=int, default=4)
    v.add_argument("--m-max", type=int, default=3)
    v.add_argument("--n-min", type=int, default=1)
    v.add_argument("--m-min", type=int, default=1)
    v.add_argument("--lambda", dest="lams", type=_rational_list, default=SweepConfig.lambdas,
                   help="comma list of rationals (Lemma1.H and Thm6)")
    v.add_argument("--alpha", dest="alphas", type=_rational_list, default=SweepConfig.alphas,
                   help="comma list of orders for Lemma 1")
    v.add_argument("--trunc", type=int, default=None, help="truncation order override (default 2n+2)")
    v.add_argument("--algorithm", choices=ALGORITHMS, default="series")
    v.add_argument("--jobs", type=int, default=None, help=f"worker processes (default ${JOBS_ENV} or 1)")
    v.add_argument("--expect", choices=("default", "equal"), default="default",
                   help="'equal' also requires the printed Theorem 4 to hold")
    v.add_argument("--format", **fmt)
    return parser


# -- serialization ---------------------------------------------------------


def _q(x: Optional[Fraction]) -> Optional[str]:
    return None if x is None else format_rational(x)


def _unq(x: Optional[str]) -> Optional[Fraction]:
    return None if x is None else Fraction(x)


def report_to_dict(report: VerificationReport, expected: str) -> dict[str, Any]:
    inst = report.instance
    return {
        "identity": inst.identity_id,
        "n": inst.n,
        "m": inst.m,
        "alpha": _q(inst.alpha),
        "lambda": _q(inst.lam),
        "trunc": inst.trunc,
        "verdict": report.verdict,
        "expected": expected,
        "first_mismatch": report.first_mismatch,
        "failing_pair": None if report.failing_pair is None else list(report.failing_pair),
        "lhs": [format_rational(c) for c in report.lhs],
        "rhs": [format_rational(c) for c in report.rhs],
        "note": report.note,
    }


def report_from_dict(d: dict[str, Any]) -> VerificationReport:
    inst = IdentityInstance(d["identity"], d["n"], d["m"], _unq(d["lambda"]), _unq(d["alpha"]), d["trunc"])
    return VerificationReport(
        inst,
        tuple(Fraction(c) for c in d["lhs"]),
        tuple(Fraction(c) for c in d["rhs"]),
        d["verdict"],
        first_mismatch=d["first_mismatch"],
        failing_pair=None if d["failing_pair"] is None else tuple(d["failing_pair"]),
        note=d["note"],
    )


def dump_record(command: str, parameters: dict[str, Any], results: list, **extra: Any) -> str:
    record = {"version": SCHEMA_VERSION, "command": command, "parameters": parameters, "results": results}
    record.update(extra)
    return json.dumps(record, indent=2) + "\n"


def _csv(rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


# -- commands --------------------------------------------------------------


def cmd_poly(args: argparse.Namespace) -> tuple[str, int]:
    kind = Kind(args.kind)
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    if kind is Kind.FROBENIUS_EULER and args.lam is None:
        raise UsageError("frobenius-euler needs --lambda")
    if kind is not Kind.FROBENIUS_EULER and args.lam is not None:
        raise UsageError(f"--lambda does not apply to {kind.value}")
    family = SequenceFamily(kind, args.order, args.lam, args.scale, args.hat)
    poly = scaled_family_polynomial(family, args.n)
    params = {
        "kind": kind.value,
        "order": _q(family.order),
        "n": args.n,
        "lambda": _q(family.lam),
        "scale": family.scale,
        "hat": family.hat,
    }
    if args.format == "json":
        return dump_record("poly", params, [{"coefficients": poly.to_list(), "pretty": poly.pretty()}]), 0
    if args.format == "csv":
        return _csv([["degree", "coefficient"]] + [[i, c] for i, c in enumerate(poly.to_list())]), 0
    out = str(poly) + "\n"
    if args.pretty:
        out += poly.pretty() + "\n"
    return out, 0


def cmd_sums(args: argparse.Namespace) -> tuple[str, int]:
    family = Family(args.family)
    if family is Family.LAMBDA and args.lam is None:
        raise UsageError("the lambda family needs --lambda")
    if family is not Family.LAMBDA and args.lam is not None:
        raise UsageError(f"--lambda does not apply to {family.value}")
    if args.n < 1 or args.m < 1:
        raise UsageError("--n and --m must be >= 1")
    lo, hi = args.krange
    row = power_sum_row(family, hi, args.n, args.m, args.lam, args.algorithm)[lo:]
    ks = range(lo, hi + 1)
    params = {
        "family": family.value,
        "k": [lo, hi],
        "n": args.n,
        "m": args.m,
        "lambda": _q(args.lam),
        "algorithm": args.algorithm,
    }
    if args.format == "json":
        return dump_record("sums", params, [{"k": k, "value": format_rational(v)} for k, v in zip(ks, row)]), 0
    if args.format == "csv":
        return _csv([["k", "value"]] + [[k, format_rational(v)] for k, v in zip(ks, row)]), 0
    width = max(len(str(hi)), 1)
    lines = [f"{'k':>{width}}  value"] + [f"{k:>{width}}  {format_rational(v)}" for k, v in zip(ks, row)]
    return "\n".join(lines) + "\n", 0


def _expected(identity_id: str, expect: str) -> str:
    if expect == "equal" or identity_id not in DEMONSTRATION_IDS:
        return EQUAL
    return "any"


def _describe(r: VerificationReport) -> str:
    inst = r.instance
    parts = [inst.identity_id, f"n={inst.n}", f"m={inst.m}"]
    if inst.alpha is not None:
        parts.append(f"alpha={format_rational(inst.alpha)}")
    if inst.lam is not None:
        parts.append(f"lambda={format_rational(inst.lam)}")
    parts.append(r.verdict)
    if r.verdict == MISMATCH:
        if r.failing_pair is not None:
            parts.append(f"first_failure=(n={r.failing_pair[0]}, k={r.failing_pair[1]})")
        else:
            lhs, rhs = Polynomial(r.lhs), Polynomial(r.rhs)
            parts.append(f"first_mismatch_degree={r.first_mismatch} lhs={lhs} rhs={rhs}")
    if r.note:
        parts.append(f"({r.note})")
    return " ".join(parts)


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    if jobs < 1:
        raise UsageError("--jobs must be >= 1")
    if args.n_min < 1 or args.m_min < 1:
        raise UsageError("--n-min and --m-min must be >= 1")
    config = SweepConfig(
        identities=args.selection,
        n_max=args.n_max,
        m_max=args.m_max,
        n_min=args.n_min,
        m_min=args.m_min,
        lambdas=args.lams,
        alphas=args.alphas,
        trunc=args.trunc,
        algorithm=args.algorithm,
        jobs=jobs,
    )
    reports = run_sweep(config)
    expectations = [_expected(r.instance.identity_id, args.expect) for r in reports]
    failed = any(r.verdict == MISMATCH and e == EQUAL for r, e in zip(reports, expectations))
    counts = summarize(reports)
    code = 1 if failed else 0

    # jobs is deliberately absent: payloads must not depend on it
    params = {
        "identities": list(config.identities),
        "n_min": config.n_min,
        "n_max": config.n_max,
        "m_min": config.m_min,
        "m_max": config.m_max,
        "lambdas": [format_rational(x) for x in config.lambdas],
        "alphas": [format_rational(x) for x in config.alphas],
        "trunc": config.trunc,
        "algorithm": config.algorithm,
        "expect": args.expect,
    }
    if args.format == "json":
        results = [report_to_dict(r, e) for r, e in zip(reports, expectations)]
        return dump_record("verify", params, results, summary=counts), code
    if args.format == "csv":
        rows = [["identity", "n", "m", "alpha", "lambda", "trunc", "verdict", "expected",
                 "first_mismatch", "lhs", "rhs", "note"]]
        for r, e in zip(reports, expectations):
            d = report_to_dict(r, e)
            rows.append([
                d["identity"], d["n"], d["m"], d["alpha"] or "", d["lambda"] or "", d["trunc"],
                d["verdict"], e, "" if d["first_mismatch"] is None else d["first_mismatch"],
                " ".join(d["lhs"]), " ".join(d["rhs"]), d["note"],
            ])
        return _csv(rows), code
    lines = [_describe(r) for r in reports]
    lines.append(f"equal={counts['equal']} mismatch={counts['mismatch']} skipped={counts['skipped']}")
    if failed:
        lines.append("FAILED: an identity expected to hold did not")
    return "\n".join(lines) + "\n", code


COMMANDS = {"poly": cmd_poly, "sums": cmd_sums, "verify": cmd_verify}


def run(argv: Optional[Sequence[str]] = None) -> tuple[str, int]:
    """Parse and execute; returns (stdout text, exit code). Usage errors raise UsageError."""
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_glue_negative_values(argv))
    try:
        return COMMANDS[args.command](args)
    except (UmbralError, ValueError) as exc:
        raise UsageError(str(exc))


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        out, code = run(argv)
    except UsageError as exc:
        print(f"umbral: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
