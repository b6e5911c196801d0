"""Command-line front end.

    minorbit verify G2 [--format text|json|csv]
    minorbit table [--families A,B,...] [--max-rank 12] [--format ...]
    minorbit roots A2 [--format ...]

Exit codes: 0 all checks passed, 1 some check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from minorbit.cartan import FAMILIES, LieType, LieTypeError, is_valid_rank, parse_lie_type
from minorbit.orbit import CHECK_NAMES, VerificationReport, dual_coxeter, special_roots, verify
from minorbit.roots import format_coords, root_system

MAX_RANK = 64
DEFAULT_MAX_RANK = 12
FORMATS = ("text", "json", "csv")

CSV_HEADER = (
    "type",
    "num_roots",
    "num_positive",
    "h_dual",
    "num_special",
    "dim_lemma1",
    "dim_theorem",
    "l_theta",
) + CHECK_NAMES

ROOTS_CSV_HEADER = ("coords", "height", "norm2", "is_theta", "is_special", "is_orthogonal_to_theta")

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _q(x) -> str:
    return str(Fraction(x))


def battery(families: Sequence[str], max_rank: int) -> list[LieType]:
    """Every valid type with family in ``families`` and rank <= ``max_rank``."""
    return [
        LieType(f, n)
        for f in sorted(set(families))
        for n in range(1, max_rank + 1)
        if is_valid_rank(f, n)
    ]


def _checked_type(text: str) -> LieType:
    try:
        t = parse_lie_type(text)
    except LieTypeError as e:
        raise UsageError(str(e)) from None
    if t.rank > MAX_RANK:
        raise UsageError(f"rank {t.rank} exceeds the CLI limit of {MAX_RANK}")
    return t


def _parse_families(text: str) -> list[str]:
    fams = [f.strip().upper() for f in text.split(",") if f.strip()]
    bad = [f for f in fams if len(f) != 1 or f not in FAMILIES]
    if bad or not fams:
        raise UsageError(f"--families expects comma-separated letters from {','.join(FAMILIES)}, got {text!r}")
    return fams


# -- report rendering --------------------------------------------------------


def report_row(r: VerificationReport) -> list[str]:
    nums = (r.num_roots, r.num_positive, r.h_dual, r.num_special, r.dim_lemma1, r.dim_theorem,
            r.reflection_length_theta)
    return [str(r.type)] + [str(x) for x in nums] + [_bool(r.checks[c]) for c in CHECK_NAMES]


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _report_json(r: VerificationReport) -> dict:
    d = r.to_dict()
    d["all_passed"] = r.passed
    return d


def _text_table(header, rows) -> str:
    widths = [max([len(h)] + [len(row[i]) for row in rows]) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def render_report(r: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_report_json(r), indent=2) + "\n"
    if fmt == "csv":
        return _csv(CSV_HEADER, [report_row(r)])
    status = "all checks passed" if r.passed else "SOME CHECKS FAILED"
    lines = [
        f"{r.type}: {status}",
        f"  roots                  {r.num_roots}",
        f"  positive roots         {r.num_positive}",
        f"  dual Coxeter number    {r.h_dual}",
        f"  special roots          {r.num_special}",
        f"  dim (nonorthogonal)    {r.dim_lemma1}",
        f"  dim (2 h_dual - 2)     {r.dim_theorem}",
        f"  length of r_theta      {r.reflection_length_theta}",
        "  checks:",
    ]
    width = max(len(c) for c in CHECK_NAMES)
    lines += [f"    {c.ljust(width)}  {'ok' if r.checks[c] else 'FAIL'}" for c in CHECK_NAMES]
    return "\n".join(lines) + "\n"


def render_table(reports: list[VerificationReport], fmt: str) -> str:
    if fmt == "json":
        doc = {"reports": [_report_json(r) for r in reports], "all_passed": all(r.passed for r in reports)}
        return json.dumps(doc, indent=2) + "\n"
    rows = [report_row(r) for r in reports]
    if fmt == "csv":
        return _csv(CSV_HEADER, rows)
    return _text_table(CSV_HEADER, rows)


def render_roots(t: LieType, fmt: str) -> str:
    rs = root_system(t)
    special = special_roots(rs)
    theta = rs.theta
    records = []
    for a in rs.positives:
        records.append({
            "coords": list(a.coords),
            "height": a.height,
            "norm2": _q(rs.inner(a.coords, a.coords)),
            "is_theta": a == theta,
            "is_special": a in special,
            "is_orthogonal_to_theta": rs.inner(a.coords, theta.coords) == 0,
        })
    summary = {
        "type": str(t),
        "theta": list(theta.coords),
        "rho": [_q(x) for x in rs.rho],
        "h_dual": dual_coxeter(rs),
        "num_special": len(special),
    }
    if fmt == "json":
        return json.dumps({**summary, "positive_roots": records}, indent=2) + "\n"
    rows = [
        [" ".join(str(c) for c in rec["coords"]), str(rec["height"]), rec["norm2"]]
        + [_bool(rec[k]) for k in ROOTS_CSV_HEADER[3:]]
        for rec in records
    ]
    if fmt == "csv":
        return _csv(ROOTS_CSV_HEADER, rows)
    for row, a in zip(rows, rs.positives):
        row[0] = str(a)
    footer = (
        f"theta = {format_coords(theta.coords)}\n"
        f"rho = {format_coords(rs.rho)}\n"
        f"h_dual = {summary['h_dual']}\n"
        f"#special = {summary['num_special']}\n"
    )
    return _text_table(("root",) + ROOTS_CSV_HEADER[1:], rows) + footer


def _report_failures(reports: list[VerificationReport], err: TextIO) -> None:
    for r in reports:
        for msg in r.failures:
            print(f"{r.type}: {msg}", file=err)
        for c in CHECK_NAMES:
            if not r.checks[c] and not any(m.startswith(c) for m in r.failures):
                print(f"{r.type}: {c} failed", file=err)


# -- entry points ------------------------------------------------------------


def cmd_verify(type_string: str, fmt: str = "text", out: TextIO | None = None, err: TextIO | None = None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    t = _checked_type(type_string)
    r = verify(t)
    out.write(render_report(r, fmt))
    if not r.passed:
        _report_failures([r], err)
        return EXIT_FAILED
    return EXIT_OK


def cmd_table(families: Sequence[str] = tuple(FAMILIES), max_rank: int = DEFAULT_MAX_RANK, fmt: str = "text",
              out: TextIO | None = None, err: TextIO | None = None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    if not 1 <= max_rank <= MAX_RANK:
        raise UsageError(f"--max-rank must be between 1 and {MAX_RANK}, got {max_rank}")
    reports = [verify(t) for t in battery(families, max_rank)]
    out.write(render_table(reports, fmt))
    failed = [r for r in reports if not r.passed]
    if failed:
        _report_failures(failed, err)
        return EXIT_FAILED
    return EXIT_OK


def cmd_roots(type_string: str, fmt: str = "text", out: TextIO | None = None) -> int:
    t = _checked_type(type_string)
    (out or sys.stdout).write(render_roots(t, fmt))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minorbit",
        description="Root-system checks of the minimal nilpotent orbit dimension formula.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt_kw = dict(choices=FORMATS, default="text", help="output format (default: text)")

    p = sub.add_parser("verify", help="verify every identity for one Lie type")
    p.add_argument("type", help="Lie type such as A5, G2, E8")
    p.add_argument("--format", **fmt_kw)

    p = sub.add_parser("table", help="verify a battery of Lie types")
    p.add_argument("--families", default=",".join(FAMILIES), help="comma-separated family letters")
    p.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK, help=f"largest rank (<= {MAX_RANK})")
    p.add_argument("--format", **fmt_kw)

    p = sub.add_parser("roots", help="list the positive roots of one Lie type")
    p.add_argument("type")
    p.add_argument("--format", **fmt_kw)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args.type, args.format)
        if args.command == "table":
            return cmd_table(_parse_families(args.families), args.max_rank, args.format)
        return cmd_roots(args.type, args.format)
    except UsageError as e:
        print(f"minorbit: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
