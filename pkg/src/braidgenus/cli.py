"""Command-line front end.

Exit codes: 0 on success, 1 when a verification or certification check
fails, 2 for usage, parse and input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter

from .bounds import (
    CHECK_NAMES,
    CertificationError,
    catalogue,
    corollary_rhs,
    floor_genus_lower,
    genus_bounds,
    render_rational,
    run_campaign,
    theorem_rhs,
    verify_braid,
)
from .braid import BraidError, BraidWord, parse_braid
from .invariants import NotAKnotError, alexander_polynomial
from .laurent import render
from .ordering import (
    DEFAULT_STEP_LIMIT,
    OrderResult,
    ReductionLimitError,
    compare,
    dehornoy_floor,
    handle_reduce,
    sigma_classify,
)

CSV_COLUMNS = ["braid", "n", "len", "floor", "chi_lower", "g_lower", "g_upper"] + [
    f"check_{name}" for name in CHECK_NAMES
]


class UsageError(Exception):
    pass


def sigma_notation(w: BraidWord) -> str:
    if not w.letters:
        return "1"
    return " ".join(f"sigma_{g}" if g > 0 else f"sigma_{-g}^-1" for g in w.letters)


def _parse(text: str) -> BraidWord:
    try:
        return parse_braid(text)
    except BraidError as exc:
        raise UsageError(f"cannot parse braid {text!r}: {exc}") from None


def _csv_value(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


def _csv(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _csv_value(row.get(k)) for k in columns})
    return buf.getvalue().rstrip("\n")


def _report_row(rec: dict) -> dict:
    row = dict(rec)
    row["len"] = rec["length"]
    row["g_lower"] = rec["genus_lower"]
    row["g_upper"] = rec["genus_upper"]
    return row


def cmd_compare(args) -> tuple[dict, str, int]:
    a, b = _parse(args.braids[0]), _parse(args.braids[1])
    try:
        result = compare(a, b, args.step_limit)
    except BraidError as exc:
        raise UsageError(str(exc)) from None
    sa, sb = sigma_notation(a), sigma_notation(b)
    relation = {
        OrderResult.LESS: f"{sa} <_D {sb}",
        OrderResult.EQUAL: f"{sa} = {sb}",
        OrderResult.GREATER: f"{sb} <_D {sa}",
    }[result]
    rec = {"a": str(a), "b": str(b), "result": result.value, "relation": relation}
    return rec, f"{result.value} ({relation})", 0


def cmd_reduce(args) -> tuple[dict, str, int]:
    w = _parse(args.braids[0])
    reduced = handle_reduce(w, args.step_limit)
    cls = sigma_classify(reduced)
    rec = {
        "input": str(w),
        "reduced": str(reduced),
        "length": len(reduced),
        "sigma_class": cls.kind.value,
        "main_index": cls.main_index,
    }
    if cls.main_index is None:
        label = cls.kind.value
    else:
        label = f"sigma_{cls.main_index}-{cls.kind.value}"
    return rec, f"{reduced}\nclass = {label}", 0


def cmd_floor(args) -> tuple[dict, str, int]:
    w = _parse(args.braids[0])
    res = dehornoy_floor(w, args.step_limit)
    rec = {"braid": str(w), "floor": res.floor}
    return rec, f"floor = {res.floor}", 0


def cmd_alexander(args) -> tuple[dict, str, int]:
    w = _parse(args.braids[0])
    try:
        poly = alexander_polynomial(w)
    except NotAKnotError as exc:
        raise UsageError(str(exc)) from None
    rec = {"braid": str(w), "alexander": render(poly), "span": poly.span()}
    return rec, render(poly), 0


def cmd_genus(args) -> tuple[dict, str, int]:
    w = _parse(args.braids[0])
    floor = dehornoy_floor(w, args.step_limit).floor
    try:
        gb = genus_bounds(w, floor)
    except NotAKnotError as exc:
        raise UsageError(str(exc)) from None
    rec = {
        "braid": str(w),
        "floor": floor,
        "floor_genus_lower": floor_genus_lower(w.strands, floor),
        "genus_lower": gb.lower,
        "genus_upper": gb.upper,
        "lower_source": gb.lower_source,
        "upper_source": gb.upper_source,
    }
    text = "\n".join(
        [
            f"genus in [{gb.lower}, {gb.upper}]",
            f"lower = {gb.lower} ({gb.lower_source})",
            f"upper = {gb.upper} ({gb.upper_source})",
            f"floor = {floor}, floor bound = {rec['floor_genus_lower']}",
        ]
    )
    return rec, text, 0


def _report_text(rec: dict) -> list[str]:
    g = "-" if rec["genus_lower"] is None else f"[{rec['genus_lower']}, {rec['genus_upper']}]"
    lines = [
        f"braid = {rec['braid']}",
        f"floor = {rec['floor']}",
        f"chi_lower = {rec['chi_lower']}",
        f"chi_connected_lower = {rec['chi_connected_lower']}",
        f"genus = {g}",
    ]
    for c in rec["checks"]:
        mark = "ok  " if c["holds"] else "FAIL"
        lines.append(f"{mark} {c['name']}: {c['lhs']} {c['relation']} {c['rhs']}")
    return lines


def cmd_verify(args) -> tuple[dict | list, str, int]:
    w = _parse(args.braids[0])
    report = verify_braid(w, args.step_limit)
    rec = report.to_record()
    return rec, "\n".join(_report_text(rec)), 0 if report.passed else 1


def cmd_sample(args) -> tuple[dict, str, int]:
    results = run_campaign(
        args.trials,
        seed=args.seed,
        max_strands=args.max_strands,
        max_len=args.max_len,
        max_bands=args.max_len,
        step_limit=args.step_limit,
    )
    per_check: Counter = Counter()
    applicable: Counter = Counter()
    failing = []
    for r in results:
        for c in r.report.checks:
            applicable[c.name] += 1
            per_check[c.name] += c.holds
        if not r.report.passed:
            failing.append({"kind": r.kind, "index": r.index, **r.report.to_record()})
    passed = len(results) - len(failing)
    rec = {
        "seed": args.seed,
        "trials": args.trials,
        "samples": len(results),
        "passed": passed,
        "failed": len(failing),
        "checks": {name: {"held": per_check[name], "applicable": applicable[name]} for name in CHECK_NAMES},
        "failures": failing,
    }
    lines = [
        f"seed = {args.seed}",
        f"samples = {len(results)} (random: {args.trials}, bands: {args.trials})",
        f"passed = {passed}",
        f"failed = {len(failing)}",
    ]
    for name in CHECK_NAMES:
        lines.append(f"check {name}: {per_check[name]}/{applicable[name]}")
    for f in failing:
        lines.append(f"-- failure {f['kind']}#{f['index']}")
        lines.extend(_report_text(f))
    return rec, "\n".join(lines), 0 if not failing else 1


def cmd_catalogue(args) -> tuple[list, str, int]:
    try:
        entries = catalogue()
    except CertificationError as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return [], "", 1
    rows = []
    for e in entries:
        n = e.braid.strands
        floor = dehornoy_floor(e.braid, args.step_limit).floor
        gb = genus_bounds(e.braid, floor)
        th = theorem_rhs(n, 1 - 2 * e.exact_genus)
        co = corollary_rhs(n, e.exact_genus)
        rows.append(
            {
                "name": e.name,
                "braid": str(e.braid),
                "n": n,
                "floor": floor,
                "genus_lower": gb.lower,
                "genus_upper": gb.upper,
                "genus": e.exact_genus,
                "theorem_rhs": render_rational(th),
                "theorem_holds": floor < th,
                "corollary_rhs": render_rational(co),
                "corollary_holds": floor < co,
            }
        )
    header = f"{'name':<13} {'braid':<22} {'floor':>5} {'bounds':>7} {'g':>2}  theorem      corollary"
    lines = [header]
    for r in rows:
        th = f"{r['floor']} < {r['theorem_rhs']}" + ("" if r["theorem_holds"] else " FAIL")
        co = f"{r['floor']} < {r['corollary_rhs']}" + ("" if r["corollary_holds"] else " FAIL")
        bounds = f"[{r['genus_lower']},{r['genus_upper']}]"
        lines.append(f"{r['name']:<13} {r['braid']:<22} {r['floor']:>5} {bounds:>7} {r['genus']:>2}  {th:<12} {co}")
    ok = all(r["theorem_holds"] and r["corollary_holds"] for r in rows)
    return rows, "\n".join(lines), 0 if ok else 1


COMMANDS = {
    "compare": (cmd_compare, 2, "compare two braids in the Dehornoy order"),
    "reduce": (cmd_reduce, 1, "handle-reduce a braid word"),
    "floor": (cmd_floor, 1, "Dehornoy floor of a braid"),
    "alexander": (cmd_alexander, 1, "Alexander polynomial of a knot closure"),
    "genus": (cmd_genus, 1, "certified genus bounds for a knot closure"),
    "verify": (cmd_verify, 1, "check every floor/genus inequality for one braid"),
    "sample": (cmd_sample, 0, "verify a seeded batch of random braids and band products"),
    "catalogue": (cmd_catalogue, 0, "table of self-certified knots"),
}


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _non_negative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=_non_negative, default=0)
    common.add_argument("--trials", type=_non_negative, default=1000)
    common.add_argument("--max-strands", type=_positive, default=5)
    common.add_argument("--max-len", type=_positive, default=20)
    common.add_argument("--step-limit", type=_positive, default=DEFAULT_STEP_LIMIT)

    parser = argparse.ArgumentParser(
        prog="braidgenus",
        description="Dehornoy ordering, Dehornoy floor and knot genus bounds for braids.",
        epilog='Braids are written "B<n>: g1 g2 ...", e.g. "B2: 1 1 1" for the trefoil.',
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, nargs, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if nargs:
            p.add_argument("braids", nargs=nargs, metavar="BRAID")
    return parser


def render_output(command: str, rec, text: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rec, indent=2, sort_keys=False)
    if fmt == "text":
        return text
    if command in ("verify",):
        return _csv([_report_row(rec)], CSV_COLUMNS)
    if command == "sample":
        return _csv([_report_row(f) for f in rec["failures"]], ["kind", "index"] + CSV_COLUMNS)
    rows = rec if isinstance(rec, list) else [rec]
    columns = list(rows[0]) if rows else []
    return _csv(rows, columns)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_strands < 2:
        parser.error("--max-strands must be at least 2")
    func = COMMANDS[args.command][0]
    try:
        rec, text, code = func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ReductionLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out = render_output(args.command, rec, text, args.format)
    if out:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
