"""Command-line interface. Every command reads the rule-set JSON format.

Exit codes: 0 success (or property holds), 1 violation found or invalid
game, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import _kernels
from .axioms import parse_weight, validate
from .bench import bench, growth_per_two
from .box_solver import MAX_DIM, outcome, solve_p0
from .classify import classify
from .core import GameError, RuleSet, as_position
from .heap_codec import rules_from_octal
from .region_oracle import (
    RegionTooLarge,
    check_indistinguishability_from_zero,
    check_mod2_periodicity,
    check_monoid_closure,
    default_budget,
    find_prop2_counterexample,
    max_region_default,
    solve_region,
)

log = logging.getLogger("latticegames")

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj, fmt: str, text: str | None = None) -> None:
    if fmt == "text" and text is not None:
        print(text)
    else:
        print(json.dumps(obj))


def _read_rules(path: str | None) -> RuleSet:
    try:
        if path is None or path == "-":
            data = sys.stdin.read()
        else:
            with open(path) as fh:
                data = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read rules: {exc}") from None
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise UsageError(f"rules are not valid JSON: {exc}") from None
    return RuleSet.from_dict(obj)


def _parse_csv_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(s) for s in text.split(",") if s.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _valid_rules(args) -> tuple[RuleSet, tuple]:
    """Load rules, require a legal game, and return a weight certificate."""
    rs = _read_rules(args.rules)
    report = validate(rs)
    if not report.ok:
        raise GameError(f"not a valid lattice game: {json.dumps(report.to_dict())}")
    w = parse_weight(args.weight, rs.d) if getattr(args, "weight", None) else report.certificate
    return rs, w


def _budget(args, w):
    if getattr(args, "budget", None) is None:
        return default_budget(w)
    try:
        return Fraction(args.budget)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad budget {args.budget!r}") from None


def cmd_validate(args) -> int:
    rs = _read_rules(args.rules)
    report = validate(rs)
    cert = "none" if report.certificate is None else ",".join(map(str, report.certificate))
    _emit(
        report.to_dict(),
        args.format,
        f"pointed={report.pointed} contains_orthant={report.contains_orthant} "
        f"certificate={cert} missing_axes={sorted(report.missing_axes)}",
    )
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_classify(args) -> int:
    c = classify(_read_rules(args.rules))
    _emit(c.to_dict(), args.format, f"{c.level.value} ({len(c.witnesses)} witnesses)")
    return EXIT_OK


def cmd_solve(args) -> int:
    rs, w = _valid_rules(args)
    sb = solve_p0(rs, w, backend=args.backend, max_dim=args.max_dim)
    p0 = [list(p) for p in sb.p0()]
    _emit(
        {"p0": p0, "stats": sb.stats.to_dict()},
        args.format,
        "\n".join(" ".join(map(str, p)) for p in p0),
    )
    return EXIT_OK


def cmd_outcome(args) -> int:
    rs, w = _valid_rules(args)
    p = as_position(_parse_csv_ints(args.position), rs.d)
    res = outcome(solve_p0(rs, w, backend=args.backend, max_dim=args.max_dim), p)
    _emit({"position": list(p), "outcome": str(res)}, args.format or "text", str(res))
    return EXIT_OK


def cmd_oracle(args) -> int:
    rs, w = _valid_rules(args)
    sr = solve_region(rs, w, _budget(args, w), max_region=args.max_region)
    out = sys.stdout
    for p, res in sr.items():
        if args.p_only and not res:
            continue
        if args.format == "text":
            out.write(f"{' '.join(map(str, p))} {res}\n")
        else:
            out.write(json.dumps({"p": list(p), "outcome": str(res)}) + "\n")
    return EXIT_OK


def cmd_check(args) -> int:
    rs, w = _valid_rules(args)
    sr = solve_region(rs, w, _budget(args, w), max_region=args.max_region)
    if args.property == "mod2":
        report = check_mod2_periodicity(sr)
    elif args.property == "monoid":
        report = check_monoid_closure(sr)
    else:
        if not args.position:
            raise UsageError("--property equiv-zero needs --position")
        report = check_indistinguishability_from_zero(sr, _parse_csv_ints(args.position))
    _emit(
        report.to_dict(),
        args.format,
        f"{report.name}: {report.checked_pairs} checked, {len(report.violations)} violations",
    )
    return EXIT_OK if report.holds else EXIT_VIOLATION


def cmd_encode_octal(args) -> int:
    rs = rules_from_octal(args.code, args.max_heap)
    _emit(rs.to_dict(), args.format, rs.to_json())
    return EXIT_OK


def cmd_counterexample(args) -> int:
    rs, w = _valid_rules(args)
    v = find_prop2_counterexample(rs, w, _budget(args, w), max_region=args.max_region)
    if v is None:
        _emit({"counterexample": None}, args.format, "none")
        return EXIT_OK
    _emit(
        {"counterexample": v.to_dict()},
        args.format,
        f"p={v.p} ({v.outcome_p}) q={v.q} ({v.outcome_q}) p+q ({v.outcome_sum})",
    )
    return EXIT_VIOLATION


def cmd_bench(args) -> int:
    ds = _parse_csv_ints(args.d)
    backends = args.backend.split(",") if args.backend else None
    rows = bench(ds, args.family, args.density, args.repetitions, backends, args.max_dim)
    result = {"rows": [r.to_dict() for r in rows]}
    by_backend: dict[str, list] = {}
    for r in rows:
        by_backend.setdefault(r.backend, []).append(r)
    result["growth_per_two"] = {b: growth_per_two(rs) for b, rs in by_backend.items()}
    lines = [f"{'backend':8} {'d':>3} {'|G|':>5} {'seconds':>10} {'positions':>10} {'options':>12}"]
    lines += [
        f"{r.backend:8} {r.d:>3} {r.moves:>5} {r.seconds:>10.4f} {r.positions_computed:>10} {r.option_evaluations:>12}"
        for r in rows
    ]
    _emit(result, args.format, "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="latticegames", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, rules=True):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("json", "text"), default=None)
        if rules:
            p.add_argument("--rules", metavar="FILE", help="rule-set JSON (default: stdin)")
        return p

    def region_flags(p):
        p.add_argument("--weight", metavar="CSV", help="weight certificate, e.g. 1,2,3/2")
        p.add_argument("--budget", metavar="RATIONAL", help="region is w.p <= budget")
        p.add_argument("--max-region", type=int, default=None, help=f"default {max_region_default()}")

    def box_flags(p):
        p.add_argument("--weight", metavar="CSV")
        p.add_argument("--backend", choices=("numba", "numpy", "python"), default=None)
        p.add_argument("--max-dim", type=int, default=MAX_DIM)

    add("validate", cmd_validate, "check the game axioms")
    add("classify", cmd_classify, "squarefree / weakly squarefree")
    box_flags(add("solve", cmd_solve, "P-positions in {0,1}^d"))
    p = add("outcome", cmd_outcome, "outcome of one position")
    box_flags(p)
    p.add_argument("--position", required=True, metavar="CSV")
    p = add("oracle", cmd_oracle, "brute-force outcome table (NDJSON)")
    region_flags(p)
    p.add_argument("--p-only", action="store_true")
    p = add("check", cmd_check, "check a property on the brute-force table")
    region_flags(p)
    p.add_argument("--property", choices=("mod2", "monoid", "equiv-zero"), required=True)
    p.add_argument("--position", metavar="CSV")
    p = add("counterexample", cmd_counterexample, "first P-position closure failure")
    region_flags(p)
    p = add("encode-octal", cmd_encode_octal, "rule set of an octal game", rules=False)
    p.add_argument("--code", required=True)
    p.add_argument("--max-heap", type=int, required=True)
    p = add("bench", cmd_bench, "time the box solver", rules=False)
    p.add_argument("--d", default="12,16,20", metavar="CSV")
    p.add_argument("--family", choices=("nim", "random"), default="nim")
    p.add_argument("--density", type=float, default=2.0)
    p.add_argument("--repetitions", type=int, default=3)
    p.add_argument("--backend", default=None, help=f"comma list of numba,numpy (default {_kernels.DEFAULT_BACKEND})")
    p.add_argument("--max-dim", type=int, default=MAX_DIM)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RegionTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
