"""Command-line interface: ``gsgkit <command> ...``.

Exit codes: 0 success, 1 analysis or verification failure, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .analysis import ALMOST_TOL, EXACT_TOL, VERIFY_TOL, verify_closed_form
from .errors import GsgError, ParameterError, ParseError
from .graph import FAMILIES, FamilySpec, build_family
from .io import FORMATS, read_graph_file, write_graph_file
from .report import (SCAN_COLUMNS, FIGURES, analyze_graph, figure_data,
                     format_table, header_line, record_line, records_to_csv,
                     scan_rows)
from .search import MAX_TREE_ORDER, expand_grid, parse_range, scan_specs, scan_trees

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
_PARAM_FLAGS = ("n", "a", "b", "c", "q", "r", "k")


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so ``main`` owns the
    exit code."""

    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gsgkit", description="Spectral-ratio analysis of graphs.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    c = sub.add_parser("construct", help="build a family instance and write it to a file")
    c.add_argument("--family", required=True, choices=FAMILIES)
    for name in _PARAM_FLAGS:
        c.add_argument(f"--{name}", type=int)
    c.add_argument("--conn", help="comma-separated circulant connection set")
    c.add_argument("--name", help="platonic or named graph")
    c.add_argument("--out", required=True)
    c.add_argument("--format", choices=FORMATS)

    a = sub.add_parser("analyze", help="spectral report for each graph in a file")
    a.add_argument("path")
    a.add_argument("--format", choices=FORMATS)
    a.add_argument("--json", action="store_true", help="one JSON record per line")
    a.add_argument("--tol", type=float, default=EXACT_TOL)

    s = sub.add_parser("scan", help="rank a family by distance from the golden point")
    s.add_argument("--family", required=True, choices=FAMILIES)
    s.add_argument("--range", required=True, dest="range_expr")
    s.add_argument("--tol", type=float, default=ALMOST_TOL)
    s.add_argument("--top", type=int)
    s.add_argument("--csv", dest="csv_path")
    s.add_argument("--json", action="store_true")
    s.add_argument("--workers", type=int)

    t = sub.add_parser("trees", help="ratios of every free tree in an order range")
    t.add_argument("--min-n", type=int, default=2)
    t.add_argument("--max-n", type=int, default=10)
    t.add_argument("--tol", type=float, default=ALMOST_TOL)
    t.add_argument("--top", type=int)
    t.add_argument("--csv", nargs="?", const="-", dest="csv_path",
                   help="write CSV (to stdout when no path is given)")

    v = sub.add_parser("verify", help="compare closed-form and numeric spectra")
    v.add_argument("--family", required=True, choices=FAMILIES)
    v.add_argument("--range", required=True, dest="range_expr")
    v.add_argument("--tol", type=float, default=VERIFY_TOL)

    f = sub.add_parser("figdata", help="data columns behind the ratio plots")
    f.add_argument("--figure", required=True, choices=FIGURES)
    f.add_argument("--max-n", type=int, required=True)
    f.add_argument("--out", required=True)
    return p


def _fmt(x) -> str:
    if x is None:
        return "n/a"
    if isinstance(x, float):
        return f"{x:.6f}"
    return str(x)


def _print_scan(records, out):
    print(f"{'rank':>4}  {'spec':<40} {'n':>4} {'w1':>10} {'w2':>10} {'deviation':>10}  golden",
          file=out)
    for r in records:
        print(f"{r.rank:>4}  {r.spec:<40} {r.n:>4} {_fmt(r.w1):>10} {_fmt(r.w2):>10} "
              f"{_fmt(r.deviation):>10}  {'yes' if r.is_golden else 'no'}", file=out)


def _emit_csv(text: str, path: str, out):
    if path == "-":
        out.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8", newline="")


def _grid(expr: str):
    try:
        return expand_grid(parse_range(expr))
    except ParameterError as exc:
        raise _UsageError(f"--range: {exc}") from None


def _cmd_construct(args, out):
    params = {k: getattr(args, k) for k in _PARAM_FLAGS if getattr(args, k) is not None}
    if args.conn is not None:
        try:
            params["conn"] = tuple(int(x) for x in args.conn.split(","))
        except ValueError:
            raise _UsageError(f"--conn must be comma-separated integers, got {args.conn!r}")
    if args.name is not None:
        params["name"] = args.name
    spec = FamilySpec(args.family, params)
    g = build_family(spec)
    write_graph_file(g, args.out, args.format)
    print(f"wrote {spec} (n={g.n}, m={g.m}) to {args.out}", file=out)
    return EXIT_OK


def _cmd_analyze(args, out):
    entries = read_graph_file(args.path, args.format)
    if not entries:
        raise ParseError("no graphs found", source=args.path)
    for label, g in entries:
        report = analyze_graph(g, label=label, tol=args.tol)
        if args.json:
            print(record_line(report.to_record()), file=out)
        else:
            out.write(format_table(report))
            if len(entries) > 1:
                print(file=out)
    return EXIT_OK


def _cmd_scan(args, out):
    specs = [FamilySpec(args.family, p) for p in _grid(args.range_expr)]
    records = scan_specs(specs, args.tol, args.workers)
    shown = records[: args.top] if args.top else records
    if args.csv_path:
        _emit_csv(records_to_csv(scan_rows(shown), SCAN_COLUMNS), args.csv_path, out)
    if args.json:
        print(header_line("scan", family=args.family, tol=args.tol), file=out)
        for row in scan_rows(shown):
            print(record_line(row), file=out)
    elif not args.csv_path or args.csv_path != "-":
        _print_scan(shown, out)
    return EXIT_OK


def _cmd_trees(args, out):
    if args.min_n < 2 or args.max_n < args.min_n:
        raise _UsageError("need 2 <= --min-n <= --max-n")
    if args.max_n > MAX_TREE_ORDER:
        raise _UsageError(f"--max-n is capped at {MAX_TREE_ORDER}")
    records = scan_trees(args.min_n, args.max_n, args.tol)
    shown = records[: args.top] if args.top else records
    if args.csv_path:
        _emit_csv(records_to_csv(scan_rows(shown), SCAN_COLUMNS), args.csv_path, out)
        if args.csv_path == "-":
            return EXIT_OK
    golden = sum(r.is_golden for r in records)
    print(f"{len(records)} trees, n = {args.min_n}..{args.max_n}; "
          f"{golden} within tol {args.tol}", file=out)
    _print_scan(shown, out)
    return EXIT_OK


def _cmd_verify(args, out):
    failures = 0
    for params in _grid(args.range_expr):
        spec = FamilySpec(args.family, params)
        rep = verify_closed_form(spec, tol=args.tol)
        status = "ok" if rep.passed else "FAIL"
        detail = rep.problem or (f"max deviation {rep.max_abs_deviation:.3e}, "
                                 f"multiplicities {'match' if rep.multiplicities_match else 'differ'}")
        print(f"{status:<4}  {spec}  {detail}", file=out)
        failures += not rep.passed
    print(f"{failures} failure(s)", file=out)
    return EXIT_FAIL if failures else EXIT_OK


def _cmd_figdata(args, out):
    columns, rows = figure_data(args.figure, args.max_n)
    _emit_csv(records_to_csv(rows, columns), args.out, out)
    if args.out != "-":
        print(f"wrote {len(rows)} rows for figure {args.figure} to {args.out}", file=out)
    return EXIT_OK


_COMMANDS = {
    "construct": _cmd_construct, "analyze": _cmd_analyze, "scan": _cmd_scan,
    "trees": _cmd_trees, "verify": _cmd_verify, "figdata": _cmd_figdata,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=err)
    try:
        return _COMMANDS[args.command](args, out)
    except (_UsageError, ParseError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except (GsgError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
