"""Command-line interface.

Every subcommand writes one report to stdout in the requested format and
keeps diagnostics on stderr.  Exit codes: 0 success, 1 domain error
(search exhausted, bad reduction, failed validation), 2 usage error.
csv and json output is byte-stable across runs: keys sorted, LF endings,
no timestamps.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import catalog, pointcount, ringclass, search as search_mod
from .arith import is_prime, kronecker
from .constants import delta_good_selfconj, delta_sum_for_tower
from .errors import CMRankError, NotPrimeError
from .search import RecipeCase, Tables, generate_tables

FORMATS = ("text", "csv", "json", "markdown")


# ---------------------------------------------------------------------------
# rendering


def _csv_block(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _text_block(header: list[str], rows: list[list], title: str | None = None) -> str:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = []
    if title:
        lines.append(title)
    for r in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _markdown_block(header: list[str], rows: list[list], title: str | None = None) -> str:
    lines = []
    if title:
        lines.append(f"### {title}")
        lines.append("")
    lines.append("| " + " | ".join(header) + " |")
    lines.append("|" + "|".join(" --- " for _ in header) + "|")
    for row in rows:
        lines.append("| " + " | ".join(str(c) for c in row) + " |")
    return "\n".join(lines) + "\n"


def _emit(fmt: str, payload: dict, blocks: list[tuple[str | None, list[str], list[list]]]) -> None:
    """blocks: (title, header, rows) per table; payload: the json form."""
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    elif fmt == "csv":
        # multiple blocks are merged by the caller; csv output is one table
        assert len(blocks) == 1
        _, header, rows = blocks[0]
        sys.stdout.write(_csv_block(header, rows))
    elif fmt == "markdown":
        sys.stdout.write("\n".join(_markdown_block(h, r, t) for t, h, r in blocks))
    else:
        sys.stdout.write("\n".join(_text_block(h, r, t) for t, h, r in blocks))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_catalog(args: argparse.Namespace) -> int:
    report = catalog.validate_catalog()
    header = ["D", "a1", "a2", "a3", "a4", "a6", "conductor", "j", "d_K", "w",
              "rank_lo", "rank_hi"]
    rows = []
    curves_json = []
    for c in catalog.curves():
        a1, a2, a3, a4, a6 = c.a_invariants
        rows.append([c.D, a1, a2, a3, a4, a6, c.conductor, c.j_invariant,
                     c.field_disc, c.unit_count, c.rank_over_K.lo, c.rank_over_K.hi])
        curves_json.append({
            "D": c.D, "a_invariants": list(c.a_invariants),
            "conductor": c.conductor, "j": c.j_invariant,
            "d_K": c.field_disc, "w": c.unit_count,
            "rank_lo": c.rank_over_K.lo, "rank_hi": c.rank_over_K.hi,
        })
    payload = {
        "curves": curves_json,
        "validation": {
            "ok": report.ok,
            "checks": [
                {"name": ch.name, "D": ch.D, "passed": ch.passed, "detail": ch.detail}
                for ch in report.checks
            ],
        },
    }
    blocks = [("catalog", header, rows)]
    if args.format in ("text", "markdown"):
        vrows = [[ch.name, "-" if ch.D is None else ch.D,
                  "pass" if ch.passed else "FAIL", ch.detail]
                 for ch in report.checks]
        blocks.append(("validation", ["check", "D", "status", "detail"], vrows))
    _emit(args.format, payload, blocks)
    if not report.ok:
        for ch in report.failures():
            print(f"validation failure: {ch.name} (D={ch.D}): {ch.detail}",
                  file=sys.stderr)
        return 1
    return 0


def _cmd_classnum(args: argparse.Namespace) -> int:
    od = ringclass.class_number_order(args.curve, args.f)
    h_forms = ringclass.class_number_by_forms(od.disc)
    payload = {"D": od.D, "f": od.f, "h": od.h, "unit_index": od.unit_index,
               "disc": od.disc, "h_by_forms": h_forms, "agree": od.h == h_forms}
    header = ["D", "f", "h", "unit_index", "disc", "h_by_forms", "agree"]
    row = [od.D, od.f, od.h, od.unit_index, od.disc, h_forms, od.h == h_forms]
    _emit(args.format, payload, [(None, header, [row])])
    if od.h != h_forms:
        print(f"class-number formula ({od.h}) disagrees with forms count "
              f"({h_forms}) at disc {od.disc}", file=sys.stderr)
        return 1
    return 0


def _cmd_split(args: argparse.Namespace) -> int:
    if (args.f is None) == (args.ell is None):
        print("split needs exactly one of --f or --ell", file=sys.stderr)
        return 2
    if args.ell is not None and not is_prime(args.ell):
        raise NotPrimeError(f"--ell {args.ell} is not prime (use --f for composites)")
    f = args.f if args.f is not None else args.ell
    rps = ringclass.ramified_primes(args.curve, f)
    header = ["ell", "split_type", "self_conjugate", "good_reduction"]
    rows = [[rp.ell, rp.split_type.value, rp.self_conjugate, rp.good_reduction]
            for rp in rps]
    payload = {
        "D": args.curve, "f": f,
        "primes": [
            {"ell": rp.ell, "split_type": rp.split_type.value,
             "self_conjugate": rp.self_conjugate,
             "good_reduction": rp.good_reduction}
            for rp in rps
        ],
    }
    _emit(args.format, payload, [(None, header, rows)])
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    c = catalog.curve(args.curve)
    rc = pointcount.reduce_curve(c, args.ell)
    res = pointcount.count_points(rc)
    ss = pointcount.is_supersingular(c, args.ell)
    payload = {"D": c.D, "ell": args.ell, "coeffs": list(rc.coeffs),
               "order": res.order, "trace": res.trace, "supersingular": ss}
    header = ["D", "ell", "order", "trace", "supersingular"]
    _emit(args.format, payload,
          [(None, header, [[c.D, args.ell, res.order, res.trace, ss]])])
    return 0


def _cmd_delta(args: argparse.Namespace) -> int:
    c = catalog.curve(args.curve)
    d = delta_good_selfconj(c, args.p, args.ell)
    order = pointcount.count_points(pointcount.reduce_curve(c, args.ell)).order
    payload = {"D": c.D, "p": args.p, "ell": args.ell,
               "delta": [d.e1, d.e2], "order": order}
    header = ["D", "p", "ell", "delta_1", "delta_2", "order"]
    _emit(args.format, payload,
          [(None, header, [[c.D, args.p, args.ell, d.e1, d.e2, order]])])
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    res = search_mod.search(RecipeCase(args.case), args.curve, args.p, args.bound)
    payload = res.to_dict()
    header = ["D", "p", "case", "conductors", "degree", "m",
              "branch_parities", "min_rank", "caveat"]
    bounds = ";".join(str(b.min_rank) if b.min_rank is not None else "-"
                      for b in res.prediction.branches)
    parities = ";".join(str(b.assumed_rank_parity) for b in res.prediction.branches)
    row = [res.D, res.p, res.case.value, ";".join(map(str, res.conductors)),
           res.tower.degree, res.tower.m, parities, bounds, res.prediction.caveat]
    _emit(args.format, payload, [(None, header, [row])])
    return 0


_TABLE_CASES = (("table1", "m0"), ("table2", "m2"), ("table3", "m1"))


def _tables_blocks(tables: Tables) -> list[tuple[str | None, list[str], list[list]]]:
    blocks = []
    for (name, case), cells in zip(_TABLE_CASES,
                                   (tables.table1, tables.table2, tables.table3)):
        pair = case == "m2"
        header = ["D"]
        for p in search_mod.TABLE_PRIMES:
            header += [f"p={p} f1", "f2", "[F:K]"] if pair else [f"p={p} f", "[F:K]"]
        rows = {}
        for cell in cells:
            row = rows.setdefault(cell.D, [cell.D])
            if cell.result is None:
                row += ["-", "-", "-"] if pair else ["-", "-"]
            elif pair:
                f1, f2 = cell.result.conductors
                row += [f1, f2, cell.result.tower.degree]
            else:
                row += [cell.result.conductors[0], cell.result.tower.degree]
        blocks.append((f"{name} (case m={case[1]})", header,
                       [rows[d] for d in sorted(rows)]))
    return blocks


def _cmd_tables(args: argparse.Namespace) -> int:
    tables = generate_tables(args.bound)
    payload: dict = {"bound": args.bound}
    csv_rows = []
    for (name, case), cells in zip(_TABLE_CASES,
                                   (tables.table1, tables.table2, tables.table3)):
        entries = []
        for cell in cells:
            entry: dict = {"D": cell.D, "p": cell.p}
            if cell.result is None:
                entry.update({"status": "not-found", "error": cell.error})
                fs = ["", ""]
                degree = ""
            else:
                entry.update({
                    "status": "ok",
                    "conductors": list(cell.result.conductors),
                    "degree": cell.result.tower.degree,
                    "m": cell.result.tower.m,
                })
                fs = list(cell.result.conductors) + [""]
                degree = cell.result.tower.degree
            entries.append(entry)
            csv_rows.append([name, case, cell.D, cell.p, fs[0], fs[1], degree,
                             entry["status"]])
        payload[name] = entries
    if args.format == "csv":
        _emit("csv", payload,
              [(None, ["table", "case", "D", "p", "f1", "f2", "degree", "status"],
                csv_rows)])
    else:
        _emit(args.format, payload, _tables_blocks(tables))
    missing = [c for c in tables.all_cells() if c.result is None]
    if missing:
        for cell in missing:
            print(f"not found: {cell.case.value} D={cell.D} p={cell.p}: {cell.error}",
                  file=sys.stderr)
        return 1
    return 0


def _selftest_suites(bound: int) -> list[tuple[str, bool, str]]:
    results = []

    report = catalog.validate_catalog()
    results.append(("catalog-validation", report.ok,
                    f"{len(report.checks)} checks"
                    + ("" if report.ok else f"; failures: {report.failures()}")))

    bad = []
    for c in catalog.curves():
        for f in range(1, 201):
            h = ringclass.class_number_order(c.D, f).h
            hf = ringclass.class_number_by_forms(f * f * c.field_disc)
            if h != hf:
                bad.append((c.D, f, h, hf))
    results.append(("classnum-forms-equivalence", not bad,
                    "formula == forms count for all D, f <= 200"
                    if not bad else f"mismatches: {bad[:5]}"))

    bad = []
    for c in catalog.curves():
        for ell in range(2, 101):
            if not is_prime(ell) or c.conductor % ell == 0:
                continue
            rc = pointcount.reduce_curve(c, ell)
            if pointcount.count_points(rc) != pointcount.count_points_enumeration(rc):
                bad.append((c.D, ell))
    results.append(("pointcount-method-equivalence", not bad,
                    "character sum == enumeration for all D, good ell <= 100"
                    if not bad else f"mismatches: {bad[:5]}"))

    bad = []
    for c in catalog.curves():
        for ell in range(2, 1001):
            if not is_prime(ell) or c.conductor % ell == 0:
                continue
            ss = pointcount.is_supersingular(c, ell)
            if ss != (kronecker(c.field_disc, ell) == -1):
                bad.append((c.D, ell))
    results.append(("supersingular-iff-inert", not bad,
                    "all D, good ell <= 1000"
                    if not bad else f"mismatches: {bad[:5]}"))

    bad = []
    tables = generate_tables(bound)
    for cell in tables.all_cells():
        if cell.result is None:
            bad.append((cell.case.value, cell.D, cell.p, "not-found"))
            continue
        expected_m = {"m0": 0, "m1": 1, "m2": 2}[cell.case.value]
        ds = delta_sum_for_tower(catalog.curve(cell.D), cell.p, cell.result.tower)
        if ds.m != expected_m:
            bad.append((cell.case.value, cell.D, cell.p, f"m={ds.m}"))
    results.append(("table-delta-consistency", not bad,
                    "delta sums match the recipe m on every cell"
                    if not bad else f"failures: {bad[:5]}"))
    return results


def _cmd_selftest(args: argparse.Namespace) -> int:
    results = _selftest_suites(args.bound)
    header = ["suite", "status", "detail"]
    rows = [[name, "pass" if ok else "FAIL", detail] for name, ok, detail in results]
    payload = {"suites": [{"name": n, "passed": ok, "detail": d}
                          for n, ok, d in results],
               "ok": all(ok for _, ok, _ in results)}
    _emit(args.format, payload, [(None, header, rows)])
    return 0 if payload["ok"] else 1


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cmrank",
        description="Local constants and rank-growth towers for the CM "
                    "elliptic curves over Q",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str, *, curve=False, p=False, ell=False, f=False,
            case=False, bound=False, ell_optional=False):
        sp = sub.add_parser(name, help=help_)
        if curve:
            sp.add_argument("--curve", type=int, required=True, metavar="D",
                            help="curve label (3,4,7,8,11,19,43,67,163)")
        if p:
            sp.add_argument("--p", type=int, required=True, help="odd prime p")
        if ell:
            sp.add_argument("--ell", type=int, required=not ell_optional,
                            default=None, help="rational prime ell")
        if f:
            sp.add_argument("--f", type=int, required=not ell_optional,
                            default=None, help="order conductor f")
        if case:
            sp.add_argument("--case", choices=["m0", "m1", "m2"], required=True,
                            help="recipe case")
        if bound:
            sp.add_argument("--bound", type=int, default=search_mod.DEFAULT_BOUND,
                            help="largest conductor prime to try (default 400)")
        sp.add_argument("--format", choices=FORMATS, default="text")
        return sp

    add("catalog", "dump the curve catalog and validate it")
    add("classnum", "class number of the order O_f, both routes", curve=True, f=True)
    add("split", "splitting of the primes dividing f in K/Q", curve=True,
        f=True, ell=True, ell_optional=True)
    add("count", "point count and Frobenius trace mod a good prime",
        curve=True, ell=True)
    add("delta", "local constant at a self-conjugate good prime",
        curve=True, p=True, ell=True)
    add("search", "smallest conductor(s) for a recipe case",
        curve=True, p=True, case=True, bound=True)
    add("tables", "regenerate all three result tables", bound=True)
    add("selftest", "run the oracle-equivalence suites", bound=True)
    return parser


_DISPATCH = {
    "catalog": _cmd_catalog,
    "classnum": _cmd_classnum,
    "split": _cmd_split,
    "count": _cmd_count,
    "delta": _cmd_delta,
    "search": _cmd_search,
    "tables": _cmd_tables,
    "selftest": _cmd_selftest,
}


def run(argv: list[str]) -> int:
    """Parse and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors and --help
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except CMRankError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:  # out-of-domain argument values
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
