"""Command line front end: build, inspect, export, scan, and check.

Exit codes: 0 success, 1 usage or parse error, 2 computational refusal
(vertex cap, enumeration cap), 3 check or verification failure.
"""

from __future__ import annotations

import argparse
import csv
import sys
from concurrent.futures import ProcessPoolExecutor
from time import perf_counter

from .automaton import (
    DEFAULT_MAX_VERTICES,
    build_multi,
    to_dot,
    to_json,
)
from .checks import SUITES, run_suite
from .errors import ParseError, RefusalError
from .families import Y_graph, expect_L, expect_N
from .langops import is_subset, pointed_isomorphic
from .oracle import brute_count, brute_count_extendable
from .spectral import hausdorff_dim, scc
from .ternary import FamilyId, family_value, parse_multiplier, parse_multiplier_list

CSV_HEADER = ("multipliers", "vertices", "sccs", "beta", "dim", "error_bound", "elapsed_ms", "error")


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; we reserve 2 for refusals."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _graph_spec(text: str, max_vertices: int):
    """A multiplier list, or the literal 'Y' for the two-vertex witness graph."""
    if text.strip() in ("Y", "y"):
        return Y_graph()
    return build_multi(parse_multiplier_list(text), max_vertices=max_vertices)


def _echo(ms) -> str:
    return ",".join(str(m.normalized_from) for m in ms)


def _expand_scan_specs(tokens):
    """Each token is a tuple spec or a range of singles: '4..40', 'L:1..9'."""
    out = []
    for tok in tokens:
        tok = tok.strip()
        if ".." in tok:
            head, _, tail = tok.partition("..")
            if len(head) > 2 and head[1] == ":":
                kind = head[0]
                lo, hi = int(head[2:]), int(tail)
                if lo < 1 or hi < lo:
                    raise ParseError(f"bad family range {tok!r}")
                for k in range(lo, hi + 1):
                    out.append(([parse_multiplier(f"{kind}:{k}")], f"{kind}:{k}"))
            else:
                try:
                    lo, hi = int(head), int(tail)
                except ValueError:
                    raise ParseError(f"bad range {tok!r}") from None
                if lo < 1 or hi < lo:
                    raise ParseError(f"bad range {tok!r}")
                for m in range(lo, hi + 1):
                    out.append(([parse_multiplier(str(m))], str(m)))
        else:
            ms = parse_multiplier_list(tok)
            out.append((ms, _echo(ms)))
    return out


def _scan_row(task):
    """One scan row; exceptions become the row's error column."""
    label, values, max_vertices = task
    t0 = perf_counter()
    try:
        g = build_multi(values, max_vertices=max_vertices)
        r = hausdorff_dim(g)
        elapsed = int((perf_counter() - t0) * 1000)
        return (label, g.n, len(scc(g).components), r.beta, r.dim, r.error_bound, elapsed, "")
    except Exception as e:
        elapsed = int((perf_counter() - t0) * 1000)
        return (label, "", "", "", "", "", elapsed, str(e))


def cmd_dim(args) -> int:
    ms = parse_multiplier_list(args.spec)
    g = build_multi(ms, max_vertices=args.max_vertices)
    r = hausdorff_dim(g)
    p = args.precision
    print(
        f"beta={r.beta:.{p}f} dim={r.dim:.{p}f} vertices={g.n}"
        f" sccs={len(scc(g).components)} error_bound={r.error_bound:.1e}"
    )
    return 0


def cmd_scan(args) -> int:
    tasks = [
        (label, tuple(m.value for m in ms), args.max_vertices)
        for ms, label in _expand_scan_specs(args.specs)
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_scan_row, tasks))
    else:
        rows = [_scan_row(t) for t in tasks]
    p = args.precision

    def _render(row):
        label, n, s, beta, dim, eb, elapsed, err = row
        if err:
            return (label, n, s, beta, dim, eb, elapsed, err)
        return (label, n, s, f"{beta:.{p}f}", f"{dim:.{p}f}", f"{eb:.1e}", elapsed, err)

    if args.csv:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(_render(row))
    else:
        for row in rows:
            label, n, s, beta, dim, eb, elapsed, err = _render(row)
            if err:
                print(f"{label} error: {err}")
            else:
                print(
                    f"{label} vertices={n} sccs={s} beta={beta} dim={dim}"
                    f" error_bound={eb} elapsed_ms={elapsed}"
                )
    return 0


def cmd_export(args) -> int:
    g = _graph_spec(args.spec, args.max_vertices)
    print(to_dot(g) if args.dot else to_json(g))
    return 0


def cmd_blocks(args) -> int:
    ms = parse_multiplier_list(args.spec)
    count = brute_count_extendable if args.extendable else brute_count
    for n in range(1, args.n + 1):
        print(f"n={n} blocks={count(ms, n)}")
    return 0


def cmd_contain(args) -> int:
    g1 = _graph_spec(args.spec1, args.max_vertices)
    g2 = _graph_spec(args.spec2, args.max_vertices)
    res = is_subset(g1, g2)
    if res.holds:
        print("subset: yes")
    else:
        word = "".join(str(d) for d in res.witness)
        print(f"subset: no witness={word}")
    return 0


def cmd_iso(args) -> int:
    g1 = _graph_spec(args.spec1, args.max_vertices)
    g2 = _graph_spec(args.spec2, args.max_vertices)
    print("isomorphic: yes" if pointed_isomorphic(g1, g2) else "isomorphic: no")
    return 0


def cmd_family(args) -> int:
    text = args.family.strip()
    if len(text) < 3 or text[0] not in "LNP" or text[1] != ":":
        raise ParseError(f"expected a family like 'L:4', got {text!r}")
    fam = FamilyId(text[0], int(text[2:]))
    value = family_value(fam)
    g = build_multi([value], max_vertices=args.max_vertices)
    r = hausdorff_dim(g)
    p = args.precision
    if fam.kind == "P":
        print(f"{fam} value={value} dim={r.dim:.{p}f} vertices={g.n} (no closed form)")
        return 0
    exp = expect_L(fam.k) if fam.kind == "L" else expect_N(fam.k)
    dim_ok = abs(r.dim - exp.expected_dim) <= args.tol
    shape_ok = g.n == exp.expected_vertices and len(scc(g).components) == exp.expected_scc_count
    status = "ok" if dim_ok and shape_ok else "MISMATCH"
    print(
        f"{fam} value={value} dim={r.dim:.{p}f} expected={exp.expected_dim:.{p}f}"
        f" vertices={g.n}/{exp.expected_vertices} sccs={len(scc(g).components)}"
        f"/{exp.expected_scc_count} {status}"
    )
    return 0 if status == "ok" else 3


def cmd_check(args) -> int:
    results = run_suite(args.suite)
    for res in results:
        print(res.line())
    failed = sum(1 for r in results if not r.ok)
    print(f"{len(results) - failed} passed, {failed} failed")
    return 3 if failed else 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="cantor3", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--precision", type=int, default=6, choices=range(1, 13),
                        metavar="P", help="decimal places in reports (1..12, default 6)")
        sp.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES,
                        help="refuse constructions larger than this many product states")

    sp = sub.add_parser("dim", help="Hausdorff dimension of an intersection")
    sp.add_argument("spec", help="multiplier list, e.g. '7', '7,19', 'L:4', 't:201'")
    common(sp)
    sp.set_defaults(func=cmd_dim)

    sp = sub.add_parser("scan", help="batch dimensions, optionally as CSV")
    sp.add_argument("specs", nargs="+",
                    help="tuple specs or ranges of singles: '7,19' '4..40' 'L:1..9'")
    sp.add_argument("--csv", action="store_true", help="emit CSV with a header row")
    sp.add_argument("--jobs", type=int, default=1, help="parallel workers (output order fixed)")
    common(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("export", help="emit a presentation as DOT or JSON")
    sp.add_argument("spec", help="multiplier list, or Y for the two-vertex witness graph")
    fmt = sp.add_mutually_exclusive_group(required=True)
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_export)

    sp = sub.add_parser("blocks", help="brute-force block counts (oracle, no automaton)")
    sp.add_argument("spec", help="multiplier list")
    sp.add_argument("--n", type=int, default=8, help="count blocks of lengths 1..n")
    sp.add_argument("--extendable", action="store_true",
                    help="count only blocks that extend to arbitrarily long blocks")
    sp.set_defaults(func=cmd_blocks)

    sp = sub.add_parser("contain", help="path-set containment of two presentations")
    sp.add_argument("spec1")
    sp.add_argument("spec2")
    common(sp)
    sp.set_defaults(func=cmd_contain)

    sp = sub.add_parser("iso", help="pointed isomorphism of two presentations")
    sp.add_argument("spec1")
    sp.add_argument("spec2")
    common(sp)
    sp.set_defaults(func=cmd_iso)

    sp = sub.add_parser("family", help="compare a family member against its closed form")
    sp.add_argument("family", help="'L:4', 'N:3', or 'P:2'")
    sp.add_argument("--tol", type=float, default=1e-6, help="dimension tolerance")
    common(sp)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("check", help="run a named acceptance suite")
    sp.add_argument("suite", help=f"one of {', '.join(sorted(SUITES))}")
    sp.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except RefusalError as e:
        print(f"refused: {e}", file=sys.stderr)
        return 2
    except (ParseError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
