"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage or domain error.
Data goes to stdout (or ``--out``); logs go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .bounds import bound_row, emit_figure1_csv, rows_to_csv, rows_to_table
from .hypergraph import (
    build_hypergraph,
    count_nonmono_hyperedges,
    expected_hyperedge_count,
    hypergraph_to_json,
    hyperedges_are_cells,
)
from .labeling import (
    Labeling,
    NotSpernerError,
    color_histogram,
    count_cells_with_at_least_j_colors,
    count_nonmono,
    first_choice_labeling,
    sperner_violations,
)
from .lattice import DomainError, check_params
from .search import BudgetExceeded, SearchConfig, check_certificate_json, conjecture_probe, minimize
from .triangulation import (
    GraphVariant,
    check_equivalences,
    triangulate,
    triangulate_by_cliques,
    triangulate_by_permutations,
    triangulation_to_json,
    verify_triangulation,
)

log = logging.getLogger("sperner_lattice")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
        log.info("wrote %s", out)
    else:
        sys.stdout.write(text)


def _load_labeling(path: str | None, k: int, q: int) -> Labeling:
    if path is None:
        return first_choice_labeling(k, q)
    lab = Labeling.from_json(Path(path).read_text())
    if (lab.k, lab.q) != (k, q):
        raise DomainError(f"labeling file is for k={lab.k}, q={lab.q}")
    return lab


def cmd_enumerate(args) -> int:
    builders = {
        "permutations": triangulate_by_permutations,
        "monotone": lambda k, q: triangulate_by_cliques(k, q, GraphVariant.MONOTONE),
        "lattice": lambda k, q: triangulate_by_cliques(k, q, GraphVariant.LATTICE),
    }
    t = builders[args.construction](args.k, args.q)
    _emit(triangulation_to_json(t), args.out)
    return 0


def cmd_verify(args) -> int:
    report = verify_triangulation(triangulate(args.k, args.q))
    lines = report.lines()
    checks = list(report.checks) + check_equivalences(args.k, args.q)
    lines += [
        f"[{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}" for c in checks[len(report.checks):]
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if all(c.passed for c in checks) else 1


def cmd_label(args) -> int:
    lab = _load_labeling(args.labeling, args.k, args.q)
    bad = sperner_violations(lab)
    if bad:
        log.error("labeling is not Sperner at vertex ids %s", bad[:10])
        return 1
    t = triangulate(args.k, args.q)
    out = {
        "k": args.k,
        "q": args.q,
        "labeling": args.labeling or "first_choice",
        "cells": len(t.cells),
        "nonmonochromatic": count_nonmono(t, lab),
        "histogram": color_histogram(t, lab),
    }
    if args.j is not None:
        out["j"] = args.j
        out["at_least_j"] = count_cells_with_at_least_j_colors(t, lab, args.j)
    _emit(json.dumps(out, indent=2) + "\n", args.out)
    return 0


def cmd_hypergraph(args) -> int:
    h = build_hypergraph(args.k, args.q)
    t = triangulate(args.k, args.q)
    embedded = hyperedges_are_cells(h, t)
    if args.out:
        _emit(hypergraph_to_json(args.k, args.q, h), args.out)
    lab = _load_labeling(args.labeling, args.k, args.q)
    summary = {
        "k": args.k,
        "q": args.q,
        "hyperedges": len(h),
        "expected": expected_hyperedge_count(args.k, args.q),
        "embedded_in_triangulation": embedded,
        "nonmonochromatic_hyperedges": count_nonmono_hyperedges(h, lab),
    }
    sys.stdout.write(json.dumps(summary, indent=2) + "\n")
    return 0 if embedded and len(h) == summary["expected"] else 1


def cmd_minimize(args) -> int:
    config = SearchConfig(budget=args.budget, threads=args.threads)
    result = minimize(args.k, args.q, args.method, config)
    probe = conjecture_probe(result)
    log.info(
        "m=%d (bounds %d..%d, meets upper: %s) nodes=%d time=%.3fs",
        result.m, probe["lower"], probe["upper"], probe["meets_upper"],
        result.nodes_explored, result.wall_time,
    )
    _emit(result.certificate_json(), args.out)
    return 0


def cmd_check_cert(args) -> int:
    ok = check_certificate_json(Path(args.certificate).read_text())
    print("valid" if ok else "INVALID")
    return 0 if ok else 1


def cmd_bounds(args) -> int:
    qs = range(1, args.q + 1)
    exact = None
    if args.exact:
        config = SearchConfig(budget=args.budget, threads=args.threads)
        exact = {q: minimize(args.k, q, args.method, config).m for q in qs}
    if args.format == "figure1":
        text = emit_figure1_csv(args.k, qs, exact)
    else:
        rows = [bound_row(args.k, q, None if exact is None else exact[q]) for q in qs]
        text = rows_to_csv(rows) if args.format == "csv" else rows_to_table(rows)
    _emit(text, args.out)
    return 0


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sperner-lattice", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, kq=True):
        p = sub.add_parser(name, help=help)
        if kq:
            p.add_argument("--k", type=int, required=True)
            p.add_argument("--q", type=int, required=True)
        p.add_argument("--out", help="write data here instead of stdout")
        p.set_defaults(func=func)
        return p

    p = add("enumerate", cmd_enumerate, "vertices and cells as JSON")
    p.add_argument("--construction", choices=["permutations", "monotone", "lattice"], default="lattice")

    add("verify", cmd_verify, "triangulation axioms and construction equivalence")

    p = add("label", cmd_label, "count non-monochromatic cells of a labeling")
    p.add_argument("--labeling", help="labeling JSON file (default: first-choice)")
    p.add_argument("--j", type=int, help="also count cells with at least j colours")

    p = add("hypergraph", cmd_hypergraph, "build and check the simplex-lattice hypergraph")
    p.add_argument("--labeling", help="labeling JSON file (default: first-choice)")

    p = add("minimize", cmd_minimize, "exact minimum with certificate")
    p.add_argument("--method", choices=["brute", "bb"], default="bb")
    p.add_argument("--budget", type=_positive, default=10**8)
    p.add_argument("--threads", type=_positive, default=1)

    p = add("check-cert", cmd_check_cert, "re-verify a certificate file", kq=False)
    p.add_argument("certificate")

    p = add("bounds", cmd_bounds, "bound table for q = 1..Q")
    p.add_argument("--format", choices=["table", "csv", "figure1"], default="table")
    p.add_argument("--exact", action="store_true", help="also solve each instance exactly")
    p.add_argument("--method", choices=["brute", "bb"], default="bb")
    p.add_argument("--budget", type=_positive, default=10**8)
    p.add_argument("--threads", type=_positive, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        if hasattr(args, "k") and args.command != "bounds":
            check_params(args.k, args.q)
        return args.func(args)
    except NotSpernerError as exc:
        log.error("%s", exc)
        return 1
    except (ValueError, KeyError, OSError, BudgetExceeded, OverflowError) as exc:
        log.error("%s", exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
