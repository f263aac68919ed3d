"""Command-line driver: check / scan / analyze / paths / draw / twin.

Exit codes: 0 success, 1 usage error, 2 resource limit, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import drawing
from .components import (
    classify_components,
    condensation_map,
    eac_vertex_sets,
    strongly_connected_components,
)
from .errors import CheckpointConfigError, DomainError, RangeError, ResourceLimitError
from .gfg import build_gfg, induced_subgraph
from .paths import (
    PathProblem,
    hamiltonian_cycles,
    hamiltonian_paths,
    longest_path_gfg,
)
from .primes import build_spf_table
from .report import build_report
from .search import has_eac, scan_range
from .twin import twin_search, verify_twin_is_eac

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RESOURCE = 2
EXIT_IO = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse, but usage failures raise instead of calling sys.exit(2)."""

    def error(self, message):
        raise _UsageError(message)


def _table_for(n: int):
    return build_spf_table(max(n, 16))


def _even_n(value: str) -> int:
    n = int(value)
    if n < 4 or n % 2:
        raise argparse.ArgumentTypeError(f"n must be an even integer >= 4, got {n}")
    return n


def cmd_check(args) -> int:
    table = _table_for(args.n)
    found, sets = has_eac(args.n, table)
    if found:
        print(f"EAC present, residual={len(sets.residual)}")
    else:
        print("no EAC, residual=0")
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.lo > args.hi:
        raise _UsageError(f"empty range: lo={args.lo} > hi={args.hi}")
    table = build_spf_table(max(args.hi, 16))
    hits, _ = scan_range(
        args.lo,
        args.hi,
        table,
        workers=args.workers,
        checkpoint_path=args.checkpoint,
        block_size=args.block,
        jsonl_path=args.out,
    )
    for n in hits:
        print(n)
    return EXIT_OK


def cmd_analyze(args) -> int:
    table = _table_for(args.n)
    report, g, sub, cens = build_report(
        args.n, table, seed=args.seed, budget=args.budget
    )
    d = strongly_connected_components(g)
    cmap = condensation_map(g, d, classify_components(g, d))

    out_dir = os.path.join(args.out, f"n={args.n}")
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, "report.json"), "w") as fh:
        fh.write(report.to_json())
    with open(os.path.join(out_dir, "gfg.dot"), "w") as fh:
        fh.write(drawing.export_dot(g, cmap))
    with open(os.path.join(out_dir, "census.txt"), "w") as fh:
        fh.write(cens + "\n")
    if sub is not None:
        with open(os.path.join(out_dir, "eac.dot"), "w") as fh:
            fh.write(drawing.export_dot(sub))
    print(report.to_json(), end="")
    return EXIT_OK


def _eac_subgraph(n: int, table):
    g = build_gfg(n, table)
    d = strongly_connected_components(g)
    sets = eac_vertex_sets(g, d, classify_components(g, d))
    if not sets:
        raise DomainError(f"F_{n} has no exceptional component")
    return induced_subgraph(g, sets[0])


def cmd_paths(args) -> int:
    table = _table_for(args.n)
    g = _eac_subgraph(args.n, table) if args.eac else build_gfg(args.n, table)
    if args.mode == "longest":
        result = longest_path_gfg(g)
    elif args.mode == "hamiltonian-paths":
        result = hamiltonian_paths(PathProblem.from_gfg(g))
    else:
        result = hamiltonian_cycles(PathProblem.from_gfg(g))
    print(f"length={result.length} count={result.count}")
    for witness in result.witnesses:
        print(" ".join(str(v) for v in witness))
    return EXIT_OK


def cmd_draw(args) -> int:
    table = _table_for(args.n)
    sub = _eac_subgraph(args.n, table)
    _, layout = drawing.crossing_upper_bound(
        sub, budget=args.budget, seed=args.seed
    )
    print(f"planar={drawing.is_planar(sub)} seed={args.seed}")
    print(layout.dump())
    return EXIT_OK


def cmd_twin(args) -> int:
    solutions = twin_search(args.prime_limit, args.max_n)
    table = build_spf_table(max((s.n for s in solutions), default=16))
    for sol in solutions:
        verified = verify_twin_is_eac(sol, table)
        print(f"{sol.a} {sol.b} {sol.x} {sol.y} {sol.n}" + ("" if verified else " UNVERIFIED"))
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="goldgraph", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test one n for an exceptional component")
    p.add_argument("n", type=_even_n)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scan", help="scan a range of even n for exceptional components")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.add_argument("--checkpoint", default=None)
    p.add_argument("--block", type=int, default=10_000)
    p.add_argument("--out", default=None, help="JSONL hit records")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("analyze", help="full parameter report for one n")
    p.add_argument("n", type=_even_n)
    p.add_argument("--out", default="reports")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--budget", type=int, default=drawing.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("paths", help="path enumeration and longest-path search")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument(
        "--hamiltonian-paths", dest="mode", action="store_const",
        const="hamiltonian-paths",
    )
    mode.add_argument(
        "--hamiltonian-cycles", dest="mode", action="store_const",
        const="hamiltonian-cycles",
    )
    mode.add_argument("--longest", dest="mode", action="store_const", const="longest")
    p.add_argument("--n", type=_even_n, required=True)
    p.add_argument("--eac", action="store_true", help="restrict to the exceptional component")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("draw", help="grid layout minimizing arc crossings")
    p.add_argument("--eac", action="store_true", required=True)
    p.add_argument("--n", type=_even_n, required=True)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--budget", type=int, default=drawing.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("twin", help="search for two-vertex exceptional components")
    p.add_argument("--prime-limit", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_twin)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, RangeError, CheckpointConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
