"""Command-line surface: family, power, spectrum, stats, dot, verify.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
Graphs travel between commands in the edge-list format, so the subcommands
compose in pipelines, e.g.::

    symgraph family path 3 | symgraph power -k 2 | symgraph stats
"""

from __future__ import annotations

import argparse
import sys

from .combinatorics import CountLimitError
from .fileio import (
    GraphFormatError,
    parse_graph,
    write_dot,
    write_graph,
    write_stats_json,
)
from .graphs import FAMILY_NAMES, WeightedGraph, adjacency_matrix, family
from .power import METHODS, sym_power
from .spectra import JacobiConvergenceError, eigenvalues_symmetric
from .verify import SUITES, run_suites


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _load_graph(path: str) -> WeightedGraph:
    return parse_graph(_read_input(path))


def _cmd_family(args: argparse.Namespace) -> int:
    graph = family(args.name, *args.params)
    _write_output(write_graph(graph), args.output)
    return 0


def _cmd_power(args: argparse.Namespace) -> int:
    graph = _load_graph(args.input)
    power = sym_power(graph, args.k, method=args.method, order=args.order)
    if args.exact:
        if not power.exact:
            raise ValueError("--exact requires a graph with rational weights")
        lines = [str(power.dim)]
        for i in range(power.dim):
            for j in range(i, power.dim):
                w = power.entry_exact(i, j)
                if w:
                    lines.append(f"{i + 1} {j + 1} {w}")
        _write_output("\n".join(lines) + "\n", args.output)
    else:
        _write_output(write_graph(power.to_graph()), args.output)
    return 0


def _cmd_spectrum(args: argparse.Namespace) -> int:
    graph = _load_graph(args.input)
    spectrum = eigenvalues_symmetric(adjacency_matrix(graph), tol=args.tol)
    sys.stdout.write("".join(f"{v!r}\n" for v in spectrum.values))
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    graph = _load_graph(args.input)
    sys.stdout.write(write_stats_json(graph, wiener=args.wiener, spectrum=args.spectrum))
    return 0


def _cmd_dot(args: argparse.Namespace) -> int:
    graph = _load_graph(args.input)
    sys.stdout.write(write_dot(graph))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_suites(
        "all" if args.suite == "all" else [args.suite],
        nmax=args.nmax,
        kmax=args.kmax,
        seed=args.seed,
    )
    failed = False
    for result in results:
        for line in result.report:
            print(line)
        for failure in result.failures:
            print(failure.line())
        status = "ok" if result.ok else "FAILED"
        print(f"{status} {result.name}: {result.checks} checks, {len(result.failures)} failures")
        failed = failed or not result.ok
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symgraph",
        description="Symmetric tensor powers of weighted graphs, with built-in verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_family = sub.add_parser("family", help="emit a named family graph")
    p_family.add_argument("name", choices=FAMILY_NAMES)
    p_family.add_argument("params", nargs="*", type=int, help="family parameters")
    p_family.add_argument("-o", "--output", default=None, metavar="FILE")
    p_family.set_defaults(func=_cmd_family)

    p_power = sub.add_parser("power", help="emit the k-th symmetric tensor power")
    p_power.add_argument("-k", type=int, required=True, help="power exponent (>= 1)")
    p_power.add_argument("--method", choices=METHODS, default="permanent")
    p_power.add_argument("--order", choices=("paper", "lex"), default="paper")
    p_power.add_argument(
        "--exact",
        action="store_true",
        help="emit q*sqrt(r) weight tokens (rational input graphs only)",
    )
    p_power.add_argument("-o", "--output", default=None, metavar="FILE")
    p_power.add_argument("input", nargs="?", default="-", metavar="INPUT")
    p_power.set_defaults(func=_cmd_power)

    p_spectrum = sub.add_parser("spectrum", help="eigenvalues, one per line, sorted")
    p_spectrum.add_argument("--tol", type=float, default=1e-8)
    p_spectrum.add_argument("input", nargs="?", default="-", metavar="INPUT")
    p_spectrum.set_defaults(func=_cmd_spectrum)

    p_stats = sub.add_parser("stats", help="summary statistics as JSON")
    p_stats.add_argument("--wiener", action="store_true")
    p_stats.add_argument("--spectrum", action="store_true")
    p_stats.add_argument("input", nargs="?", default="-", metavar="INPUT")
    p_stats.set_defaults(func=_cmd_stats)

    p_dot = sub.add_parser("dot", help="DOT rendering of a graph file")
    p_dot.add_argument("input", nargs="?", default="-", metavar="INPUT")
    p_dot.set_defaults(func=_cmd_dot)

    p_verify = sub.add_parser("verify", help="run the theorem suites")
    p_verify.add_argument("--suite", choices=SUITES + ("all",), required=True)
    p_verify.add_argument("--nmax", type=int, default=None)
    p_verify.add_argument("--kmax", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "power" and args.k < 1:
        parser.error(f"power exponent must be >= 1, got {args.k}")
    if getattr(args, "nmax", None) is not None and args.nmax < 1:
        parser.error("--nmax must be >= 1")
    if getattr(args, "kmax", None) is not None and args.kmax < 1:
        parser.error("--kmax must be >= 1")
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphFormatError, CountLimitError, JacobiConvergenceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
