"""Command-line surface: every pipeline stage behind one executable.

Machine-readable lines are stable:  ``jump <p>/<q>``,
``char <exponent> <multiplicity>``, ``mu <list>``, ``tr <exp> <coeff>``.
Exit codes: 0 success, 1 usage error, 2 validation/domain error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import FiberTypeId, catalog_ids, lookup
from .errors import FibertraceError
from .fiber import FiberGraph, h1_character, parse_graph, total_trace
from .jumps import JumpOptions, compute_jumps
from .resolution import Singularity, is_stable, resolve
from .singtrace import trace_polynomial


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    p = _Parser(prog="fibertrace", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def add_graph_source(sp):
        sp.add_argument("--graph", metavar="PATH", help="graph file to read")
        sp.add_argument("--catalog", metavar="ID", help="built-in fiber type, e.g. kodaira:IV")

    sp = sub.add_parser("resolve", help="resolution data of a singularity (m1, m2, n)")
    sp.add_argument("m1", type=int)
    sp.add_argument("m2", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--machine", action="store_true")

    sp = sub.add_parser("trace-sing", help="trace polynomial of a singularity (m1, m2, n)")
    sp.add_argument("m1", type=int)
    sp.add_argument("m2", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--machine", action="store_true")

    sp = sub.add_parser("trace-fiber", help="total trace of a fiber graph at degree n")
    add_graph_source(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--machine", action="store_true")

    sp = sub.add_parser("character", help="H^1 character multiset at degree n")
    add_graph_source(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--machine", action="store_true")

    sp = sub.add_parser("jumps", help="filtration jumps of a fiber graph")
    add_graph_source(sp)
    sp.add_argument("--n-min", type=int, default=1000, dest="n_min")
    sp.add_argument("--sweeps", type=int, default=3)
    sp.add_argument("--machine", action="store_true")

    sub.add_parser("catalog-list", help="list built-in fiber types")
    return p


def _load_graph(parser: _Parser, args) -> FiberGraph:
    if bool(args.graph) == bool(args.catalog):
        parser.error("supply exactly one input source: --graph PATH or --catalog ID")
    if args.graph:
        return parse_graph(Path(args.graph).read_text(encoding="utf-8"))
    return lookup(FiberTypeId.parse(args.catalog))


def _print_trace(trace, machine: bool) -> None:
    if not machine:
        print(f"Tr = {trace}")
    for e, c in trace.items():
        print(f"tr {e} {c}")


def _run(parser: _Parser, args) -> int:
    if args.verb == "resolve":
        res = resolve(Singularity(args.m1, args.m2, args.n))
        if args.machine:
            print(f"mu {' '.join(map(str, res.mu))}")
        else:
            print(f"singularity ({args.m1},{args.m2},{args.n})")
            print(f"r={res.r}")
            print(f"b=[{','.join(map(str, res.b))}]")
            print(f"mu=[{','.join(map(str, res.mu))}]")
            print(f"alpha1={res.alpha1}")
            print(f"alpha2={res.alpha2}")
            print(f"stable={'yes' if is_stable(res) else 'no'}")
    elif args.verb == "trace-sing":
        res = resolve(Singularity(args.m1, args.m2, args.n))
        if not args.machine:
            print(f"singularity ({args.m1},{args.m2},{args.n})")
        _print_trace(trace_polynomial(res), args.machine)
    elif args.verb == "trace-fiber":
        g = _load_graph(parser, args)
        trace = total_trace(g, args.n)
        if not args.machine:
            print(f"graph: {len(g.vertices)} vertices, {len(g.edges)} edges")
            print(f"n={args.n}")
        _print_trace(trace, args.machine)
    elif args.verb == "character":
        g = _load_graph(parser, args)
        char = h1_character(g, args.n)
        if not args.machine:
            print(f"n={args.n}")
            print(f"genus={char.total}")
        for e, mult in char.exponents:
            print(f"char {e} {mult}")
    elif args.verb == "jumps":
        g = _load_graph(parser, args)
        js = compute_jumps(g, JumpOptions(n_min=args.n_min, sweeps=args.sweeps))
        if not args.machine:
            print(f"n_tilde={js.n_tilde}")
            print(f"witnesses={','.join(map(str, js.witnesses))}")
        for j in js.jumps:
            print(f"jump {j.numerator}/{j.denominator}")
    elif args.verb == "catalog-list":
        for cid in catalog_ids():
            print(cid)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(parser, args)
    except SystemExit as exc:  # argparse usage errors and --help
        return exc.code if isinstance(exc.code, int) else 1
    except FibertraceError as exc:
        print(f"fibertrace: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"fibertrace: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
