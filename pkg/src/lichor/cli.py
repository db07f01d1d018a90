"""Command-line interface.

Subcommands: solve, chi, classify, gen, verify, oracle.  Exit codes:
0 success, 2 the input graph is not line perfect, 3 an internal solver
invariant failed, 1 any other error (bad documents, undersized lists,
infeasible oracle instances, IO).
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from pathlib import Path

from .blocks import classify_block, chromatic_index, decompose_blocks
from .errors import (InvariantError, LichorError, ListTooSmallError,
                     NotLinePerfectError, OracleSizeError, ParseError)
from .formats import emit_instance, emit_report, parse_instance, parse_report
from .generate import GenParams, gen_line_perfect, gen_lists, identical_lists
from .multigraph import vertices_of
from .oracle import brute_force_list_color, verify_coloring
from .solver import Instance, solve

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_LINE_PERFECT = 2
EXIT_INVARIANT = 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _cmd_solve(args) -> int:
    inst = parse_instance(_read(args.instance))
    report = solve(inst, root=args.root)
    _write(args.report, emit_report(report))
    if args.figure:
        from .plotting import render_coloring

        render_coloring(inst.graph, report.coloring, args.figure)
    if not report.conformant:
        for line in report.diagnostics:
            print(f"non-conforming: {line}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


def _cmd_chi(args) -> int:
    inst = parse_instance(_read(args.instance))
    print(chromatic_index(inst.graph))
    return EXIT_OK


def _cmd_classify(args) -> int:
    inst = parse_instance(_read(args.instance))
    dec = decompose_blocks(inst.graph)
    for i, blk in enumerate(dec.blocks):
        cls = classify_block(inst.graph, blk)
        verts = sorted(vertices_of(inst.graph, blk))
        extra = ""
        if cls.kind.value == "bipartite":
            extra = f" sides {sorted(cls.side_x)} | {sorted(cls.side_y)}"
        elif cls.kind.value == "k11n":
            extra = f" apexes ({cls.apex_a}, {cls.apex_b}) centers {list(cls.centers)}"
        print(f"block {i}: {cls.kind.value} vertices {verts} "
              f"edges {sorted(blk)}{extra}")
    print(f"cut vertices: {sorted(dec.cut_vertices)}")
    return EXIT_OK


def _cmd_gen(args) -> int:
    seed = args.seed
    env = os.environ.get("LICHOR_SEED")
    if env is not None:
        seed = int(env)
    params = GenParams(seed=seed, block_count=args.blocks,
                       max_multiplicity=args.max_mult,
                       max_centers=args.max_centers)
    g = gen_line_perfect(params)
    chi = chromatic_index(g)
    if args.identical_lists:
        lists = identical_lists(g, chi)
    else:
        lists = gen_lists(g, chi, random.Random(seed ^ 0x5EED))
    _write(args.out, emit_instance(Instance(g, lists)))
    return EXIT_OK


def _cmd_verify(args) -> int:
    inst = parse_instance(_read(args.instance))
    report = parse_report(_read(args.report))
    if report.edge_count != inst.graph.edge_count:
        print(f"report colors {report.edge_count} edges, instance has "
              f"{inst.graph.edge_count}", file=sys.stderr)
        return EXIT_ERROR
    check = verify_coloring(inst.graph, frozenset(inst.graph.edge_ids),
                            inst.lists, report.coloring)
    if not check:
        print(f"invalid coloring: {check.reason}", file=sys.stderr)
        return EXIT_ERROR
    print("ok")
    return EXIT_OK


def _cmd_oracle(args) -> int:
    inst = parse_instance(_read(args.instance))
    result = brute_force_list_color(inst.graph, frozenset(inst.graph.edge_ids),
                                    inst.lists, cap=args.cap)
    if result is None:
        print("infeasible")
        return EXIT_ERROR
    colors = " ".join(str(result[e]) for e in inst.graph.edge_ids)
    print(colors)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lichor",
        description="List edge coloring of line perfect multigraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="color an instance from its lists")
    p.add_argument("instance", help="instance file, or - for stdin")
    p.add_argument("--report", default=None, help="write the report here")
    p.add_argument("--figure", default=None,
                   help="also render the colored graph to this image file")
    p.add_argument("--root", type=int, default=0,
                   help="index of the block to start the traversal from")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("chi", help="print the chromatic index")
    p.add_argument("instance")
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("classify", help="print the block decomposition")
    p.add_argument("instance")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("gen", help="generate a random line perfect instance")
    p.add_argument("--seed", type=int, default=0,
                   help="RNG seed (overridden by LICHOR_SEED)")
    p.add_argument("--blocks", type=int, default=1)
    p.add_argument("--max-mult", type=int, default=2)
    p.add_argument("--max-centers", type=int, default=3)
    p.add_argument("--identical-lists", action="store_true",
                   help="give every edge the same list {1..chi'}")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", help="check a report against its instance")
    p.add_argument("instance")
    p.add_argument("report")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="brute-force a small instance")
    p.add_argument("instance")
    p.add_argument("--cap", type=int, default=14,
                   help="refuse instances with more active edges than this")
    p.set_defaults(func=_cmd_oracle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotLinePerfectError as err:
        print(f"not line perfect: {err}", file=sys.stderr)
        return EXIT_NOT_LINE_PERFECT
    except InvariantError as err:
        print(f"invariant failure: {err}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ParseError, ListTooSmallError, OracleSizeError, LichorError,
            OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
