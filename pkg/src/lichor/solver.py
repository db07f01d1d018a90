"""End-to-end solve: decompose, order blocks, adjust lists at cut
vertices, dispatch each block to its solver, and assemble the report.

Blocks are colored in depth-first order over the block-cut tree, so
when a block is entered, at most one of its vertices (the entry cut
vertex) already has colored edges; the colors seen there are struck
from the lists of the block's edges at that vertex before dispatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Tuple

from . import clique
from .bipartite import KernelRounds, solve_bipartite
from .blocks import (BlockClass, BlockKind, block_chromatic_index, block_order,
                     classify_block, decompose_blocks)
from .clique import SolveStats, solve_k4, solve_k11n_apex, solve_k11n_center
from .errors import (ContractError, InputError, InvariantError,
                     ListTooSmallError, OracleSizeError)
from .multigraph import Multigraph, degree, vertices_of
from .oracle import brute_force_list_color, verify_coloring
from .transversal import ColorLists


@dataclass(frozen=True)
class Instance:
    """A multigraph plus one finite color list per edge."""

    graph: Multigraph
    lists: ColorLists

    def __post_init__(self):
        for e in self.graph.edge_ids:
            self.lists.of(e)  # raises InputError when a list is missing
        if len(self.lists) != self.graph.edge_count:
            extra = [e for e in self.lists.edges() if e >= self.graph.edge_count]
            raise InputError(f"lists keyed for nonexistent edges {extra}")


@dataclass(frozen=True)
class BlockTraceEntry:
    block: int
    kind: str
    entry_vertex: Optional[int]
    forbidden: int
    depth: int


@dataclass(frozen=True)
class SolveReport:
    """Coloring, per-block trace, and the conformance flag.

    The flag is set only when every block was colored by its intended
    solver with every invariant check passing and the final coloring
    verified; a run that had to fall back to brute force on some block
    still reports a coloring but is marked non-conforming.
    """

    coloring: Mapping[int, int]
    trace: Tuple[BlockTraceEntry, ...]
    conformant: bool
    edge_count: int
    diagnostics: Tuple[str, ...] = ()


def forbidden_at_cut(partial: Mapping[int, int], g: Multigraph, v: int,
                     block: frozenset[int]) -> frozenset[int]:
    """Colors already used on the edges at v outside the block."""
    out = set()
    for e in g.edges_at(v):
        if e in block:
            if e in partial:
                raise ContractError(f"edge {e} inside the block is already colored")
            continue
        if e in partial:
            out.add(partial[e])
    return frozenset(out)


def traversal_order(dec, root: int = 0):
    """Block tasks for the whole graph: the root's component first, then
    every remaining component from its smallest-index block."""
    ordered: list = []
    seen: set[int] = set()
    while len(seen) < len(dec.blocks):
        if not ordered:
            component_root = root
        else:
            component_root = min(i for i in range(len(dec.blocks)) if i not in seen)
        tasks = block_order(dec, component_root)
        ordered.extend(tasks)
        seen.update(t.block_index for t in tasks)
    return tuple(ordered)


def solve(inst: Instance, root: int = 0) -> SolveReport:
    """Produce a proper list edge coloring of a line perfect instance.

    Requires every list to have at least chi' colors.  Lists are trimmed
    per block to the exact sizes the block solver needs; at a cut vertex
    the colors of previously colored incident edges are removed first,
    which the star bound chi' >= d(v) always leaves enough room for.
    """
    g = inst.graph
    dec = decompose_blocks(g)
    classes = [classify_block(g, blk) for blk in dec.blocks]
    chi = max((degree(g, v) for v in range(g.vertex_count)), default=0)
    for blk, cls in zip(dec.blocks, classes):
        chi = max(chi, block_chromatic_index(g, blk, cls))
    for e in g.edge_ids:
        if len(inst.lists.of(e)) < chi:
            raise ListTooSmallError(e, len(inst.lists.of(e)), chi)

    coloring: Dict[int, int] = {}
    trace: list[BlockTraceEntry] = []
    diagnostics: list[str] = []
    conformant = True

    for task in traversal_order(dec, root if dec.blocks else 0):
        blk = task.block
        cls = classes[task.block_index]
        touched = [v for v in sorted(vertices_of(g, blk))
                   if any(e in coloring for e in g.edges_at(v) if e not in blk)]
        clique.monitor.check(
            "single-entry",
            touched == ([] if task.entry_vertex is None else [task.entry_vertex]),
            f"block {task.block_index}: colored neighbors at {touched}, "
            f"entry {task.entry_vertex}")
        forbidden: frozenset[int] = frozenset()
        block_lists = {e: inst.lists.of(e) for e in blk}
        if task.entry_vertex is not None:
            forbidden = forbidden_at_cut(coloring, g, task.entry_vertex, blk)
            for e in g.edges_at(task.entry_vertex, blk):
                block_lists[e] = block_lists[e] - forbidden
        lists = ColorLists(block_lists)

        try:
            part, depth = _dispatch(g, blk, cls, task.entry_vertex, lists)
        except InvariantError as err:
            conformant = False
            diagnostics.append(f"block {task.block_index}: {err}")
            part = _oracle_fallback(g, blk, lists, err)
            depth = -1
        coloring.update(part)
        trace.append(BlockTraceEntry(task.block_index, cls.kind.value,
                                     task.entry_vertex, len(forbidden), depth))

    check = verify_coloring(g, frozenset(g.edge_ids), inst.lists, coloring)
    if not check:
        conformant = False
        diagnostics.append(f"final verification: {check.reason}")
    return SolveReport(coloring=dict(coloring), trace=tuple(trace),
                       conformant=conformant, edge_count=g.edge_count,
                       diagnostics=tuple(diagnostics))


def _dispatch(g: Multigraph, blk: frozenset[int], cls: BlockClass,
              entry: Optional[int], lists: ColorLists) -> Tuple[Dict[int, int], int]:
    if cls.kind == BlockKind.BIPARTITE:
        v = entry if entry is not None else min(vertices_of(g, blk))
        rounds = KernelRounds()
        part = solve_bipartite(g, blk, v, lists, stats=rounds)
        return part, rounds.rounds
    if cls.kind == BlockKind.FOUR_VERTEX:
        v = entry if entry is not None else min(vertices_of(g, blk))
        stats = SolveStats()
        part = solve_k4(g, blk, v, lists, stats=stats)
        return part, stats.depth
    stats = SolveStats()
    if entry is None or entry == cls.apex_a:
        part = solve_k11n_apex(g, blk, cls.apex_a, cls.apex_b, lists, stats=stats)
    elif entry == cls.apex_b:
        part = solve_k11n_apex(g, blk, cls.apex_b, cls.apex_a, lists, stats=stats)
    else:
        part = solve_k11n_center(g, blk, cls.apex_a, cls.apex_b, entry, lists,
                                 stats=stats)
    return part, stats.depth


def _oracle_fallback(g: Multigraph, blk: frozenset[int], lists: ColorLists,
                     err: InvariantError) -> Dict[int, int]:
    """Last resort after an invariant failure: brute-force the block."""
    try:
        part = brute_force_list_color(g, blk, lists)
    except OracleSizeError:
        raise err
    if part is None:
        raise err
    return part
