"""Seeded random generators for graphs, lists, and transversal instances.

Graphs come out line perfect by construction: a tree of blocks glued at
single shared vertices, each block bipartite, on four vertices, or a
triangle fan.  Everything is deterministic given the seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, Tuple

from .errors import InputError
from .multigraph import Multigraph
from .transversal import ColorLists


@dataclass(frozen=True)
class GenParams:
    seed: int
    block_count: int = 1
    max_multiplicity: int = 2
    max_centers: int = 3
    kind_weights: Tuple[float, float, float] = (1.0, 1.0, 1.0)  # bipartite, four-vertex, fan

    def __post_init__(self):
        if self.block_count <= 0 or self.max_multiplicity <= 0 or self.max_centers <= 0:
            raise InputError("all generator counts must be positive")
        if min(self.kind_weights) < 0 or sum(self.kind_weights) <= 0:
            raise InputError("kind weights must be non-negative and not all zero")


def _bipartite_block(rng: random.Random, max_mult: int) -> tuple[int, list[tuple[int, int]]]:
    """A bridge, a fat multi-edge, or a thickened even cycle; biconnected
    (or a single bridge), so it survives decomposition as one block."""
    style = rng.choice(["bridge", "multi", "cycle", "complete"])
    if style == "bridge":
        return 2, [(0, 1)]
    if style == "multi":
        m = rng.randint(2, max(2, max_mult))
        return 2, [(0, 1)] * m
    if style == "cycle":
        half = rng.choice([2, 3])
        ring = []
        for i in range(2 * half):
            ring.append((i, (i + 1) % (2 * half)))
        edges = []
        for u, v in ring:
            for _ in range(rng.randint(1, max_mult)):
                edges.append((u, v))
        return 2 * half, edges
    nx, ny = 2, rng.choice([2, 3])
    edges = []
    for i in range(nx):
        for j in range(ny):
            for _ in range(rng.randint(1, max_mult)):
                edges.append((i, nx + j))
    return nx + ny, edges


def _four_vertex_block(rng: random.Random, max_mult: int) -> tuple[int, list[tuple[int, int]]]:
    """K4, or K4 minus one edge, with random multiplicities."""
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    if rng.random() < 0.3:
        pairs.remove(rng.choice(pairs))
    edges = []
    for u, v in pairs:
        for _ in range(rng.randint(1, max_mult)):
            edges.append((u, v))
    return 4, edges


def _fan_block(rng: random.Random, max_mult: int,
               max_centers: int) -> tuple[int, list[tuple[int, int]]]:
    """Triangle fan with at least three centers (fewer is a four-vertex block)."""
    n = rng.randint(3, max(3, max_centers))
    edges = []
    for _ in range(rng.randint(1, max_mult)):
        edges.append((0, 1))
    for i in range(n):
        c = 2 + i
        for _ in range(rng.randint(1, max_mult)):
            edges.append((0, c))
        for _ in range(rng.randint(1, max_mult)):
            edges.append((1, c))
    return n + 2, edges


def gen_line_perfect(params: GenParams) -> Multigraph:
    """Random line perfect multigraph: a tree of blocks sharing cut vertices."""
    rng = random.Random(params.seed)
    kinds = ["bipartite", "four", "fan"]
    vertex_count = 0
    edges: list[tuple[int, int]] = []
    for b in range(params.block_count):
        kind = rng.choices(kinds, weights=params.kind_weights)[0]
        if kind == "bipartite":
            local_n, local_edges = _bipartite_block(rng, params.max_multiplicity)
        elif kind == "four":
            local_n, local_edges = _four_vertex_block(rng, params.max_multiplicity)
        else:
            local_n, local_edges = _fan_block(rng, params.max_multiplicity,
                                              params.max_centers)
        mapping: Dict[int, int] = {}
        if b > 0:
            glue_local = rng.randrange(local_n)
            glue_global = rng.randrange(vertex_count)
            mapping[glue_local] = glue_global
        for local in range(local_n):
            if local not in mapping:
                mapping[local] = vertex_count
                vertex_count += 1
        for u, v in local_edges:
            edges.append((mapping[u], mapping[v]))
    return Multigraph(vertex_count, edges)


def gen_lists(g: Multigraph, size: int, rng: random.Random,
              universe_factor: int = 2) -> ColorLists:
    """Random per-edge lists of the given size from a universe of
    universe_factor * size colors (colors start at 1)."""
    universe = list(range(1, max(1, universe_factor * size) + 1))
    return ColorLists({
        e: rng.sample(universe, size) for e in g.edge_ids
    })


def identical_lists(g: Multigraph, size: int) -> ColorLists:
    """The adversarial case A_e = {1..size} for every edge, which turns
    list coloring into plain edge coloring."""
    block = frozenset(range(1, size + 1))
    return ColorLists({e: block for e in g.edge_ids})


def gen_small_multigraph(rng: random.Random, max_vertices: int = 6,
                         max_edges: int = 10) -> Multigraph:
    """Arbitrary small multigraph (not necessarily line perfect)."""
    n = rng.randint(2, max_vertices)
    m = rng.randint(1, max_edges)
    edges = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n)
        while v == u:
            v = rng.randrange(n)
        edges.append((u, v))
    return Multigraph(n, edges)


def gen_transversal_instance(rng: random.Random, max_vertices: int = 6,
                             max_edges: int = 10) -> tuple[Multigraph, ColorLists]:
    """Random instance with no reducing sets.

    Every color is placed on a set of pairwise adjacent edges (a subset
    of one vertex star), so non-adjacent edges never share a color.
    Some instances satisfy Hall's condition and some do not: a star may
    receive fewer colors than it has edges.
    """
    g = gen_small_multigraph(rng, max_vertices, max_edges)
    lists: Dict[int, set[int]] = {e: set() for e in g.edge_ids}
    target = {e: rng.randint(1, 3) for e in g.edge_ids}
    color = 0
    guard = 0
    while any(len(lists[e]) < target[e] for e in g.edge_ids) and guard < 400:
        guard += 1
        needy = [e for e in g.edge_ids if len(lists[e]) < target[e]]
        e = rng.choice(needy)
        u, v = g.endpoints(e)
        w = rng.choice([u, v])
        star = list(g.edges_at(w))
        group = [q for q in star if rng.random() < 0.7 or q == e]
        color += 1
        for q in group:
            lists[q].add(color)
    # Occasionally starve a star to produce Hall violations.
    if rng.random() < 0.4:
        w = rng.randrange(g.vertex_count)
        star = list(g.edges_at(w))
        if len(star) >= 2:
            shared = color + 1
            keep = rng.randint(1, max(1, len(star) - 1))
            for q in star:
                lists[q] = set(rng.sample(range(shared, shared + keep),
                                          min(keep, rng.randint(1, keep))))
    return g, ColorLists(lists)
