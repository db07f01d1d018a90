"""Biconnected decomposition, block classification, and the chromatic index.

A multigraph in the solvable class has every block (biconnected
component) of one of three shapes: bipartite, a graph on four vertices,
or a double-apex triangle fan K_{1,1,n} (two mutually adjacent apexes
a, b plus an independent set of centers, each center adjacent to both
apexes).  The chromatic index of such a graph is the size of the
largest family of pairwise adjacent edges: the maximum over vertex
degrees and triangle edge counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import InputError, NotLinePerfectError
from .multigraph import Multigraph, degree, edges_between, triangle_edges, vertices_of


class BlockKind(Enum):
    BIPARTITE = "bipartite"
    FOUR_VERTEX = "four-vertex"
    K11N = "k11n"


@dataclass(frozen=True)
class BlockClass:
    """Shape of a block, with the data each solver needs.

    BIPARTITE carries the bipartition (side_x, side_y).
    FOUR_VERTEX carries nothing extra (any multigraph on <= 4 vertices).
    K11N carries the apex pair and the ordered centers.
    """

    kind: BlockKind
    side_x: frozenset[int] = frozenset()
    side_y: frozenset[int] = frozenset()
    apex_a: int = -1
    apex_b: int = -1
    centers: tuple[int, ...] = ()


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cut vertices, and the block-cut tree of a multigraph.

    blocks partition the edge set; two blocks share at most one vertex
    and any shared vertex is a cut vertex.  tree_block_cuts[i] lists the
    cut vertices lying in block i, which is exactly the bipartite
    block-cut tree adjacency.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    tree_block_cuts: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class BlockTask:
    """One block in coloring order, with its already-colored entry vertex."""

    block_index: int
    block: frozenset[int]
    entry_vertex: Optional[int]


def decompose_blocks(g: Multigraph) -> BlockDecomposition:
    """Biconnected components via the classic DFS low-link edge stack.

    Every bridge is its own block.  Parallel edges are kept together:
    the stack tracks edge ids, and only the tree edge itself (by id) is
    skipped when scanning back edges, so a doubled edge forms one
    2-connected block.  Disconnected graphs are handled; blocks of
    different components never interact.
    """
    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    blocks: list[frozenset[int]] = []
    stack: list[int] = []  # edge ids
    timer = 0

    # Iterative DFS; recursion depth would be fine at desk scale but the
    # generators are free to produce long paths.
    for root in range(n):
        if disc[root] != -1 or not g.edges_at(root):
            continue
        work = [(root, -1, iter(g.edges_at(root)))]
        disc[root] = low[root] = timer
        timer += 1
        while work:
            v, parent_edge, it = work[-1]
            advanced = False
            for e in it:
                if e == parent_edge:
                    continue
                w = g.other_end(e, v)
                if disc[w] == -1:
                    stack.append(e)
                    disc[w] = low[w] = timer
                    timer += 1
                    work.append((w, e, iter(g.edges_at(w))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    stack.append(e)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    # parent_edge is the tree edge u -> v; everything
                    # above it on the stack is one biconnected component.
                    members = []
                    while True:
                        e = stack.pop()
                        members.append(e)
                        if e == parent_edge:
                            break
                    blocks.append(frozenset(members))

    # Deterministic block order: by smallest contained edge id.
    blocks.sort(key=min)
    vertex_blocks: dict[int, list[int]] = {}
    for i, blk in enumerate(blocks):
        for v in vertices_of(g, blk):
            vertex_blocks.setdefault(v, []).append(i)
    cuts = frozenset(v for v, bs in vertex_blocks.items() if len(bs) > 1)
    tree = tuple(frozenset(v for v in vertices_of(g, blk) if v in cuts)
                 for blk in blocks)
    return BlockDecomposition(tuple(blocks), cuts, tree)


def block_order(dec: BlockDecomposition, root: int = 0) -> tuple[BlockTask, ...]:
    """Depth-first order over the block-cut tree starting at a root block.

    The root task has no entry vertex; every other reachable block is
    entered through exactly one cut vertex, the one it shares with the
    path back to the root.  Only blocks in the root's component are
    returned.
    """
    if not dec.blocks:
        if root == 0:
            return ()
        raise InputError("root block index out of range for empty decomposition")
    if not (0 <= root < len(dec.blocks)):
        raise InputError(f"root block index {root} out of range")

    cut_blocks: dict[int, list[int]] = {}
    for i, cuts in enumerate(dec.tree_block_cuts):
        for v in cuts:
            cut_blocks.setdefault(v, []).append(i)

    tasks: list[BlockTask] = []
    seen_blocks = {root}
    stack: list[tuple[int, Optional[int]]] = [(root, None)]
    while stack:
        b, entry = stack.pop()
        tasks.append(BlockTask(b, dec.blocks[b], entry))
        # Reverse-sorted push so neighbors come off the stack ascending.
        for v in sorted(dec.tree_block_cuts[b], reverse=True):
            for nb in sorted(cut_blocks[v], reverse=True):
                if nb not in seen_blocks:
                    seen_blocks.add(nb)
                    stack.append((nb, v))
    return tuple(tasks)


def bipartition(g: Multigraph, block: frozenset[int]) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """2-color the block's vertices, or None if an odd closed walk exists."""
    verts = vertices_of(g, block)
    side: dict[int, int] = {}
    for start in sorted(verts):
        if start in side:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for e in g.edges_at(v, block):
                w = g.other_end(e, v)
                if w not in side:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    x = frozenset(v for v in verts if side[v] == 0)
    return x, verts - x


def classify_block(g: Multigraph, block: frozenset[int]) -> BlockClass:
    """Classify one block; priority bipartite > four-vertex > K_{1,1,n}.

    Four-vertex blocks cover every multigraph on exactly four vertices
    (including the n=2 triangle fan), so fan classification only ever
    applies to n >= 3.  Apexes are found by scanning vertex pairs in
    ascending order and taking the first adjacent pair whose removal
    leaves an independent set touching both apexes.
    """
    if not block:
        raise InputError("cannot classify an empty block")
    bip = bipartition(g, block)
    if bip is not None:
        return BlockClass(BlockKind.BIPARTITE, side_x=bip[0], side_y=bip[1])
    verts = sorted(vertices_of(g, block))
    if len(verts) <= 4:
        return BlockClass(BlockKind.FOUR_VERTEX)
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            if not edges_between(g, a, b, block):
                continue
            centers = [v for v in verts if v != a and v != b]
            ok = all(edges_between(g, a, v, block) and edges_between(g, b, v, block)
                     for v in centers)
            if ok and _independent(g, block, centers):
                return BlockClass(BlockKind.K11N, apex_a=a, apex_b=b,
                                  centers=tuple(centers))
    raise NotLinePerfectError(
        f"block on vertices {verts} is neither bipartite, nor on four vertices, "
        "nor a double-apex triangle fan",
        block_vertices=verts,
    )


def _independent(g: Multigraph, block: frozenset[int], verts: list[int]) -> bool:
    vs = set(verts)
    for e in block:
        u, w = g.endpoints(e)
        if u in vs and w in vs:
            return False
    return True


def block_chromatic_index(g: Multigraph, block: frozenset[int], cls: BlockClass) -> int:
    """Largest family of pairwise adjacent edges within one block."""
    best = max((degree(g, v, block) for v in vertices_of(g, block)), default=0)
    if cls.kind == BlockKind.FOUR_VERTEX:
        verts = sorted(vertices_of(g, block))
        for i in range(len(verts)):
            for j in range(i + 1, len(verts)):
                for k in range(j + 1, len(verts)):
                    t = len(triangle_edges(g, verts[i], verts[j], verts[k], block))
                    best = max(best, t)
    elif cls.kind == BlockKind.K11N:
        for v in cls.centers:
            best = max(best, len(triangle_edges(g, cls.apex_a, cls.apex_b, v, block)))
    return best


def chromatic_index(g: Multigraph) -> int:
    """max(max vertex degree, max triangle edge count) over the graph.

    Valid exactly because every block classifies; a block that does not
    raises NotLinePerfectError.  Triangles live inside single blocks, and
    in bipartite blocks every triangle edge set is contained in one
    vertex star, so only four-vertex and fan blocks are enumerated.
    """
    dec = decompose_blocks(g)
    best = max((degree(g, v) for v in range(g.vertex_count)), default=0)
    for blk in dec.blocks:
        cls = classify_block(g, blk)
        best = max(best, block_chromatic_index(g, blk, cls))
    return best
