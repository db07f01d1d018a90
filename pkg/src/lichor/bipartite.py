"""List edge coloring of bipartite blocks by the kernel method.

The pipeline: properly color the block with Delta colors, permute color
names so the distinguished vertex v sees exactly colors 1..d(v), then
orient the line graph so that every out-degree is strictly below the
edge's list demand.  Under that orientation every induced subgraph has
a kernel, and repeatedly coloring the kernel of "edges whose list still
contains c" with c colors the whole block from its lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Optional

from .errors import InputError, InvariantError
from .multigraph import Multigraph, degree, vertices_of
from .transversal import ColorLists

Bipartition = tuple[frozenset[int], frozenset[int]]


@dataclass(frozen=True)
class LineOrientation:
    """Directed adjacency between the edges of one block.

    For adjacent edges e, q sharing vertex w: e -> q when w is on the X
    side and c(e) < c(q), or when w is on the Y side and c(e) > c(q).
    Parallel edges share a vertex on each side and carry both arcs.
    """

    g: Multigraph
    block: frozenset[int]
    side_x: frozenset[int]
    side_y: frozenset[int]
    color: Mapping[int, int]
    arcs: Mapping[int, frozenset[int]]

    def out_degree(self, e: int) -> int:
        return len(self.arcs[e])

    def closed_neighborhood(self, e: int) -> frozenset[int]:
        return self.arcs[e] | {e}

    def x_end(self, e: int) -> int:
        u, v = self.g.endpoints(e)
        return u if u in self.side_x else v

    def y_end(self, e: int) -> int:
        u, v = self.g.endpoints(e)
        return u if u in self.side_y else v


def _check_bipartition(g: Multigraph, block: frozenset[int], bip: Bipartition) -> None:
    x, y = bip
    if x & y:
        raise InputError("bipartition sides overlap")
    for e in block:
        u, v = g.endpoints(e)
        if not ((u in x and v in y) or (u in y and v in x)):
            raise InputError(f"edge {e} does not cross the bipartition")


def konig_color(g: Multigraph, block: frozenset[int], bip: Bipartition) -> Dict[int, int]:
    """Proper edge coloring of a bipartite block with colors 1..Delta.

    Edges are inserted in id order.  If no color is free at both ends,
    the two-color alternating path from the far endpoint is flipped;
    in a bipartite graph that path cannot reach the near endpoint, so
    the insertion color becomes free at both ends.
    """
    _check_bipartition(g, block, bip)
    if not block:
        return {}
    delta = max(degree(g, v, block) for v in vertices_of(g, block))
    palette = range(1, delta + 1)
    coloring: Dict[int, int] = {}
    at: Dict[int, Dict[int, int]] = {}  # vertex -> color -> edge

    def free(v: int) -> int:
        used = at.setdefault(v, {})
        for c in palette:
            if c not in used:
                return c
        raise InvariantError(f"no free color at vertex {v} within Delta={delta}")

    for e in sorted(block):
        u, v = g.endpoints(e)
        alpha = free(u)
        beta = free(v)
        if alpha != beta and alpha in at.setdefault(v, {}):
            # Flip the alpha/beta path starting at v; afterwards alpha
            # is free at v and still free at u.
            path = []
            cur, want = v, alpha
            while want in at.setdefault(cur, {}):
                pe = at[cur][want]
                path.append(pe)
                cur = g.other_end(pe, cur)
                want = beta if want == alpha else alpha
            for pe in path:
                pu, pv = g.endpoints(pe)
                del at[pu][coloring[pe]]
                del at[pv][coloring[pe]]
            for pe in path:
                new = beta if coloring[pe] == alpha else alpha
                coloring[pe] = new
                pu, pv = g.endpoints(pe)
                at[pu][new] = pe
                at[pv][new] = pe
        use = alpha if alpha not in at.setdefault(v, {}) else beta
        if use in at.setdefault(u, {}) or use in at.setdefault(v, {}):
            raise InvariantError("alternating-path flip failed to free a color")
        coloring[e] = use
        at[u][use] = e
        at[v][use] = e
    return coloring


def normalize_at(coloring: Mapping[int, int], g: Multigraph, v: int) -> Dict[int, int]:
    """Permute color names globally so the edges at v carry 1..d(v)."""
    dom = frozenset(coloring)
    at_v = sorted(coloring[e] for e in g.edges_at(v, dom))
    other = sorted(set(coloring.values()) - set(at_v))
    perm = {c: i + 1 for i, c in enumerate(at_v)}
    perm.update({c: len(at_v) + i + 1 for i, c in enumerate(other)})
    return {e: perm[c] for e, c in coloring.items()}


def orient(g: Multigraph, block: frozenset[int], bip: Bipartition,
           coloring: Mapping[int, int]) -> LineOrientation:
    """Build the kernel-friendly orientation from a proper coloring."""
    _check_bipartition(g, block, bip)
    x, y = bip
    for w in vertices_of(g, block):
        seen = set()
        for e in g.edges_at(w, block):
            if coloring[e] in seen:
                raise InputError(f"coloring is not proper at vertex {w}")
            seen.add(coloring[e])
    arcs: Dict[int, set[int]] = {e: set() for e in block}
    for w in vertices_of(g, block):
        inc = g.edges_at(w, block)
        for i, e in enumerate(inc):
            for q in inc[i + 1:]:
                lo, hi = (e, q) if coloring[e] < coloring[q] else (q, e)
                if w in x:
                    arcs[lo].add(hi)
                else:
                    arcs[hi].add(lo)
    return LineOrientation(
        g=g, block=frozenset(block), side_x=frozenset(x), side_y=frozenset(y),
        color=dict(coloring), arcs={e: frozenset(s) for e, s in arcs.items()},
    )


def find_kernel(d: LineOrientation, active: frozenset[int]) -> frozenset[int]:
    """Kernel of the orientation induced on the active edges.

    Deferred acceptance: every X vertex proposes its highest-colored
    unrejected active edge; every Y vertex keeps the lowest-colored
    proposal it sees and rejects the rest.  At the fixpoint the kept
    proposals form a matching, lower edges at an X vertex point at its
    kept proposal, and rejected edges point at the (lower) edge their
    Y vertex kept.
    """
    if not active:
        raise InputError("kernel of an empty edge set is undefined")
    if not active <= d.block:
        raise InputError("active edges must lie inside the oriented block")
    rejected: set[int] = set()
    while True:
        proposal: Dict[int, int] = {}
        for e in sorted(active):
            if e in rejected:
                continue
            xv = d.x_end(e)
            cur = proposal.get(xv)
            if cur is None or d.color[e] > d.color[cur]:
                proposal[xv] = e
        keep: Dict[int, int] = {}
        newly: list[int] = []
        for e in sorted(proposal.values()):
            yv = d.y_end(e)
            cur = keep.get(yv)
            if cur is None:
                keep[yv] = e
            elif d.color[e] < d.color[cur]:
                newly.append(cur)
                keep[yv] = e
            else:
                newly.append(e)
        if not newly:
            return frozenset(keep.values())
        rejected.update(newly)


def kernel_list_color(d: LineOrientation, lists: ColorLists,
                      stats: Optional["KernelRounds"] = None) -> Dict[int, int]:
    """Color every listed edge from its list, one kernel per color.

    Requires |A_e| > d_out(e) for every edge.  Each round picks the
    smallest color c still on any list, colors the kernel of the edges
    whose list contains c, and deletes c everywhere; an uncolored edge
    in that subgraph loses one list color but also one out-neighbor, so
    the slack never drops and no list empties before its edge is colored.
    """
    todo = frozenset(lists.edges())
    if not todo <= d.block:
        raise InputError("lists must cover edges of the oriented block only")
    for e in todo:
        if len(lists.of(e)) <= d.out_degree(e):
            raise InvariantError(
                f"edge {e}: list size {len(lists.of(e))} <= out-degree {d.out_degree(e)}"
            )
    coloring: Dict[int, int] = {}
    while todo:
        pool = lists.union_over(todo)
        if not pool:
            raise InvariantError("uncolored edges with empty lists")
        c = min(pool)
        holders = frozenset(e for e in todo if c in lists.of(e))
        kernel = find_kernel(d, holders)
        for e in kernel:
            coloring[e] = c
        todo -= kernel
        lists = lists.minus_colors_at(todo, [c])
        if stats is not None:
            stats.rounds += 1
    return coloring


@dataclass
class KernelRounds:
    rounds: int = 0


def solve_bipartite(g: Multigraph, block: frozenset[int], v: int,
                    lists: ColorLists, stats: Optional[KernelRounds] = None) -> Dict[int, int]:
    """List edge coloring of a bipartite block, favoring vertex v.

    Lists must hold at least d(v) colors on the edges at v and at least
    Delta of the block elsewhere; they are trimmed to exactly those
    sizes (smallest colors kept) before the kernel loop runs.
    """
    if not block:
        return {}
    from .blocks import bipartition  # local import to avoid a cycle at module load

    bip = bipartition(g, block)
    if bip is None:
        raise InputError("solve_bipartite requires a bipartite block")
    x, y = bip
    if v in y:
        x, y = y, x
    elif v not in x:
        raise InputError(f"vertex {v} does not lie in the block")

    chi = max(degree(g, w, block) for w in vertices_of(g, block))
    dv = degree(g, v, block)
    at_v = set(g.edges_at(v, block))
    demand = {e: (dv if e in at_v else chi) for e in block}
    for e in sorted(block):
        if len(lists.of(e)) < demand[e]:
            raise InvariantError(
                f"edge {e}: list size {len(lists.of(e))} below demand {demand[e]}"
            )
    trimmed = lists.restricted(block).trimmed(demand)

    base = konig_color(g, block, (x, y))
    normalized = normalize_at(base, g, v)
    d = orient(g, block, (x, y), normalized)
    for e in block:
        if d.out_degree(e) >= chi:
            raise InvariantError(f"edge {e}: out-degree {d.out_degree(e)} >= {chi}")
        if e in at_v and d.out_degree(e) >= dv:
            raise InvariantError(
                f"edge {e} at vertex {v}: out-degree {d.out_degree(e)} >= d(v)={dv}"
            )
    return kernel_list_color(d, trimmed, stats=stats)
