"""Loopless multigraph with stable, dense edge identifiers.

Edges are identified by their position in the input sequence, so
parallel edges are distinguishable and ids survive any "edge removal",
which callers represent with an active-edge mask instead of reindexing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .errors import InputError

EdgeSet = frozenset  # sets of edge ids


@dataclass(frozen=True)
class Multigraph:
    """Immutable loopless multigraph.

    vertex_count: number of vertices, ids 0..vertex_count-1.
    edges: tuple of (u, v) endpoint pairs; the index is the edge id.
    Isolated vertices are allowed and affect nothing.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        object.__setattr__(self, "vertex_count", int(vertex_count))
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in edges))
        if self.vertex_count < 0:
            raise InputError("vertex_count must be non-negative")
        for e, (u, v) in enumerate(self.edges):
            if u == v:
                raise InputError(f"edge {e} is a loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InputError(f"edge {e}=({u},{v}) references a vertex out of range")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def edge_ids(self) -> range:
        return range(len(self.edges))

    @cached_property
    def _incident(self) -> tuple[tuple[int, ...], ...]:
        at: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for e, (u, v) in enumerate(self.edges):
            at[u].append(e)
            at[v].append(e)
        return tuple(tuple(lst) for lst in at)

    def endpoints(self, e: int) -> tuple[int, int]:
        self._check_edge(e)
        return self.edges[e]

    def other_end(self, e: int, v: int) -> int:
        u, w = self.endpoints(e)
        if v == u:
            return w
        if v == w:
            return u
        raise InputError(f"vertex {v} is not an endpoint of edge {e}")

    def edges_at(self, v: int, active: Optional[frozenset[int]] = None) -> tuple[int, ...]:
        """Edge ids incident to v, optionally restricted to an active mask."""
        self._check_vertex(v)
        inc = self._incident[v]
        if active is None:
            return inc
        return tuple(e for e in inc if e in active)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.vertex_count):
            raise InputError(f"vertex {v} out of range (vertex_count={self.vertex_count})")

    def _check_edge(self, e: int) -> None:
        if not (0 <= e < len(self.edges)):
            raise InputError(f"edge {e} out of range (edge_count={len(self.edges)})")


def degree(g: Multigraph, v: int, active: Optional[frozenset[int]] = None) -> int:
    """Number of edges incident to v, counting multiplicity."""
    return len(g.edges_at(v, active))


def edges_between(g: Multigraph, a: int, b: int,
                  active: Optional[frozenset[int]] = None) -> EdgeSet:
    """All edges whose endpoint set is {a, b}."""
    if a == b:
        raise InputError("edges_between requires two distinct vertices")
    g._check_vertex(a)
    g._check_vertex(b)
    pair = {a, b}
    out = [e for e in g.edges_at(a, active) if set(g.edges[e]) == pair]
    return frozenset(out)


def triangle_edges(g: Multigraph, a: int, b: int, c: int,
                   active: Optional[frozenset[int]] = None) -> EdgeSet:
    """All edges inside the triangle on vertices a, b, c."""
    if len({a, b, c}) != 3:
        raise InputError("triangle_edges requires three pairwise distinct vertices")
    return (edges_between(g, a, b, active)
            | edges_between(g, a, c, active)
            | edges_between(g, b, c, active))


def line_adjacent(g: Multigraph, e: int, q: int) -> bool:
    """True iff edges e and q share at least one endpoint.

    Parallel edges share both endpoints and are adjacent.  Asking about
    an edge and itself is an error, not "adjacent".
    """
    if e == q:
        raise InputError("line_adjacent is irreflexive; got the same edge twice")
    g._check_edge(e)
    g._check_edge(q)
    return bool(set(g.edges[e]) & set(g.edges[q]))


def vertices_of(g: Multigraph, edges: Iterable[int]) -> frozenset[int]:
    """Vertices touched by the given edges."""
    out: set[int] = set()
    for e in edges:
        u, v = g.endpoints(e)
        out.add(u)
        out.add(v)
    return frozenset(out)
