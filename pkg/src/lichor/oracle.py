"""Independent brute-force oracles and checkers.

Everything here is deliberately dumb: exhaustive backtracking and
direct definition-checking, with explicit size caps instead of silent
truncation.  The solvers are validated against these, never the other
way around.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Optional

from .bipartite import LineOrientation
from .errors import OracleSizeError
from .multigraph import Multigraph, line_adjacent
from .transversal import ColorLists

DEFAULT_LIST_CAP = 14
DEFAULT_CHI_CAP = 12


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _conflicts(g: Multigraph, e: int, q: int) -> bool:
    return bool(set(g.endpoints(e)) & set(g.endpoints(q)))


def brute_force_list_color(g: Multigraph, active: frozenset[int], lists: ColorLists,
                           cap: int = DEFAULT_LIST_CAP) -> Optional[Dict[int, int]]:
    """Exhaustive search for a proper coloring from the lists, or None.

    Edges are ordered smallest list first; colors are tried ascending,
    so a feasible instance always yields the same witness.
    """
    edges = sorted(active, key=lambda e: (len(lists.of(e)), e))
    if len(edges) > cap:
        raise OracleSizeError(f"{len(edges)} active edges exceed the cap of {cap}")
    assignment: Dict[int, int] = {}

    def backtrack(i: int) -> bool:
        if i == len(edges):
            return True
        e = edges[i]
        for c in sorted(lists.of(e)):
            if any(assignment[q] == c and _conflicts(g, e, q)
                   for q in assignment):
                continue
            assignment[e] = c
            if backtrack(i + 1):
                return True
            del assignment[e]
        return False

    return dict(assignment) if backtrack(0) else None


def brute_force_chi(g: Multigraph, cap: int = DEFAULT_CHI_CAP) -> int:
    """Smallest k admitting a proper edge coloring with colors 1..k."""
    edges = sorted(g.edge_ids)
    if len(edges) > cap:
        raise OracleSizeError(f"{len(edges)} edges exceed the cap of {cap}")
    if not edges:
        return 0
    colors: Dict[int, int] = {}

    def feasible(k: int, i: int, used: int) -> bool:
        if i == len(edges):
            return True
        e = edges[i]
        # Trying at most one fresh color per level kills color symmetry.
        for c in range(1, min(k, used + 1) + 1):
            if any(colors[q] == c and _conflicts(g, e, q) for q in colors):
                continue
            colors[e] = c
            if feasible(k, i + 1, max(used, c)):
                return True
            del colors[e]
        return False

    k = 1
    while True:
        colors.clear()
        if feasible(k, 0, 0):
            return k
        k += 1


def verify_coloring(g: Multigraph, active: frozenset[int], lists: Optional[ColorLists],
                    coloring: Mapping[int, int]) -> VerifyResult:
    """Check totality on active, properness, and list membership."""
    for e in sorted(active):
        if e not in coloring:
            return VerifyResult(False, f"edge {e} is uncolored")
        if lists is not None and coloring[e] not in lists.of(e):
            return VerifyResult(False, f"edge {e}: color {coloring[e]} not in its list")
    ordered = sorted(active)
    for i, e in enumerate(ordered):
        for q in ordered[i + 1:]:
            if coloring[e] == coloring[q] and _conflicts(g, e, q):
                return VerifyResult(
                    False, f"adjacent edges {e} and {q} share color {coloring[e]}")
    return VerifyResult(True)


def verify_kernel(d: LineOrientation, active: frozenset[int],
                  kernel: frozenset[int]) -> VerifyResult:
    """Check independence and absorption of a claimed kernel."""
    if not kernel <= active:
        return VerifyResult(False, "kernel contains inactive edges")
    members = sorted(kernel)
    for i, e in enumerate(members):
        for q in members[i + 1:]:
            if line_adjacent(d.g, e, q):
                return VerifyResult(False, f"kernel edges {e} and {q} are adjacent")
    for e in sorted(active - kernel):
        if not (d.arcs[e] & kernel):
            return VerifyResult(False, f"edge {e} has no arc into the kernel")
    return VerifyResult(True)


def find_odd_cycle(g: Multigraph, min_length: int = 5) -> Optional[tuple[int, ...]]:
    """Search for an odd simple cycle of at least the given length.

    Works on the underlying simple graph (multiplicities never create
    new cycles of length above 2) via DFS path enumeration; intended
    for small blocks only.
    """
    adj: Dict[int, set[int]] = {v: set() for v in range(g.vertex_count)}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)

    best: list[tuple[int, ...]] = []

    def extend(path: list[int], on_path: set[int]) -> bool:
        v = path[-1]
        for w in sorted(adj[v]):
            if w == path[0] and len(path) >= min_length and len(path) % 2 == 1:
                best.append(tuple(path))
                return True
            if w in on_path or w < path[0]:
                continue
            path.append(w)
            on_path.add(w)
            if extend(path, on_path):
                return True
            on_path.remove(w)
            path.pop()
        return False

    for start in range(g.vertex_count):
        if extend([start], {start}):
            return best[0]
    return None
