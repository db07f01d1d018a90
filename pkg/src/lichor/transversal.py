"""Per-edge color lists, reducing sets, and the distinct-representative base case.

A reducing set {e, q, c} is a pair of non-adjacent edges whose lists
share color c; coloring both with c shrinks the instance.  When no
reducing set exists (the transversal case), any two non-adjacent edges
have disjoint lists, so a proper list coloring is exactly an injective
choice of one color per edge: a system of distinct representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

from .errors import ContractError, InputError
from .multigraph import Multigraph


class ColorLists:
    """Immutable map edge-id -> finite set of colors."""

    __slots__ = ("_lists",)

    def __init__(self, list_of: Mapping[int, Iterable[int]]):
        self._lists: Dict[int, frozenset[int]] = {
            int(e): frozenset(int(c) for c in colors) for e, colors in list_of.items()
        }

    def of(self, e: int) -> frozenset[int]:
        try:
            return self._lists[e]
        except KeyError:
            raise InputError(f"no color list for edge {e}") from None

    def edges(self) -> Tuple[int, ...]:
        return tuple(sorted(self._lists))

    def __contains__(self, e: int) -> bool:
        return e in self._lists

    def __len__(self) -> int:
        return len(self._lists)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._lists))

    def __eq__(self, other) -> bool:
        return isinstance(other, ColorLists) and self._lists == other._lists

    def __repr__(self) -> str:
        inner = ", ".join(f"{e}: {sorted(cs)}" for e, cs in sorted(self._lists.items()))
        return f"ColorLists({{{inner}}})"

    def union_over(self, edges: Iterable[int]) -> frozenset[int]:
        """A_F: all colors appearing on the given edges."""
        out: set[int] = set()
        for e in edges:
            out |= self.of(e)
        return frozenset(out)

    def restricted(self, edges: Iterable[int]) -> "ColorLists":
        keep = set(edges)
        return ColorLists({e: cs for e, cs in self._lists.items() if e in keep})

    def minus_color(self, *colors: int) -> "ColorLists":
        """Delete the given colors from every list."""
        drop = frozenset(colors)
        return ColorLists({e: cs - drop for e, cs in self._lists.items()})

    def minus_colors_at(self, edges: Iterable[int], colors: Iterable[int]) -> "ColorLists":
        """Delete colors from the lists of the given edges only."""
        drop = frozenset(colors)
        touch = set(edges)
        return ColorLists({
            e: (cs - drop if e in touch else cs) for e, cs in self._lists.items()
        })

    def trimmed(self, required: Mapping[int, int]) -> "ColorLists":
        """Shrink each list to its required size, keeping the smallest colors.

        Choosability is monotone under list restriction, so trimming to
        the exact demanded sizes is safe and keeps the bookkeeping tight.
        """
        out: Dict[int, frozenset[int]] = {}
        for e, cs in self._lists.items():
            need = required.get(e)
            if need is None or len(cs) <= need:
                out[e] = cs
            else:
                out[e] = frozenset(sorted(cs)[:need])
        return ColorLists(out)


@dataclass(frozen=True, order=True)
class ReducingSet:
    """Two non-adjacent edges e < q sharing color c in their lists."""

    e: int
    q: int
    c: int


@dataclass(frozen=True)
class HallViolator:
    """A witness edge set F with |F| > |A_F|, so no transversal exists."""

    edges: frozenset[int]
    colors: frozenset[int]  # A_F for the witness


def _nonadjacent_pairs(g: Multigraph, active: frozenset[int]) -> Iterator[Tuple[int, int]]:
    ordered = sorted(active)
    for i, e in enumerate(ordered):
        eu, ev = g.endpoints(e)
        ends = {eu, ev}
        for q in ordered[i + 1:]:
            qu, qv = g.endpoints(q)
            if qu not in ends and qv not in ends:
                yield e, q


def find_reducing_sets(g: Multigraph, active: frozenset[int],
                       lists: ColorLists) -> Tuple[ReducingSet, ...]:
    """All reducing sets, ordered by (e, q, c) ascending.

    Empty exactly when the transversal case holds.
    """
    out: list[ReducingSet] = []
    for e, q in _nonadjacent_pairs(g, active):
        for c in sorted(lists.of(e) & lists.of(q)):
            out.append(ReducingSet(e, q, c))
    return tuple(out)


def first_reducing_set(g: Multigraph, active: frozenset[int], lists: ColorLists,
                       predicate=None) -> Optional[ReducingSet]:
    """First reducing set in (e, q, c) order satisfying the predicate."""
    for e, q in _nonadjacent_pairs(g, active):
        shared = lists.of(e) & lists.of(q)
        if not shared:
            continue
        for c in sorted(shared):
            rs = ReducingSet(e, q, c)
            if predicate is None or predicate(rs):
                return rs
    return None


def solve_sdr(g: Multigraph, active: frozenset[int], lists: ColorLists):
    """Transversal base case: injective edge -> color assignment.

    Returns an edge coloring dict, or a HallViolator when some edge set
    demands more distinct colors than its lists jointly contain.  Must
    only be called in the transversal case; injectivity then makes any
    assignment proper.
    """
    if first_reducing_set(g, active, lists) is not None:
        raise ContractError("solve_sdr called while reducing sets exist")

    ordered = sorted(active)
    # Augmenting-path matching, edges against the union of colors.
    match_of_color: Dict[int, int] = {}
    match_of_edge: Dict[int, int] = {}

    def augment(e: int, seen: set[int]) -> bool:
        for c in sorted(lists.of(e)):
            if c in seen:
                continue
            seen.add(c)
            if c not in match_of_color or augment(match_of_color[c], seen):
                match_of_color[c] = e
                match_of_edge[e] = c
                return True
        return False

    for e in ordered:
        if not augment(e, set()):
            return _hall_witness(e, ordered, lists, match_of_color, match_of_edge)
    return dict(match_of_edge)


def _hall_witness(start: int, ordered: list[int], lists: ColorLists,
                  match_of_color: Dict[int, int],
                  match_of_edge: Dict[int, int]) -> HallViolator:
    """Edges reachable from an unmatched edge by alternating paths.

    Every color seen from the witness is matched (otherwise the path
    would have augmented), and its partner edge is reachable too, so
    |A_F| = |F| - 1 < |F|.
    """
    frontier = [start]
    edges = {start}
    colors: set[int] = set()
    while frontier:
        e = frontier.pop()
        for c in lists.of(e):
            if c in colors:
                continue
            colors.add(c)
            partner = match_of_color.get(c)
            if partner is not None and partner not in edges:
                edges.add(partner)
                frontier.append(partner)
    witness = HallViolator(frozenset(edges), frozenset(colors))
    if len(witness.edges) <= len(witness.colors):
        raise ContractError("alternating-reachability cut is not a Hall violator")
    return witness
