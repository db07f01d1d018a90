"""Reducing-set inductions for four-vertex blocks and triangle fans.

Both solvers shrink the instance one reducing set at a time until the
transversal case, then hand off to the distinct-representative matcher.
The theory guarantees a long list of facts about each shrink step
(degree drops at both apexes, at most one "great" center, demands stay
covered, ...); every one of them is re-checked at every recursion level
through the module-wide invariant monitor, so a bug in the case
analysis surfaces as an InvariantError instead of a wrong coloring.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .errors import InputError, InvariantError
from .multigraph import Multigraph, degree, edges_between, triangle_edges, vertices_of
from .transversal import (ColorLists, HallViolator, ReducingSet,
                          first_reducing_set, find_reducing_sets, solve_sdr)


class InvariantMonitor:
    """Counts every invariant check and raises when one fails."""

    def __init__(self):
        self.performed: Counter = Counter()
        self.fired: Counter = Counter()

    def check(self, name: str, condition: bool, detail: str = "") -> None:
        self.performed[name] += 1
        if not condition:
            self.fired[name] += 1
            raise InvariantError(f"{name}: {detail}" if detail else name)

    def reset(self) -> None:
        self.performed.clear()
        self.fired.clear()

    def total_fired(self) -> int:
        return sum(self.fired.values())


monitor = InvariantMonitor()


@dataclass
class SolveStats:
    """Recursion depth and branch counters for one block solve."""

    depth: int = 0
    branches: Counter = field(default_factory=Counter)

    def enter(self, level: int) -> None:
        self.depth = max(self.depth, level)

    def hit(self, name: str) -> None:
        self.branches[name] += 1


class Splitting(Enum):
    A = "a"
    B = "b"
    NONE = "none"


@dataclass
class TriangleProfile:
    """Triangle edge counts t(v_i) of a fan, with big/great flags.

    big: t(v_i) >= max(d(a), d(b)); great: strict inequality.
    """

    apex_a: int
    apex_b: int
    t_of: Dict[int, int]
    big: frozenset[int]
    great: frozenset[int]


def triangle_profile(g: Multigraph, active: frozenset[int], a: int, b: int,
                     centers: Optional[Iterable[int]] = None) -> TriangleProfile:
    """Profile the fan on apexes a, b over the active edges.

    The non-apex vertices must be independent; every active edge then
    touches a or b.  A fixed center list may be supplied so that a
    center keeps its t-value after losing its last edge.
    """
    if a == b:
        raise InputError("apexes must be distinct")
    if centers is None:
        centers = sorted(v for v in vertices_of(g, active) if v not in (a, b))
    centers = list(centers)
    cset = set(centers)
    for e in active:
        u, w = g.endpoints(e)
        if u in cset and w in cset:
            raise InputError(f"edge {e}=({u},{w}) joins two centers; not independent")
        if a not in (u, w) and b not in (u, w):
            raise InputError(f"edge {e}=({u},{w}) touches neither apex")
    t_of = {v: len(triangle_edges(g, a, b, v, active)) for v in centers}
    cap = max(degree(g, a, active), degree(g, b, active))
    big = frozenset(v for v in centers if t_of[v] >= cap)
    great = frozenset(v for v in centers if t_of[v] > cap)
    prof = TriangleProfile(a, b, t_of, big, great)
    _check_profile_invariants(prof)
    return prof


def _check_profile_invariants(p: TriangleProfile) -> None:
    for v in p.great:
        monitor.check("big-great-exclusive", not (p.big - {v}),
                      f"center {v} great but {sorted(p.big - {v})} also big")
    for v in p.big:
        monitor.check("big-great-exclusive", not (p.great - {v}),
                      f"center {v} big but {sorted(p.great - {v})} also great")
    if p.great:
        top = max(p.t_of.values())
        v = next(iter(p.great))
        monitor.check("sorted-great-unique",
                      len(p.great) == 1 and p.t_of[v] == top,
                      f"great centers {sorted(p.great)} not unique at max t={top}")


def _check_monotone(before: TriangleProfile, after: TriangleProfile) -> None:
    monitor.check("big-great-monotone", before.big <= after.big,
                  f"big lost: {sorted(before.big - after.big)}")
    monitor.check("big-great-monotone", before.great <= after.great,
                  f"great lost: {sorted(before.great - after.great)}")
    monitor.check("big-great-monotone", after.great <= before.big,
                  f"new great {sorted(after.great - before.big)} was not big")


@dataclass(frozen=True)
class DemandFunction:
    """Per-edge lower bounds on list sizes for one solver entry."""

    required: Mapping[int, int]

    def check(self, lists: ColorLists, where: str) -> None:
        for e, need in sorted(self.required.items()):
            monitor.check("demand", len(lists.of(e)) >= need,
                          f"{where}: edge {e} has {len(lists.of(e))} colors, needs {need}")


def clique_edge_bound(g: Multigraph, active: frozenset[int]) -> int:
    """Largest pairwise-adjacent edge family on at most four vertices."""
    verts = sorted(vertices_of(g, active))
    best = max((degree(g, v, active) for v in verts), default=0)
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            for k in range(j + 1, len(verts)):
                best = max(best, len(triangle_edges(g, verts[i], verts[j], verts[k], active)))
    return best


def demand_four_vertex(g: Multigraph, active: frozenset[int], v: int) -> DemandFunction:
    chi = clique_edge_bound(g, active)
    dv = degree(g, v, active)
    at_v = set(g.edges_at(v, active))
    return DemandFunction({e: (dv if e in at_v else chi) for e in sorted(active)})


def demand_fan_apex(g: Multigraph, active: frozenset[int], a: int, b: int) -> DemandFunction:
    """d(a) on the edges at apex a, max(d(a), d(b), t(v_i)) on E(b, v_i)."""
    prof = triangle_profile(g, active, a, b)
    da, db = degree(g, a, active), degree(g, b, active)
    req: Dict[int, int] = {}
    at_a = set(g.edges_at(a, active))
    for e in sorted(active):
        if e in at_a:
            req[e] = da
        else:
            u, w = g.endpoints(e)
            vi = u if u != b else w
            req[e] = max(da, db, prof.t_of[vi])
    return DemandFunction(req)


def demand_fan_center(g: Multigraph, active: frozenset[int], a: int, b: int,
                      v1: int) -> DemandFunction:
    """d(v1) on E(v1), max(d(a), d(b), t(v1)) on E(a,b), per-center max elsewhere."""
    centers = sorted(set(v for v in vertices_of(g, active) if v not in (a, b)) | {v1})
    prof = triangle_profile(g, active, a, b, centers=centers)
    da, db = degree(g, a, active), degree(g, b, active)
    dv1 = degree(g, v1, active)
    req: Dict[int, int] = {}
    for e in sorted(active):
        u, w = g.endpoints(e)
        if v1 in (u, w):
            req[e] = dv1
        elif {u, w} == {a, b}:
            req[e] = max(da, db, prof.t_of[v1])
        else:
            vi = u if u not in (a, b) else w
            req[e] = max(da, db, prof.t_of[vi])
    return DemandFunction(req)


def _apply_pair(g: Multigraph, active: frozenset[int], lists: ColorLists,
                rs: ReducingSet, a: int, b: int,
                centers: list[int]) -> Tuple[frozenset[int], ColorLists]:
    """Remove a reducing set's edges, delete its color, run the step checks."""
    before = triangle_profile(g, active, a, b, centers=centers)
    da, db = degree(g, a, active), degree(g, b, active)
    active2 = active - {rs.e, rs.q}
    lists2 = lists.restricted(active2).minus_color(rs.c)
    monitor.check("apex-degree-drop",
                  degree(g, a, active2) == da - 1 and degree(g, b, active2) == db - 1,
                  f"step {rs} changed d(a),d(b) from {da},{db} "
                  f"to {degree(g, a, active2)},{degree(g, b, active2)}")
    after = triangle_profile(g, active2, a, b, centers=centers)
    _check_monotone(before, after)
    return active2, lists2


def _vertex_lists(g: Multigraph, active: frozenset[int], lists: ColorLists,
                  v: int) -> frozenset[int]:
    """A(v): all colors on the active edges at v."""
    return lists.union_over(g.edges_at(v, active))


def _pair_lists(g: Multigraph, active: frozenset[int], lists: ColorLists,
                u: int, v: int) -> frozenset[int]:
    """A(u, v): all colors on the active edges between u and v."""
    return lists.union_over(edges_between(g, u, v, active))


def _sdr_base(g: Multigraph, active: frozenset[int], lists: ColorLists,
              where: str) -> Dict[int, int]:
    result = solve_sdr(g, active, lists)
    monitor.check("transversal-hall", not isinstance(result, HallViolator),
                  f"{where}: Hall violator {sorted(result.edges) if isinstance(result, HallViolator) else ''}")
    return result


def solve_k4(g: Multigraph, active: frozenset[int], v: int, lists: ColorLists,
             stats: Optional[SolveStats] = None) -> Dict[int, int]:
    """List-color a multigraph on at most four vertices, favoring v.

    While any reducing set exists, the first one in (e, q, c) order is
    applied: both edges get color c, which is deleted everywhere, and
    the clique bound provably drops by exactly one.  The base case is
    the distinct-representative matcher, whose Hall condition holds by
    the demand bookkeeping.
    """
    if len(vertices_of(g, active)) > 4:
        raise InputError("solve_k4 is limited to four vertices carrying edges")
    g._check_vertex(v)
    stats = stats if stats is not None else SolveStats()
    demand_four_vertex(g, active, v).check(lists.restricted(active), "k4 entry")
    lists = lists.restricted(active).trimmed(demand_four_vertex(g, active, v).required)

    def recurse(active: frozenset[int], lists: ColorLists, level: int) -> Dict[int, int]:
        stats.enter(level)
        if not active:
            return {}
        demand_four_vertex(g, active, v).check(lists, f"k4 level {level}")
        rs = first_reducing_set(g, active, lists)
        if rs is None:
            stats.hit("k4-sdr")
            return _sdr_base(g, active, lists, f"k4 level {level}")
        stats.hit("k4-reduce")
        chi = clique_edge_bound(g, active)
        active2 = active - {rs.e, rs.q}
        lists2 = lists.restricted(active2).minus_color(rs.c)
        monitor.check("chi-drop", clique_edge_bound(g, active2) == chi - 1,
                      f"clique bound {chi} -> {clique_edge_bound(g, active2)} after {rs}")
        out = recurse(active2, lists2, level + 1)
        out[rs.e] = rs.c
        out[rs.q] = rs.c
        return out

    return recurse(frozenset(active), lists, 0)


def solve_k11n_apex(g: Multigraph, active: frozenset[int], a: int, b: int,
                    lists: ColorLists, stats: Optional[SolveStats] = None) -> Dict[int, int]:
    """List-color a triangle fan when the favored vertex is apex a.

    Reducing sets touching the current maximum-t center are preferred;
    when none touches it, any reducing color provably misses that
    center's lists entirely, so its demands survive the step either way.
    """
    stats = stats if stats is not None else SolveStats()
    centers = sorted(v for v in vertices_of(g, active) if v not in (a, b))
    demand_fan_apex(g, active, a, b).check(lists.restricted(active), "fan-apex entry")
    lists = lists.restricted(active).trimmed(demand_fan_apex(g, active, a, b).required)

    def recurse(active: frozenset[int], lists: ColorLists, level: int) -> Dict[int, int]:
        stats.enter(level)
        if not active:
            return {}
        prof = triangle_profile(g, active, a, b, centers=centers)
        demand_fan_apex(g, active, a, b).check(lists, f"fan-apex level {level}")
        v1 = min(centers, key=lambda c: (-prof.t_of[c], c)) if centers else None
        rs = None
        if v1 is not None:
            e_v1 = set(g.edges_at(v1, active))
            rs = first_reducing_set(g, active, lists,
                                    lambda r: r.e in e_v1 or r.q in e_v1)
        if rs is not None:
            stats.hit("apex-prefer-v1")
        else:
            rs = first_reducing_set(g, active, lists)
            if rs is None:
                stats.hit("apex-sdr")
                return _sdr_base(g, active, lists, f"fan-apex level {level}")
            stats.hit("apex-any")
            if v1 is not None:
                monitor.check("choice-color-outside",
                              rs.c not in _vertex_lists(g, active, lists, v1),
                              f"fallback color {rs.c} appears at max-t center {v1}")
        active2, lists2 = _apply_pair(g, active, lists, rs, a, b, centers)
        out = recurse(active2, lists2, level + 1)
        out[rs.e] = rs.c
        out[rs.q] = rs.c
        return out

    return recurse(frozenset(active), lists, 0)


def classify_splitting(g: Multigraph, active: frozenset[int], lists: ColorLists,
                       c: int, *, a: int, b: int, v1: int, v2: int) -> Splitting:
    """Classify a color shared by the lists at centers v1 and v2.

    An a-side splitting color lives on the a-edges of both centers,
    misses their b-edges entirely, and reappears on the b-edge of some
    third center (mirrored for the b side).  Such a color forces every
    reducing pair using it to straddle a third center.
    """
    av1 = _vertex_lists(g, active, lists, v1)
    av2 = _vertex_lists(g, active, lists, v2)
    if c not in av1 or c not in av2:
        raise InputError(f"color {c} is not shared by the lists at {v1} and {v2}")
    others = [v for v in vertices_of(g, active) if v not in (a, b, v1, v2)]
    a_v1, b_v1 = _pair_lists(g, active, lists, a, v1), _pair_lists(g, active, lists, b, v1)
    a_v2, b_v2 = _pair_lists(g, active, lists, a, v2), _pair_lists(g, active, lists, b, v2)
    if (c not in b_v1 and c not in b_v2 and c in a_v1 and c in a_v2
            and any(c in _pair_lists(g, active, lists, b, vi) for vi in others)):
        return Splitting.A
    if (c not in a_v1 and c not in a_v2 and c in b_v1 and c in b_v2
            and any(c in _pair_lists(g, active, lists, a, vi) for vi in others)):
        return Splitting.B
    return Splitting.NONE


@dataclass(frozen=True)
class WeakBounds:
    """Relaxed list-size demands that still force the Hall condition.

    Same as the center-case demands except on E(a, v2), where only
    max(d(a), d(b)) is required, plus one union bound tying the lists
    of the non-adjacent classes E(b, v1) and E(a, v2) together.
    """

    apex_a: int
    apex_b: int
    v1: int
    v2: int
    required: Mapping[int, int]
    pair_required: int
    pair_b_v1: frozenset[int]
    pair_a_v2: frozenset[int]

    @staticmethod
    def compute(g: Multigraph, active: frozenset[int], a: int, b: int,
                v1: int, v2: int) -> "WeakBounds":
        centers = sorted(set(v for v in vertices_of(g, active)
                             if v not in (a, b)) | {v1, v2})
        prof = triangle_profile(g, active, a, b, centers=centers)
        da, db = degree(g, a, active), degree(g, b, active)
        dv1 = degree(g, v1, active)
        req: Dict[int, int] = {}
        for e in sorted(active):
            u, w = g.endpoints(e)
            if v1 in (u, w):
                req[e] = dv1
            elif {u, w} == {a, b}:
                req[e] = max(da, db, prof.t_of[v1])
            elif v2 in (u, w):
                req[e] = max(da, db, prof.t_of[v2]) if b in (u, w) else max(da, db)
            else:
                vi = u if u not in (a, b) else w
                req[e] = max(da, db, prof.t_of[vi])
        return WeakBounds(
            apex_a=a, apex_b=b, v1=v1, v2=v2, required=req,
            pair_required=prof.t_of[v2] + dv1,
            pair_b_v1=edges_between(g, b, v1, active),
            pair_a_v2=edges_between(g, a, v2, active),
        )

    def violations(self, lists: ColorLists) -> list[str]:
        out = []
        for e, need in sorted(self.required.items()):
            if len(lists.of(e)) < need:
                out.append(f"edge {e}: {len(lists.of(e))} < {need}")
        for r in sorted(self.pair_b_v1):
            for s in sorted(self.pair_a_v2):
                got = len(lists.of(r) | lists.of(s))
                if got < self.pair_required:
                    out.append(f"pair ({r},{s}): {got} < {self.pair_required}")
        return out


def weak_phase(g: Multigraph, active: frozenset[int], a: int, b: int, v1: int,
               lists: ColorLists, bounds: WeakBounds,
               stats: Optional[SolveStats] = None) -> Dict[int, int]:
    """End game of the center case under the weak inequalities.

    Entered when every reducing color shared by the lists at v1 and the
    big center v2 splits on the a side.  Preference order per level:
    a pair joining E(v1) to a third center, then a pair touching E(v2)
    whose color misses A(v1), then any pair (its color then misses both
    A(v1) and A(v2)); the transversal base case closes from the weak
    bounds alone.  The splitting condition and the bounds are re-checked
    at every level rather than assumed to persist.
    """
    stats = stats if stats is not None else SolveStats()
    v2 = bounds.v2
    centers = sorted(set(v for v in vertices_of(g, active) if v not in (a, b)) | {v1, v2})

    def check_level(active: frozenset[int], lists: ColorLists, level: int) -> None:
        here = WeakBounds.compute(g, active, a, b, v1, v2)
        bad = here.violations(lists)
        monitor.check("weak-bounds", not bad,
                      f"level {level}: " + "; ".join(bad[:4]))
        prof = triangle_profile(g, active, a, b, centers=centers)
        monitor.check("weak-v2-big", v2 in prof.big,
                      f"level {level}: t({v2})={prof.t_of[v2]} below "
                      f"max(d(a),d(b))={max(degree(g, a, active), degree(g, b, active))}")
        shared = (_vertex_lists(g, active, lists, v1)
                  & _vertex_lists(g, active, lists, v2))
        reducing_colors = {r.c for r in find_reducing_sets(g, active, lists)}
        for c in sorted(shared & reducing_colors):
            kind = classify_splitting(g, active, lists, c, a=a, b=b, v1=v1, v2=v2)
            monitor.check("weak-entry-splitting", kind == Splitting.A,
                          f"level {level}: reducing color {c} classifies {kind.value}")

    def recurse(active: frozenset[int], lists: ColorLists, level: int) -> Dict[int, int]:
        stats.enter(level)
        if not active:
            return {}
        check_level(active, lists, level)
        e_v1 = set(g.edges_at(v1, active))
        e_v2 = set(g.edges_at(v2, active))
        e_third = set()
        for vi in centers:
            if vi not in (v1, v2):
                e_third |= set(g.edges_at(vi, active))

        rs = first_reducing_set(
            g, active, lists,
            lambda r: ((r.e in e_v1 and r.q in e_third)
                       or (r.q in e_v1 and r.e in e_third)))
        if rs is not None:
            stats.hit("weak-a")
            monitor.check("weak-choice-color",
                          rs.c not in _pair_lists(g, active, lists, b, v2),
                          f"branch (a) color {rs.c} appears on E(b,v2)")
        else:
            av1 = _vertex_lists(g, active, lists, v1)
            rs = first_reducing_set(
                g, active, lists,
                lambda r: (r.e in e_v2 or r.q in e_v2) and r.c not in av1)
            if rs is not None:
                stats.hit("weak-b")
                monitor.check("weak-choice-color", rs.c not in av1,
                              f"branch (b) color {rs.c} appears in A(v1)")
            else:
                rs = first_reducing_set(g, active, lists)
                if rs is None:
                    stats.hit("weak-sdr")
                    return _sdr_base(g, active, lists, f"weak level {level}")
                stats.hit("weak-c")
                av2 = _vertex_lists(g, active, lists, v2)
                monitor.check("weak-choice-color",
                              rs.c not in av1 and rs.c not in av2,
                              f"branch (c) color {rs.c} appears at v1 or v2")
        active2, lists2 = _apply_pair(g, active, lists, rs, a, b, centers)
        out = recurse(active2, lists2, level + 1)
        out[rs.e] = rs.c
        out[rs.q] = rs.c
        return out

    entry = WeakBounds.compute(g, active, a, b, v1, v2)
    monitor.check("weak-bounds", entry.required == dict(bounds.required)
                  and entry.pair_required == bounds.pair_required,
                  "entry bounds disagree with recomputation")
    return recurse(frozenset(active), lists, 0)


def solve_k11n_center(g: Multigraph, active: frozenset[int], a: int, b: int,
                      v1: int, lists: ColorLists,
                      stats: Optional[SolveStats] = None) -> Dict[int, int]:
    """List-color a triangle fan when the favored vertex is center v1.

    Per level, the first applicable rule wins:
      1. some apex-to-apex list color misses A(v1): color that single
         edge with it;
      2. no other center is big: prefer a reducing set touching E(v1),
         else take any (its color then misses A(v1));
      3. a reducing set joins E(v1) and E(v2), v2 the big center: take it;
      4. both a- and b-side splitting colors exist among the reducing
         colors shared by A(v1) and A(v2): apply the two straddling
         pairs at once;
      5. only one side remains: swap the apexes if needed and enter the
         weak phase.
    """
    stats = stats if stats is not None else SolveStats()
    centers = sorted(set(v for v in vertices_of(g, active) if v not in (a, b)) | {v1})
    demand_fan_center(g, active, a, b, v1).check(lists.restricted(active), "fan-center entry")
    lists = lists.restricted(active).trimmed(
        demand_fan_center(g, active, a, b, v1).required)

    def recurse(active: frozenset[int], lists: ColorLists, level: int) -> Dict[int, int]:
        stats.enter(level)
        if not active:
            return {}
        prof = triangle_profile(g, active, a, b, centers=centers)
        demand_fan_center(g, active, a, b, v1).check(lists, f"fan-center level {level}")

        # 1. color an apex-to-apex edge with a color missing at v1
        av1 = _vertex_lists(g, active, lists, v1)
        for e in sorted(edges_between(g, a, b, active)):
            extra = sorted(lists.of(e) - av1)
            if not extra:
                continue
            stats.hit("center-ab")
            c = extra[0]
            active2 = active - {e}
            lists2 = lists.restricted(active2).minus_color(c)
            da, db = degree(g, a, active), degree(g, b, active)
            t_before = dict(prof.t_of)
            t_after = {w: len(triangle_edges(g, a, b, w, active2)) for w in centers}
            monitor.check(
                "ab-step-deltas",
                degree(g, a, active2) == da - 1 and degree(g, b, active2) == db - 1
                and all(t_after[w] == t_before[w] - 1 for w in centers),
                f"coloring apex edge {e} broke the predicted drops")
            out = recurse(active2, lists2, level + 1)
            out[e] = c
            return out

        e_v1 = set(g.edges_at(v1, active))
        others = [w for w in centers if w != v1]
        v2 = min(others, key=lambda w: (-prof.t_of[w], w)) if others else None

        # 2. no big center besides possibly v1 itself
        if v2 is None or v2 not in prof.big:
            rs = first_reducing_set(g, active, lists,
                                    lambda r: r.e in e_v1 or r.q in e_v1)
            if rs is not None:
                stats.hit("center-no-big-v1")
            else:
                rs = first_reducing_set(g, active, lists)
                if rs is None:
                    stats.hit("center-sdr")
                    return _sdr_base(g, active, lists, f"fan-center level {level}")
                stats.hit("center-no-big-any")
                monitor.check("choice-color-outside", rs.c not in av1,
                              f"fallback color {rs.c} appears in A(v1)")
            active2, lists2 = _apply_pair(g, active, lists, rs, a, b, centers)
            out = recurse(active2, lists2, level + 1)
            out[rs.e] = rs.c
            out[rs.q] = rs.c
            return out

        # 3. a reducing set joining E(v1) and E(v2)
        e_v2 = set(g.edges_at(v2, active))
        rs = first_reducing_set(
            g, active, lists,
            lambda r: ((r.e in e_v1 and r.q in e_v2)
                       or (r.e in e_v2 and r.q in e_v1)))
        if rs is not None:
            stats.hit("center-v1v2")
            active2, lists2 = _apply_pair(g, active, lists, rs, a, b, centers)
            out = recurse(active2, lists2, level + 1)
            out[rs.e] = rs.c
            out[rs.q] = rs.c
            return out

        # 4. classify the reducing colors shared by A(v1) and A(v2)
        all_rs = find_reducing_sets(g, active, lists)
        av2 = _vertex_lists(g, active, lists, v2)
        shared = sorted({r.c for r in all_rs} & av1 & av2)
        a_split: list[int] = []
        b_split: list[int] = []
        for c in shared:
            kind = classify_splitting(g, active, lists, c, a=a, b=b, v1=v1, v2=v2)
            monitor.check("splitting-classified", kind != Splitting.NONE,
                          f"reducing color {c} shared by A(v1), A(v2) fits no side")
            (a_split if kind == Splitting.A else b_split).append(c)

        if a_split and b_split:
            stats.hit("center-double")
            c1, c2 = a_split[0], b_split[0]
            pick1 = _straddle_pair(g, active, lists, c1, a, b, v1, v2, a_first=True)
            pick2 = _straddle_pair(g, active, lists, c2, a, b, v2, v1, a_first=False)
            e1, q1 = pick1
            e2, q2 = pick2
            monitor.check("double-step-shape",
                          len({e1, q1, e2, q2}) == 4,
                          f"double step edges {e1},{q1},{e2},{q2} not distinct")
            mid_active, mid_lists = _apply_pair(
                g, active, lists, ReducingSet(min(e1, q1), max(e1, q1), c1),
                a, b, centers)
            active2, lists2 = _apply_pair(
                g, mid_active, mid_lists, ReducingSet(min(e2, q2), max(e2, q2), c2),
                a, b, centers)
            out = recurse(active2, lists2, level + 1)
            out[e1] = c1
            out[q1] = c1
            out[e2] = c2
            out[q2] = c2
            return out

        # 5. at most one side: make it the a side, then the weak phase
        stats.hit("center-weak-entry")
        aa, bb = (b, a) if b_split else (a, b)
        bounds = WeakBounds.compute(g, active, aa, bb, v1, v2)
        bad = bounds.violations(lists)
        monitor.check("weak-bounds", not bad, "weak entry: " + "; ".join(bad[:4]))
        return weak_phase(g, active, aa, bb, v1, lists, bounds, stats=stats)

    return recurse(frozenset(active), lists, 0)


def _straddle_pair(g: Multigraph, active: frozenset[int], lists: ColorLists,
                   c: int, a: int, b: int, near: int, far: int,
                   a_first: bool) -> Tuple[int, int]:
    """Edges for one splitting color: (apex1, near) paired with (apex2, third).

    For an a-side color: an edge of E(a, near) and an edge of E(b, v_i)
    with v_i neither near nor far; mirrored otherwise.
    """
    first_apex, second_apex = (a, b) if a_first else (b, a)
    e_pick = None
    for e in sorted(edges_between(g, first_apex, near, active)):
        if c in lists.of(e):
            e_pick = e
            break
    q_pick = None
    for q in sorted(active):
        u, w = g.endpoints(q)
        if second_apex not in (u, w):
            continue
        third = u if u != second_apex else w
        if third in (a, b, near, far):
            continue
        if c in lists.of(q):
            q_pick = q
            break
    monitor.check("double-step-shape", e_pick is not None and q_pick is not None,
                  f"no straddling pair for splitting color {c}")
    return e_pick, q_pick
