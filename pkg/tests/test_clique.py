import itertools
import random

import pytest

from lichor import (ColorLists, InputError, InvariantError, Multigraph,
                    Splitting, SolveStats, WeakBounds, brute_force_list_color,
                    classify_splitting, clique_edge_bound, demand_fan_apex,
                    demand_fan_center, demand_four_vertex, solve_k4,
                    solve_k11n_apex, solve_k11n_center, monitor,
                    triangle_profile, verify_coloring, weak_phase)


def whole(g):
    return frozenset(g.edge_ids)


def fan(ab, av, bv):
    """Fan on apexes 0, 1 with centers 2..; multiplicities per center."""
    edges = [(0, 1)] * ab
    for i, (ma, mb) in enumerate(zip(av, bv)):
        edges += [(0, 2 + i)] * ma + [(1, 2 + i)] * mb
    return Multigraph(2 + len(av), edges)


class TestTriangleProfile:
    def test_simple_fan_nothing_big(self):
        g = fan(1, [1, 1, 1], [1, 1, 1])  # d(a)=d(b)=4, every t=3
        p = triangle_profile(g, whole(g), 0, 1)
        assert p.t_of == {2: 3, 3: 3, 4: 3}
        assert not p.big and not p.great

    def test_doubled_edge_makes_big(self):
        g = fan(1, [2, 1], [1, 1])  # d(a)=4, d(b)=3, t(v1)=4, t(v2)=3
        p = triangle_profile(g, whole(g), 0, 1)
        assert p.t_of == {2: 4, 3: 3}
        assert p.big == {2} and not p.great

    def test_single_triangle_great(self):
        g = fan(1, [1], [1])  # d(a)=d(b)=2, t=3
        p = triangle_profile(g, whole(g), 0, 1)
        assert p.great == {2}

    def test_rejects_center_edges(self):
        g = Multigraph(4, [(0, 2), (1, 2), (2, 3)])
        with pytest.raises(InputError):
            triangle_profile(g, whole(g), 0, 1)


def k4_graph(mults):
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    edges = []
    for (u, v), m in zip(pairs, mults):
        edges += [(u, v)] * m
    return Multigraph(4, edges)


class TestSolveK4:
    def test_simple_k4_three_colors(self):
        g = k4_graph([1] * 6)
        lists = ColorLists({e: {1, 2, 3} for e in g.edge_ids})
        assert brute_force_list_color(g, whole(g), lists) is not None
        col = solve_k4(g, whole(g), 0, lists)
        assert verify_coloring(g, whole(g), lists, col)

    def test_single_edge(self):
        g = Multigraph(4, [(1, 2)])
        assert solve_k4(g, whole(g), 0, ColorLists({0: {1}})) == {0: 1}

    def test_transversal_from_start(self):
        # pairwise disjoint lists on the non-adjacent pairs: SDR directly
        g = k4_graph([1] * 6)
        lists = ColorLists({0: {1, 10, 11}, 1: {2, 12, 13}, 2: {3, 14, 15},
                            3: {4, 16, 17}, 4: {5, 18, 19}, 5: {6, 20, 21}})
        stats = SolveStats()
        col = solve_k4(g, whole(g), 0, lists, stats=stats)
        assert verify_coloring(g, whole(g), lists, col)
        assert stats.branches["k4-sdr"] == 1 and not stats.branches["k4-reduce"]

    def test_rejects_five_vertices(self):
        g = Multigraph(5, [(0, 1), (2, 3), (3, 4)])
        with pytest.raises(InputError):
            solve_k4(g, whole(g), 0, ColorLists({0: {1}, 1: {2}, 2: {3}}))

    def test_rejects_undersized_lists(self):
        g = k4_graph([1] * 6)
        lists = ColorLists({e: {1, 2} for e in g.edge_ids})
        with pytest.raises(InvariantError):
            solve_k4(g, whole(g), 0, lists)

    def test_random_demand_lists_always_color(self):
        done = 0
        for seed in itertools.count():
            rng = random.Random(seed)
            mults = [rng.choice([0, 0, 1, 1, 1, 2]) for _ in range(6)]
            g = k4_graph(mults)
            if not 1 <= g.edge_count <= 7:
                continue
            v = rng.randrange(4)
            need = demand_four_vertex(g, whole(g), v)
            chi = clique_edge_bound(g, whole(g))
            lists = ColorLists({e: rng.sample(range(1, 2 * chi + 1),
                                              max(1, need.required[e]))
                                for e in g.edge_ids})
            col = solve_k4(g, whole(g), v, lists)
            assert verify_coloring(g, whole(g), lists, col), seed
            done += 1
            if done == 120:
                break


class TestClassifySplitting:
    def fixture(self):
        g = fan(1, [1, 1, 1], [1, 1, 1])
        # ids: 0=(a,b), 1=(a,v1), 2=(b,v1), 3=(a,v2), 4=(b,v2), 5=(a,v3), 6=(b,v3)
        return g

    def test_a_splitting(self):
        g = self.fixture()
        lists = ColorLists({0: {9}, 1: {5, 1}, 2: {2}, 3: {5, 3}, 4: {4},
                            5: {6}, 6: {5, 7}})
        out = classify_splitting(g, whole(g), lists, 5, a=0, b=1, v1=2, v2=3)
        assert out == Splitting.A

    def test_b_splitting_mirror(self):
        g = self.fixture()
        lists = ColorLists({0: {9}, 1: {1}, 2: {5, 2}, 3: {3}, 4: {5, 4},
                            5: {5, 6}, 6: {7}})
        out = classify_splitting(g, whole(g), lists, 5, a=0, b=1, v1=2, v2=3)
        assert out == Splitting.B

    def test_neither(self):
        g = self.fixture()
        lists = ColorLists({0: {9}, 1: {5, 1}, 2: {2}, 3: {3}, 4: {5, 4},
                            5: {6}, 6: {7}})
        out = classify_splitting(g, whole(g), lists, 5, a=0, b=1, v1=2, v2=3)
        assert out == Splitting.NONE

    def test_requires_shared_color(self):
        g = self.fixture()
        lists = ColorLists({e: {e + 1} for e in g.edge_ids})
        with pytest.raises(InputError):
            classify_splitting(g, whole(g), lists, 1, a=0, b=1, v1=2, v2=3)


def demand_lists(rng, required, chi):
    return ColorLists({e: rng.sample(range(1, 2 * chi + 1), max(1, need))
                       for e, need in required.items()})


class TestFanApex:
    def test_simple_k112(self):
        g = fan(1, [1, 1], [1, 1])
        need = demand_fan_apex(g, whole(g), 0, 1)
        rng = random.Random(5)
        lists = demand_lists(rng, dict(need.required), max(need.required.values()))
        col = solve_k11n_apex(g, whole(g), 0, 1, lists)
        assert verify_coloring(g, whole(g), lists, col)

    def test_single_triangle(self):
        g = fan(1, [1], [1])
        # d(a)=2 on E(a); max(d(a), d(b), t)=3 on E(b, v1)
        need = demand_fan_apex(g, whole(g), 0, 1)
        assert dict(need.required) == {0: 2, 1: 2, 2: 3}
        lists = ColorLists({0: {1, 2}, 1: {1, 3}, 2: {1, 2, 3}})
        assert brute_force_list_color(g, whole(g), lists) is not None
        col = solve_k11n_apex(g, whole(g), 0, 1, lists)
        assert verify_coloring(g, whole(g), lists, col)

    def test_disjoint_lists_direct_sdr(self):
        g = fan(1, [1, 1], [1, 1])
        lists = ColorLists({0: {1, 2, 3}, 1: {11, 12, 13}, 2: {21, 22, 23},
                            3: {31, 32, 33}, 4: {41, 42, 43}})
        stats = SolveStats()
        col = solve_k11n_apex(g, whole(g), 0, 1, lists, stats=stats)
        assert stats.branches["apex-sdr"] == 1
        assert verify_coloring(g, whole(g), lists, col)

    def test_random_fans(self):
        for seed in range(150):
            rng = random.Random(20_000 + seed)
            n = rng.randint(1, 4)
            g = fan(rng.randint(1, 2),
                    [rng.randint(1, 2) for _ in range(n)],
                    [rng.randint(1, 2) for _ in range(n)])
            need = demand_fan_apex(g, whole(g), 0, 1)
            lists = demand_lists(rng, dict(need.required), max(need.required.values()))
            col = solve_k11n_apex(g, whole(g), 0, 1, lists)
            assert verify_coloring(g, whole(g), lists, col), seed


class TestFanCenter:
    def test_simple_k113(self):
        g = fan(1, [1, 1, 1], [1, 1, 1])
        need = demand_fan_center(g, whole(g), 0, 1, 2)
        assert need.required[1] == 2 and need.required[2] == 2  # E(v1): d(v1)
        assert need.required[0] == 4  # E(a,b): max(4, 4, 3)
        rng = random.Random(11)
        lists = demand_lists(rng, dict(need.required), 4)
        col = solve_k11n_center(g, whole(g), 0, 1, 2, lists)
        assert verify_coloring(g, whole(g), lists, col)

    def test_ab_color_outside_v1_fires_first(self):
        g = fan(1, [1], [1])
        # A(a,b) = {9} not within A(v1) = {1,2,3}
        lists = ColorLists({0: {9, 1, 2}, 1: {1, 2}, 2: {2, 3}})
        stats = SolveStats()
        col = solve_k11n_center(g, whole(g), 0, 1, 2, lists, stats=stats)
        assert stats.branches["center-ab"] >= 1
        assert verify_coloring(g, whole(g), lists, col)

    def test_transversal_from_start(self):
        g = fan(1, [1, 1], [1, 1])
        # A(a,b) inside A(v1), and the two non-adjacent pairs share nothing
        lists = ColorLists({0: {11, 12, 21}, 1: {11, 12}, 2: {21, 22},
                            3: {31, 32, 33}, 4: {41, 42, 43}})
        stats = SolveStats()
        col = solve_k11n_center(g, whole(g), 0, 1, 2, lists, stats=stats)
        # no reducing step is ever applied; one terminal matching call
        assert stats.branches["center-sdr"] + stats.branches["weak-sdr"] == 1
        assert all(stats.branches[b] == 0 for b in
                   ("center-ab", "center-no-big-v1", "center-no-big-any",
                    "center-v1v2", "center-double", "weak-a", "weak-b", "weak-c"))
        assert verify_coloring(g, whole(g), lists, col)

    def test_random_fans(self):
        for seed in range(200):
            rng = random.Random(40_000 + seed)
            n = rng.randint(1, 4)
            g = fan(rng.randint(1, 2),
                    [rng.randint(1, 2) for _ in range(n)],
                    [rng.randint(1, 2) for _ in range(n)])
            need = demand_fan_center(g, whole(g), 0, 1, 2)
            lists = demand_lists(rng, dict(need.required), max(need.required.values()))
            col = solve_k11n_center(g, whole(g), 0, 1, 2, lists)
            assert verify_coloring(g, whole(g), lists, col), seed

    def test_cascade_covers_every_branch(self):
        seen = set()
        for seed in range(3000):
            rng = random.Random(seed)
            n = rng.randint(3, 5)
            g = fan(rng.randint(1, 2),
                    [rng.randint(1, 2) for _ in range(n)],
                    [rng.randint(1, 2) for _ in range(n)])
            if g.edge_count > 18:
                continue
            need = demand_fan_center(g, whole(g), 0, 1, 2)
            lists = demand_lists(rng, dict(need.required), max(need.required.values()))
            stats = SolveStats()
            col = solve_k11n_center(g, whole(g), 0, 1, 2, lists, stats=stats)
            assert verify_coloring(g, whole(g), lists, col), seed
            seen.update(stats.branches)
        for branch in ("center-ab", "center-no-big-v1", "center-no-big-any",
                       "center-v1v2", "center-weak-entry", "center-sdr",
                       "weak-a", "weak-b", "weak-sdr"):
            assert branch in seen, branch


def double_split_instance():
    """Crafted lists with one a-splitting and one b-splitting color, no
    reducing set joining E(v1) and E(v2), and v2 big."""
    edges = ([(0, 1)] + [(0, 2)] * 2 + [(1, 2)] * 2 + [(0, 3)] * 4 + [(1, 3)] * 4
             + [(0, 4)] + [(1, 4)] + [(0, 5)] + [(1, 5)])
    g = Multigraph(6, edges)
    lists = ColorLists({
        0: set(range(1, 10)),
        1: {1, 2, 3, 100}, 2: {4, 5, 6, 100},
        3: {7, 8, 9, 200}, 4: {7, 8, 9, 200},
        5: {100, *range(10, 18)}, 6: {100, *range(10, 18)},
        7: {100, *range(10, 18)}, 8: {100, *range(10, 18)},
        9: {200, *range(20, 28)}, 10: {200, *range(20, 28)},
        11: {200, *range(20, 28)}, 12: {200, *range(20, 28)},
        13: set(range(30, 39)),
        14: {100, *range(40, 48)},
        15: {200, *range(50, 58)},
        16: set(range(60, 69)),
    })
    return g, lists


def test_double_splitting_step():
    g, lists = double_split_instance()
    stats = SolveStats()
    col = solve_k11n_center(g, whole(g), 0, 1, 2, lists, stats=stats)
    assert stats.branches["center-double"] >= 1
    assert verify_coloring(g, whole(g), lists, col)
    # the two splitting colors land on the straddling pairs
    assert col[1] == 100 and col[14] == 100
    assert col[9] == 200 and col[15] == 200


def weak_entry_instance():
    """The double-split instance with the b side stripped, so exactly one
    a-splitting color remains and the weak phase is entered directly."""
    g, _ = double_split_instance()
    lists = ColorLists({
        0: set(range(1, 10)),
        1: {1, 2, 3, 100}, 2: {4, 5, 6, 100},
        3: {7, 8, 9, 200}, 4: {7, 8, 9, 200},
        5: {100, *range(10, 18)}, 6: {100, *range(10, 18)},
        7: {100, *range(10, 18)}, 8: {100, *range(10, 18)},
        9: {200, *range(20, 28)}, 10: {200, *range(20, 28)},
        11: {200, *range(20, 28)}, 12: {200, *range(20, 28)},
        13: set(range(30, 39)),
        14: {100, *range(40, 48)},
        15: set(range(50, 59)),  # no 200 here: the b side never splits
        16: set(range(60, 69)),
    })
    return g, lists


def test_center_cascade_enters_weak_phase():
    g, lists = weak_entry_instance()
    stats = SolveStats()
    col = solve_k11n_center(g, whole(g), 0, 1, 2, lists, stats=stats)
    assert stats.branches["center-weak-entry"] == 1
    assert stats.branches["weak-a"] >= 1
    assert verify_coloring(g, whole(g), lists, col)


def test_weak_phase_direct_call():
    g, lists = weak_entry_instance()
    active = whole(g)
    p = triangle_profile(g, active, 0, 1)
    assert 3 in p.big
    bounds = WeakBounds.compute(g, active, 0, 1, 2, 3)
    assert not bounds.violations(lists)
    stats = SolveStats()
    col = weak_phase(g, active, 0, 1, 2, lists, bounds, stats=stats)
    assert verify_coloring(g, active, lists, col)
    assert stats.branches["weak-a"] >= 1 and stats.branches["weak-sdr"] == 1


def test_invariant_checks_executed_and_silent():
    before_fired = monitor.total_fired()
    performed = dict(monitor.performed)
    for seed in range(80):
        rng = random.Random(90_000 + seed)
        n = rng.randint(1, 4)
        g = fan(rng.randint(1, 2),
                [rng.randint(1, 2) for _ in range(n)],
                [rng.randint(1, 2) for _ in range(n)])
        need = demand_fan_center(g, whole(g), 0, 1, 2)
        lists = demand_lists(rng, dict(need.required), max(need.required.values()))
        solve_k11n_center(g, whole(g), 0, 1, 2, lists)
    for name in ("apex-degree-drop", "big-great-exclusive", "big-great-monotone",
                 "demand"):
        assert monitor.performed[name] > performed.get(name, 0), name
    assert monitor.total_fired() == before_fired


def test_weak_phase_third_center_branch():
    # add a color shared only by two third-center edges: after the (a)
    # branch clears, neither (a) nor (b) applies and branch (c) must fire
    g, lists = weak_entry_instance()
    bumped = {e: set(lists.of(e)) for e in g.edge_ids}
    bumped[13].add(300)  # (a, v3)
    bumped[16].add(300)  # (b, v4)
    lists = ColorLists(bumped)
    active = whole(g)
    bounds = WeakBounds.compute(g, active, 0, 1, 2, 3)
    assert not bounds.violations(lists)
    stats = SolveStats()
    col = weak_phase(g, active, 0, 1, 2, lists, bounds, stats=stats)
    assert stats.branches["weak-a"] >= 1
    assert stats.branches["weak-c"] >= 1
    assert verify_coloring(g, active, lists, col)
    assert col[13] == 300 and col[16] == 300
