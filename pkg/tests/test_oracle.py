import pytest

from lichor import (ColorLists, Multigraph, OracleSizeError, brute_force_chi,
                    brute_force_list_color, find_odd_cycle, konig_color,
                    orient, verify_coloring, verify_kernel)


def whole(g):
    return frozenset(g.edge_ids)


TRIANGLE = Multigraph(3, [(0, 1), (1, 2), (0, 2)])


def test_list_color_infeasible_one_color():
    lists = ColorLists({e: {1} for e in range(3)})
    assert brute_force_list_color(TRIANGLE, whole(TRIANGLE), lists) is None


def test_list_color_feasible_triangle():
    lists = ColorLists({0: {1, 2}, 1: {2, 3}, 2: {1, 3}})
    out = brute_force_list_color(TRIANGLE, whole(TRIANGLE), lists)
    assert out is not None
    assert verify_coloring(TRIANGLE, whole(TRIANGLE), lists, out)


def test_list_color_single_edge():
    g = Multigraph(2, [(0, 1)])
    assert brute_force_list_color(g, whole(g), ColorLists({0: {7}})) == {0: 7}


def test_list_color_size_cap():
    g = Multigraph(2, [(0, 1)] * 15)
    lists = ColorLists({e: {e} for e in g.edge_ids})
    with pytest.raises(OracleSizeError):
        brute_force_list_color(g, whole(g), lists)
    assert brute_force_list_color(g, whole(g), lists, cap=15) is not None


def test_chi_examples():
    assert brute_force_chi(Multigraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])) == 3
    assert brute_force_chi(Multigraph(2, [(0, 1), (0, 1)])) == 2
    assert brute_force_chi(Multigraph(3, [])) == 0


def test_chi_size_cap():
    g = Multigraph(2, [(0, 1)] * 13)
    with pytest.raises(OracleSizeError):
        brute_force_chi(g)


def test_verify_coloring_accepts_valid():
    assert verify_coloring(TRIANGLE, whole(TRIANGLE), None, {0: 1, 1: 2, 2: 3})


def test_verify_coloring_names_parallel_conflict():
    g = Multigraph(2, [(0, 1), (0, 1)])
    out = verify_coloring(g, whole(g), None, {0: 1, 1: 1})
    assert not out and "0" in out.reason and "1" in out.reason


def test_verify_coloring_names_list_violation():
    out = verify_coloring(TRIANGLE, whole(TRIANGLE),
                          ColorLists({0: {5}, 1: {6}, 2: {7}}),
                          {0: 5, 1: 6, 2: 9})
    assert not out and "edge 2" in out.reason


def test_verify_coloring_requires_totality():
    assert not verify_coloring(TRIANGLE, whole(TRIANGLE), None, {0: 1, 1: 2})


def star_orientation():
    g = Multigraph(4, [(0, 1), (0, 2), (0, 3)])
    blk = whole(g)
    col = konig_color(g, blk, (frozenset({0}), frozenset({1, 2, 3})))
    return g, orient(g, blk, (frozenset({0}), frozenset({1, 2, 3})), col)


def test_verify_kernel_star():
    g, d = star_orientation()
    top = max(whole(g), key=lambda e: d.color[e])
    assert verify_kernel(d, whole(g), frozenset({top}))
    assert not verify_kernel(d, whole(g), frozenset({0, 1}))  # adjacent pair
    assert not verify_kernel(d, whole(g), frozenset())  # nothing absorbs


def test_odd_cycle_search():
    c5 = Multigraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    cyc = find_odd_cycle(c5)
    assert cyc is not None and len(cyc) == 5
    c6 = Multigraph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
    assert find_odd_cycle(c6) is None
    assert find_odd_cycle(TRIANGLE) is None  # triangles are below the bar
    k4 = Multigraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert find_odd_cycle(k4) is None
    # C7 with a chord still contains the 7-cycle
    c7 = Multigraph(7, [(i, (i + 1) % 7) for i in range(7)] + [(0, 3)])
    assert find_odd_cycle(c7) is not None
