import random

import pytest

from lichor import (BlockKind, GenParams, InputError, block_order,
                    chromatic_index, classify_block, decompose_blocks,
                    find_odd_cycle, first_reducing_set, gen_line_perfect,
                    gen_lists, gen_transversal_instance, identical_lists)


def test_params_validate_counts():
    with pytest.raises(InputError):
        GenParams(seed=1, block_count=0)
    with pytest.raises(InputError):
        GenParams(seed=1, max_multiplicity=-2)


def test_single_fan_block_classifies():
    g = gen_line_perfect(GenParams(seed=3, block_count=1, kind_weights=(0, 0, 1)))
    dec = decompose_blocks(g)
    assert len(dec.blocks) == 1
    assert classify_block(g, dec.blocks[0]).kind == BlockKind.K11N


def test_single_four_vertex_block_classifies():
    g = gen_line_perfect(GenParams(seed=3, block_count=1, kind_weights=(0, 1, 0)))
    dec = decompose_blocks(g)
    assert classify_block(g, dec.blocks[0]).kind in (BlockKind.FOUR_VERTEX,
                                                     BlockKind.BIPARTITE)


def test_requested_blocks_survive_decomposition():
    g = gen_line_perfect(GenParams(seed=12, block_count=3))
    dec = decompose_blocks(g)
    assert len(dec.blocks) == 3
    assert len(block_order(dec, 0)) == 3


def test_every_output_classifies():
    for seed in range(120):
        rng = random.Random(seed)
        g = gen_line_perfect(GenParams(seed=seed, block_count=rng.randint(1, 4),
                                       max_multiplicity=rng.randint(1, 3),
                                       max_centers=rng.randint(3, 5)))
        dec = decompose_blocks(g)
        for blk in dec.blocks:
            classify_block(g, blk)  # NotLinePerfectError would fail the test
        assert find_odd_cycle(g) is None


def test_deterministic_given_seed():
    p = GenParams(seed=42, block_count=3, max_multiplicity=3, max_centers=4)
    assert gen_line_perfect(p) == gen_line_perfect(p)
    assert gen_line_perfect(p) != gen_line_perfect(
        GenParams(seed=43, block_count=3, max_multiplicity=3, max_centers=4))


def test_gen_lists_sizes_and_universe():
    g = gen_line_perfect(GenParams(seed=9, block_count=2))
    chi = chromatic_index(g)
    lists = gen_lists(g, chi, random.Random(1))
    for e in g.edge_ids:
        assert len(lists.of(e)) == chi
        assert all(1 <= c <= 2 * chi for c in lists.of(e))


def test_identical_lists():
    g = gen_line_perfect(GenParams(seed=9))
    lists = identical_lists(g, 3)
    assert all(lists.of(e) == {1, 2, 3} for e in g.edge_ids)


def test_transversal_instances_have_no_reducing_sets():
    for seed in range(200):
        rng = random.Random(seed)
        g, lists = gen_transversal_instance(rng)
        assert first_reducing_set(g, frozenset(g.edge_ids), lists) is None
        assert all(lists.of(e) for e in g.edge_ids)
