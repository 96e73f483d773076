import itertools
import random

import pytest

from k4trees import generators as gen
from k4trees import oracles
from k4trees.decomposition import (
    block_graph,
    blocks_and_cutvertices,
    find_special_edge,
    is_k4_minor_free,
    is_outerplanar,
    outer_hamiltonian_cycle,
    rooted_block_tree,
)
from k4trees.graph_core import Graph, InputError, c_pair, is_connected
from k4trees.n2c_weights import n2c_table

from conftest import connected_graphs, k4_free_graphs


def two_triangles():
    return Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


def test_blocks_examples():
    dec = blocks_and_cutvertices(gen.path(3))
    assert [sorted(b.edges) for b in dec.blocks] == [[(0, 1)], [(1, 2)]]
    assert dec.cutvertices == {1}
    dec = blocks_and_cutvertices(gen.cycle(4))
    assert len(dec.blocks) == 1 and not dec.cutvertices
    dec = blocks_and_cutvertices(two_triangles())
    assert sorted(sorted(b.vertices) for b in dec.blocks) == [[0, 1, 2], [0, 3, 4]]
    assert dec.cutvertices == {0}


def test_blocks_reject_disconnected():
    with pytest.raises(InputError):
        blocks_and_cutvertices(Graph.from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(InputError):
        blocks_and_cutvertices(Graph.from_edges(1, []))


def test_block_invariants_small():
    for G in connected_graphs(6):
        if G.n < 2:
            continue
        dec = blocks_and_cutvertices(G)
        seen = [e for b in dec.blocks for e in b.edges]
        assert sorted(seen) == G.edges()
        for (i, a), (j, b) in itertools.combinations(enumerate(dec.blocks), 2):
            assert len(a.vertices & b.vertices) <= 1
        shared = {v for v in range(G.n) if len(dec.blocks_at(v)) >= 2}
        assert shared == dec.cutvertices
        # brute force cutvertices
        table = oracles.component_table(G)
        assert dec.cutvertices == {v for v in range(G.n) if table[1 << v] > 1}
        for e, i in dec.block_of_edge.items():
            assert e in dec.blocks[i].edges
        for b in dec.blocks:
            B, _ = block_graph(G, b)
            assert B.m == len(b.edges)


def test_find_special_edge_examples():
    G = gen.theta()
    [block] = blocks_and_cutvertices(G).blocks
    assert find_special_edge(G, block, 0) == (0, 2)
    assert c_pair(G, 0, 2) == 1 and c_pair(G, 0, 1) == 3
    K2 = gen.path(2)
    assert find_special_edge(K2, blocks_and_cutvertices(K2).blocks[0], 0) == (0, 1)
    C5 = gen.cycle(5)
    x, y = find_special_edge(C5, blocks_and_cutvertices(C5).blocks[0], 0)
    assert x == 0 and y in (1, 4) and c_pair(C5, x, y) == 1


def test_find_special_edge_skips_n2c():
    # theta plus the edge 01: edge 01 has c = 3 and must be skipped
    G = Graph.from_edges(5, gen.theta().edges() + [(0, 1)])
    [block] = blocks_and_cutvertices(G).blocks
    assert c_pair(G, 0, 1) == 3
    assert find_special_edge(G, block, 1)[1] != 0


def test_find_special_edge_errors():
    G = two_triangles()
    dec = blocks_and_cutvertices(G)
    with pytest.raises(InputError):
        find_special_edge(G, dec.blocks[0], 4 if 4 not in dec.blocks[0].vertices else 1)


def test_rooted_block_tree_invariants():
    for seed in range(30):
        G = gen.random_series_parallel(25, seed, pendant_rate=0.3)
        x = seed % G.n
        dec = blocks_and_cutvertices(G)
        block = dec.blocks[dec.blocks_at(x)[0]]
        root = find_special_edge(G, block, x)
        rt = rooted_block_tree(G, root, dec)
        assert rt.root_edge == root
        for i, (r, s) in rt.special_edge.items():
            assert tuple(sorted((r, s))) in dec.blocks[i].edges
            assert c_pair(G, r, s) <= 1
            if i != rt.root_block:
                assert r == rt.parent_cutvertex[i]
                assert r in dec.blocks[rt.parent_block[i]].vertices
        # parent pointers reach the root
        for i in range(len(dec.blocks)):
            steps = 0
            while i != rt.root_block:
                i = rt.parent_block[i]
                steps += 1
                assert steps <= len(dec.blocks)
        assert x in rt.marked()


def test_rooted_block_tree_rejects_n2c_root():
    G = Graph.from_edges(5, gen.theta().edges() + [(0, 1)])
    with pytest.raises(InputError):
        rooted_block_tree(G, (0, 1))
    with pytest.raises(InputError):
        rooted_block_tree(G, (2, 3))


def test_outerplanar_examples():
    G = Graph.from_edges(4, gen.cycle(4).edges() + [(0, 2)])
    assert is_outerplanar(G)
    assert outer_hamiltonian_cycle(G) == [0, 1, 2, 3]
    assert oracles.count_hamiltonian_cycles(G) == 1
    assert not is_outerplanar(gen.complete(4))
    assert not is_outerplanar(gen.complete_bipartite(2, 3))
    with pytest.raises(InputError):
        outer_hamiltonian_cycle(gen.complete_bipartite(2, 3))
    with pytest.raises(InputError):
        outer_hamiltonian_cycle(gen.path(3))


def test_k4_minor_free_examples():
    assert is_k4_minor_free(gen.star(5))
    assert is_k4_minor_free(gen.path(6))
    assert is_k4_minor_free(gen.theta())
    assert not is_k4_minor_free(gen.complete(4))
    assert not is_k4_minor_free(gen.complete(5))
    # subdivided K4 still has a K4 minor
    sub = Graph.from_edges(10, [(0, 4), (4, 1), (0, 5), (5, 2), (0, 6), (6, 3),
                                (1, 7), (7, 2), (1, 8), (8, 3), (2, 9), (9, 3)])
    assert not is_k4_minor_free(sub)


def test_k4_minor_free_matches_oracle():
    for G in connected_graphs(7):
        assert is_k4_minor_free(G) == (not oracles.has_k4_minor(G))


def test_outerplanar_matches_minor_oracles():
    for G in connected_graphs(6):
        expected = not oracles.has_k4_minor(G) and not oracles.has_k23_minor(G)
        assert is_outerplanar(G) == expected


def _blocks_of_size(G, lo):
    for b in blocks_and_cutvertices(G).blocks:
        if len(b.vertices) >= lo:
            yield block_graph(G, b)[0]


def test_outer_cycle_is_unique_hamiltonian_cycle():
    rng = random.Random(1)
    samples = [gen.maximal_outerplanar(n, seed) for n in range(3, 16) for seed in range(3)]
    for G in list(connected_graphs(6)) + samples:
        if not is_outerplanar(G) or G.n < 3:
            continue
        for B in _blocks_of_size(G, 3):
            cyc = outer_hamiltonian_cycle(B)
            assert sorted(cyc) == list(range(B.n))
            assert all(B.has_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1]))
            assert oracles.count_hamiltonian_cycles(B) == 1
    # dropping random edges of a maximal outerplanar graph keeps it outerplanar
    for seed in range(10):
        G = gen.maximal_outerplanar(12, seed)
        es = G.edges()
        rng.shuffle(es)
        H = Graph.from_edges(12, es[: len(es) - 4])
        assert is_outerplanar(H)


def test_special_edge_exists_everywhere_small():
    for G in connected_graphs(6):
        if G.n < 2:
            continue
        dec = blocks_and_cutvertices(G)
        for block in dec.blocks:
            for x in block.vertices:
                x_, y = find_special_edge(G, block, x)
                assert x_ == x and c_pair(G, x, y) <= 1


def test_block_pair_counts_match_graph_small():
    for G in connected_graphs(6):
        if G.n < 2:
            continue
        dec = blocks_and_cutvertices(G)
        for u, v in itertools.combinations(range(G.n), 2):
            i = dec.block_containing(u, v)
            if i is None:
                assert c_pair(G, u, v) <= 1
                continue
            B, ids = block_graph(G, dec.blocks[i])
            pos = {w: k for k, w in enumerate(ids)}
            assert c_pair(B, pos[u], pos[v]) == c_pair(G, u, v)


def test_no_n2c_means_outerplanar_small():
    for G in k4_free_graphs(7):
        if G.n >= 2 and not n2c_table(G):
            assert is_outerplanar(G)


def test_disconnected_input_is_fine_for_recognisers():
    G = Graph.from_edges(7, gen.complete(4).edges() + [(5, 6)])
    assert not is_connected(G)
    assert not is_k4_minor_free(G)
    assert not is_outerplanar(G)
