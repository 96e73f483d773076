import itertools
import random
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from k4trees import generators as gen
from k4trees import n2c_weights, oracles, tree_builder
from k4trees.decomposition import blocks_and_cutvertices, rooted_block_tree
from k4trees.graph_core import Graph, InputError, InvariantViolation, c_pair
from k4trees.n2c_weights import ViolationCertificate, WeightAssignment, make_budget
from k4trees.tree_builder import BuildInstance, SpanningTree, build, tree_to_walk, verify_tree

from conftest import k4_free_graphs


def checked(G, f, x=0):
    T = tree_builder.build_degree_bounded_tree(G, f, x)
    assert isinstance(T, SpanningTree)
    assert verify_tree(G, f, T, T.marked | {x}, T.special) == []
    return T


def test_k2_and_single_vertex():
    T = checked(gen.path(2), 2)
    assert T.edges == ((0, 1),)
    T = tree_builder.build_degree_bounded_tree(Graph.from_edges(1, []), 2)
    assert T.edges == ()
    assert tree_to_walk(Graph.from_edges(1, []), T) == [0]


def test_cycle_gives_hamiltonian_path():
    for n in (3, 5, 6, 9):
        G = gen.cycle(n)
        for x in range(n):
            T = checked(G, 2, x)
            assert T.degree(x) == 1
            assert max(T.degrees()) <= 2


def test_c5_root_edge_is_dropped():
    G = gen.cycle(5)
    omega = n2c_weights.assign_weights(G, 2)
    for r, s in G.edges():
        T = build(BuildInstance(G, make_budget(G, 2), omega, rooted_block_tree(G, (r, s))))
        assert set(T.edges) == set(G.edges()) - {(r, s)}


def test_theta_with_room_at_pole():
    G = gen.theta()
    f = (3, 2, 2, 2, 2)
    for x in range(G.n):
        T = checked(G, f, x)
        assert T.degree(0) <= 3
        assert oracles.exists_degree_bounded_spanning_tree(G, f, T.marked | {x})


def test_tree_input_is_returned():
    rng = random.Random(3)
    for n in range(2, 30):
        edges = [(rng.randrange(v), v) for v in range(1, n)]
        G = Graph.from_edges(n, edges)
        f = [G.degree(v) + 1 for v in range(n)]
        T = checked(G, f, rng.randrange(n))
        assert set(T.edges) == set(G.edges())


def test_triangle_pendants_certificate():
    lg, f = gen.triangle_pendants(2, 2, 2)
    out = tree_builder.build_degree_bounded_tree(lg.graph, f)
    assert isinstance(out, ViolationCertificate)
    assert out.verify(lg.graph, f)
    # a corner alone already fails; the corner set is exactly tight
    assert (out.U, out.observed, out.budget) == ({0}, 2, 1)
    cert = n2c_weights.certificate_for(lg.graph, f, {0, 1, 2})
    assert (cert.observed, cert.budget) == (3, 3)


def test_rejects_bad_input():
    with pytest.raises(InputError):
        tree_builder.build_degree_bounded_tree(gen.complete(4), 3)
    with pytest.raises(InputError):
        tree_builder.build_degree_bounded_tree(Graph.from_edges(3, [(0, 1)]), 2)
    with pytest.raises(InputError):
        tree_builder.build_degree_bounded_tree(gen.path(3), 2, x=5)


def test_build_rejects_n2c_special_edge():
    G = Graph.from_edges(5, gen.theta().edges() + [(0, 1)])
    with pytest.raises(InputError):
        rooted_block_tree(G, (0, 1))


def test_verify_tree_examples():
    G = gen.cycle(4)
    assert verify_tree(G, 2, [(0, 1), (1, 2), (2, 3)]) == []
    assert "not spanning/connected" in verify_tree(G, 2, [(0, 1), (1, 2)])
    assert any("not in graph" in p for p in verify_tree(G, 2, [(0, 2), (1, 2), (2, 3)]))
    assert any("not acyclic" in p for p in verify_tree(G, 2, G.edges()))
    assert any("marked vertex 1" in p for p in verify_tree(G, 2, [(0, 1), (1, 2), (2, 3)], {1}))
    report = verify_tree(G, 2, [(0, 1), (1, 2), (2, 3)], rs_edges=[((0, 1), 1), ((3, 0), 0)])
    assert len(report) == 2


def test_verify_tree_flags_tightness_example():
    lg, f = gen.triangle_pendants(2, 2, 2)
    G = lg.graph
    # every spanning tree overloads some corner; take the one through x
    T = [(0, 1), (0, 2)] + [(v, u) for v in range(3) for u in G.adj[v] if u >= 3]
    assert not oracles.exists_degree_bounded_spanning_tree(G, f, set())
    report = verify_tree(G, f, T)
    assert report == ["degree 3 at 0 exceeds f = 2"]


def test_walk_examples():
    P = gen.path(3)
    assert tree_to_walk(P, P.edges()) == [0, 1, 2, 1]
    S = gen.star(3)
    assert tree_to_walk(S, S.edges()) == [0, 1, 0, 2, 0, 3]
    with pytest.raises(InputError):
        tree_to_walk(gen.cycle(4), gen.cycle(4).edges())
    with pytest.raises(InputError):
        tree_to_walk(P, [(0, 1)])


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 1000), st.integers(0, 10**9))
def test_walk_repeats_equal_degrees(n, seed):
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    G = Graph.from_edges(n, edges)
    walk = tree_to_walk(G, edges)
    counts = Counter(walk)
    if n == 1:
        assert walk == [0]
        return
    assert all(counts[v] == G.degree(v) for v in range(n))
    assert len(walk) == 2 * (n - 1)
    assert all(G.has_edge(a, b) for a, b in zip(walk, walk[1:] + walk[:1]))


def _omega(G, f):
    try:
        return n2c_weights.assign_weights(G, f)
    except InvariantViolation:
        return None


def test_soundness_exhaustive_small():
    """Whenever weights exist, every root choice yields a valid tree."""
    builds = 0
    for G in k4_free_graphs(6):
        if G.n < 2:
            continue
        for f in itertools.product((2, 3), repeat=G.n):
            omega = _omega(G, f)
            if not isinstance(omega, WeightAssignment):
                continue
            for x in range(G.n):
                checked(G, f, x)
                builds += 1
    assert builds > 1000


def test_soundness_sampled_7_8():
    rng = random.Random(11)
    graphs = [G for G in k4_free_graphs(7) if G.n == 7]
    graphs += [gen.random_series_parallel(8, s) for s in range(40)]
    builds = 0
    for G in graphs:
        for _ in range(4):
            f = tuple(rng.choice((2, 3)) for _ in range(G.n))
            if isinstance(_omega(G, f), WeightAssignment):
                checked(G, f, rng.randrange(G.n))
                builds += 1
    assert builds > 100


def test_tree_avoids_virtual_edges():
    # 0 and 1 are not adjacent, so the first split adds a virtual edge 01
    G = gen.theta(paths=4)
    f = (4, 3, 2, 2, 2, 2)
    T = checked(G, f, 2)
    assert (0, 1) not in T.edges


def test_trees_exist_where_builder_succeeds():
    for G in k4_free_graphs(6):
        if G.n < 2:
            continue
        for k in (2, 3):
            T = tree_builder.build_degree_bounded_tree(G, k)
            if isinstance(T, SpanningTree):
                H = nx.Graph(list(T.edges))
                assert nx.is_tree(H) and H.number_of_nodes() == G.n


def test_special_edges_honoured_on_random_sp():
    for seed in range(25):
        G = gen.random_series_parallel(40, seed, pendant_rate=0.3)
        f = [c + 3 for c in [len(blocks_and_cutvertices(G).blocks_at(v)) for v in range(G.n)]]
        T = checked(G, f, seed % G.n)
        for (r, s), c in T.special:
            assert c == c_pair(G, r, s) and c <= 1
