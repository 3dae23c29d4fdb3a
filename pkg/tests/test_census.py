from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import directed_census, undirected_census
from triadic.census import (
    census_directed,
    census_directed_batch,
    census_undirected,
    census_undirected_batch,
    clique_union_census,
    count_intransitive_triples,
    flow_balance,
    intransitive_triples_batch,
    is_completely_balanced,
)
from triadic.generators import clique_union, star_graph
from triadic.graphs import Digraph, GraphError, UndirectedGraph, WeightedDigraph, direct
from triadic.karate import karate_graph


def random_undirected(rng, n, p):
    a = np.triu(rng.random((n, n)) < p, 1)
    return UndirectedGraph.from_adjacency(a | a.T)


def random_digraph(rng, n, p):
    a = rng.random((n, n)) < p
    np.fill_diagonal(a, False)
    return Digraph.from_adjacency(a)


def test_karate_census():
    c = census_undirected(karate_graph())
    assert c.counts == (3971, 1575, 393, 45)
    assert c.total == comb(34, 3)
    assert c[3] == 45


def test_karate_proportions_sum_to_one():
    assert census_undirected(karate_graph()).proportions().sum() == pytest.approx(1.0)


def test_star_census():
    # every triad through the hub has 2 edges, the rest are empty
    assert census_undirected(star_graph(10)).counts == (84, 0, 36, 0)


def test_two_triangles():
    g = clique_union(2, 3)
    assert census_undirected(g).counts == (0, 18, 0, 2)


def test_too_few_nodes():
    with pytest.raises(GraphError):
        census_undirected(UndirectedGraph(2, frozenset({(1, 2)})))


def test_fast_census_against_brute_force():
    rng = np.random.default_rng(20240501)
    for _ in range(200):
        g = random_undirected(rng, int(rng.integers(3, 13)), rng.random())
        assert census_undirected(g).counts == undirected_census(g.n, g.edges)


def test_batch_census_matches_single():
    rng = np.random.default_rng(7)
    graphs = [random_undirected(rng, 11, rng.random()) for _ in range(30)]
    batch = census_undirected_batch(np.stack([g.adjacency() for g in graphs]))
    assert [tuple(r) for r in batch] == [census_undirected(g).counts for g in graphs]


def test_directed_census_against_oracle():
    rng = np.random.default_rng(99)
    for _ in range(100):
        g = random_digraph(rng, int(rng.integers(3, 10)), rng.random())
        assert census_directed(g).counts == directed_census(g.n, g.arcs)


def test_directed_batch_matches_single():
    rng = np.random.default_rng(3)
    graphs = [random_digraph(rng, 8, 0.3) for _ in range(20)]
    batch = census_directed_batch(np.stack([g.adjacency() for g in graphs]))
    assert [tuple(r) for r in batch] == [census_directed(g).counts for g in graphs]


def test_symmetric_directed_census_maps_undirected_classes():
    g = karate_graph()
    d = census_directed(direct(g))
    u = census_undirected(g).counts
    assert (d.of_class(1), d.of_class(3), d.of_class(11), d.of_class(16)) == u
    assert sum(d.counts) == sum(u)


@given(st.integers(3, 12), st.floats(0, 1), st.integers(0, 2**32 - 1))
def test_intransitive_triples_twice_two_edge_triads(n, p, seed):
    g = random_undirected(np.random.default_rng(seed), n, p)
    t = count_intransitive_triples(direct(g))
    assert t.intransitive_triples == 2 * census_undirected(g)[2]


def test_karate_intransitive_triples():
    assert count_intransitive_triples(direct(karate_graph())).intransitive_triples == 786


def test_intransitive_batch_matches_single():
    rng = np.random.default_rng(5)
    graphs = [random_digraph(rng, 9, 0.4) for _ in range(10)]
    batch = intransitive_triples_batch(np.stack([g.adjacency() for g in graphs]))
    assert list(batch) == [count_intransitive_triples(g).intransitive_triples for g in graphs]


@pytest.mark.parametrize("k, n", [(1, 3), (1, 7), (2, 4), (3, 5), (4, 2)])
def test_clique_union_census_closed_form(k, n):
    assert clique_union_census(k, n) == census_undirected(clique_union(k, n)).counts


@given(st.integers(1, 2), st.integers(1, 6), st.integers(0, 2), st.randoms(use_true_random=False))
def test_clique_unions_are_completely_balanced(k, n, extra, rnd):
    if k * n + extra < 3:
        return
    g = clique_union(k, n)
    g = UndirectedGraph(g.n + extra, g.edges)
    perm = list(range(1, g.n + 1))
    rnd.shuffle(perm)
    g = UndirectedGraph(g.n, frozenset((perm[u - 1], perm[v - 1]) for u, v in g.edges))
    r = is_completely_balanced(g)
    parts = k + extra
    assert r.balanced == (parts <= 2)
    if r.balanced:
        assert len(r.parts) == parts
    else:
        x, y, z = r.witness
        assert sum(e in g.edges for e in [(x, y), (y, z), (x, z)]) in (0, 2)


def test_balance_witness_has_two_edges():
    g = UndirectedGraph(4, frozenset({(1, 2), (2, 3), (3, 4), (1, 4)}))
    r = is_completely_balanced(g)
    assert not r.balanced
    x, y, z = r.witness
    assert sum(e in g.edges for e in [(x, y), (y, z), (x, z)]) == 2


def cycle(n):
    return WeightedDigraph(n, {(i, i % n + 1): 1 for i in range(1, n + 1)})


def test_flow_balance_cycle_and_single_arc():
    assert flow_balance(cycle(3)).balanced
    r = flow_balance(WeightedDigraph(2, {(1, 2): 1}))
    assert not r.balanced
    assert r.node == 1 and (r.in_weight, r.out_weight) == (0, 1)


def test_flow_balance_float_tolerance():
    g = WeightedDigraph(3, {(1, 2): 0.1 + 0.2, (2, 3): 0.3, (3, 1): 0.3})
    assert flow_balance(g).balanced
    assert not flow_balance(g, tol=0.0).balanced
    with pytest.raises(ValueError):
        flow_balance(g, tol=-1)


def test_flow_balance_empty_graph():
    assert flow_balance(WeightedDigraph(0, {})).balanced
    assert flow_balance(WeightedDigraph(3, {})).balanced


@st.composite
def weighted(draw):
    n = draw(st.integers(2, 6))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]
    keys = draw(st.sets(st.sampled_from(pairs)))
    return WeightedDigraph(n, {k: draw(st.integers(0, 9)) for k in keys})


@given(weighted())
def test_flow_balance_invariant_under_reversal(g):
    a, b = flow_balance(g), flow_balance(g.reversed())
    assert a.balanced == b.balanced
    if not a.balanced:
        assert (a.in_weight, a.out_weight) == (b.out_weight, b.in_weight)


@given(weighted())
def test_symmetric_weights_are_flow_balanced(g):
    sym = {}
    for (u, v), w in g.weights.items():
        sym[(u, v)] = sym.get((u, v), 0) + w
        sym[(v, u)] = sym.get((v, u), 0) + w
    assert flow_balance(WeightedDigraph(g.n, sym)).balanced
