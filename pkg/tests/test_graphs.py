import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from triadic.graphs import (
    Digraph,
    EdgeListError,
    GraphError,
    LoopDigraph,
    UndirectedGraph,
    WeightedDigraph,
    direct,
    from_json,
    induced_triad,
    parse_edge_list,
    read_edge_list,
    relabel,
    symmetrize,
    to_edge_list,
    to_json,
)
from triadic.karate import karate_graph


@st.composite
def undirected_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return UndirectedGraph(n, frozenset(edges))


@st.composite
def digraphs(draw, max_n=7, loops=False):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if loops or u != v]
    arcs = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return (LoopDigraph if loops else Digraph)(n, frozenset(arcs))


@st.composite
def weighted_digraphs(draw, max_n=6):
    n = draw(st.integers(2, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]
    keys = draw(st.sets(st.sampled_from(pairs)))
    ws = st.one_of(st.integers(0, 50), st.floats(0, 100, allow_nan=False, allow_infinity=False))
    return WeightedDigraph(n, {k: draw(ws) for k in keys})


def test_parse_basic_with_comments_and_header():
    g = parse_edge_list("# a path\nn=5\n1 2\n2 3  # trailing\n\n")
    assert g.n == 5
    assert g.edges == {(1, 2), (2, 3)}


def test_node_count_defaults_to_largest_id():
    assert parse_edge_list("3 1\n").n == 3


def test_undirected_edges_are_normalized():
    assert parse_edge_list("4 2\n").edges == {(2, 4)}


@pytest.mark.parametrize(
    "text, mode, lineno",
    [
        ("1 2\n2 1\n", "undirected", 2),
        ("1 2\n1 2\n", "directed", 2),
        ("1 1\n", "undirected", 1),
        ("1 1\n", "directed", 1),
        ("1 2 3\n", "undirected", 1),
        ("1\n", "directed", 1),
        ("a b\n", "undirected", 1),
        ("0 2\n", "undirected", 1),
        ("1 2 -1\n", "weighted", 1),
        ("1 2 x\n", "weighted", 1),
        ("n=3\nn=4\n", "undirected", 2),
    ],
)
def test_malformed_lines_report_their_number(text, mode, lineno):
    with pytest.raises(EdgeListError) as exc:
        parse_edge_list(text, mode)
    assert exc.value.lineno == lineno
    assert f"line {lineno}" in str(exc.value)


def test_header_smaller_than_ids_is_rejected():
    with pytest.raises(EdgeListError):
        parse_edge_list("n=2\n1 3\n")


def test_directed_keeps_both_orientations():
    d = parse_edge_list("1 2\n2 1\n", "directed")
    assert d.arcs == {(1, 2), (2, 1)}
    assert d.is_symmetric()


def test_loop_mode_accepts_self_arcs():
    g = parse_edge_list("1 1\n1 2\n", "loop")
    assert g.arcs == {(1, 1), (1, 2)}


def test_weighted_mode_keeps_int_and_float():
    g = parse_edge_list("1 2 3\n2 1 1.5\n", "weighted")
    assert g.weights == {(1, 2): 3, (2, 1): 1.5}
    assert isinstance(g.weights[(1, 2)], int)


def test_unknown_mode():
    with pytest.raises(ValueError):
        parse_edge_list("1 2\n", "bipartite")


def test_read_from_file(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("1 2\n2 3\n")
    assert read_edge_list(p).edge_count == 2


def test_constructors_validate():
    with pytest.raises(GraphError):
        UndirectedGraph(2, frozenset({(1, 3)}))
    with pytest.raises(GraphError):
        Digraph(2, frozenset({(1, 1)}))
    with pytest.raises(GraphError):
        WeightedDigraph(2, {(1, 2): -1})
    with pytest.raises(GraphError):
        UndirectedGraph(-1, frozenset())


@given(undirected_graphs())
def test_undirected_round_trips(g):
    assert parse_edge_list(to_edge_list(g)) == g
    assert from_json(to_json(g)) == g
    assert UndirectedGraph.from_adjacency(g.adjacency()) == g


@given(digraphs())
def test_directed_round_trips(g):
    assert parse_edge_list(to_edge_list(g), "directed") == g
    assert from_json(to_json(g)) == g
    assert Digraph.from_adjacency(g.adjacency()) == g


@given(digraphs(loops=True))
def test_loop_round_trips(g):
    assert parse_edge_list(to_edge_list(g), "loop") == g
    assert from_json(to_json(g)) == g


@given(weighted_digraphs())
def test_weighted_round_trips(g):
    assert parse_edge_list(to_edge_list(g), "weighted") == g
    assert from_json(to_json(g)) == g


@given(undirected_graphs())
def test_direct_then_symmetrize_is_identity(g):
    d = direct(g)
    assert d.is_symmetric()
    assert d.arc_count == 2 * g.edge_count
    assert symmetrize(d) == g


def test_symmetrize_names_the_unmatched_arc():
    with pytest.raises(GraphError, match=r"\(2,3\)"):
        symmetrize(Digraph(3, frozenset({(1, 2), (2, 1), (2, 3)})))


def test_adjacency_is_symmetric_and_loopless():
    a = karate_graph().adjacency()
    assert (a == a.T).all()
    assert not a.diagonal().any()
    assert a.sum() == 2 * 78


def test_induced_triad_on_karate():
    t = induced_triad(karate_graph(), (1, 2, 3))
    assert t.edges == {(1, 2), (1, 3), (2, 3)}
    t = induced_triad(karate_graph(), (34, 1, 33))
    assert t.edges == {(1, 3)}


def test_induced_triad_relabels_in_given_order():
    d = Digraph(5, frozenset({(5, 2)}))
    assert induced_triad(d, (2, 4, 5)).arcs == {(3, 1)}


@pytest.mark.parametrize("nodes", [(1, 2), (1, 1, 2), (1, 2, 99)])
def test_induced_triad_rejects_bad_nodes(nodes):
    with pytest.raises(GraphError):
        induced_triad(karate_graph(), nodes)


@given(digraphs(), st.randoms(use_true_random=False))
def test_relabel_commutes_with_induction(g, rnd):
    if g.n < 3:
        return
    perm = list(range(1, g.n + 1))
    rnd.shuffle(perm)
    mapping = dict(zip(range(1, g.n + 1), perm))
    h = relabel(g, mapping)
    nodes = rnd.sample(range(1, g.n + 1), 3)
    assert induced_triad(g, nodes) == induced_triad(h, [mapping[v] for v in nodes])


def test_relabel_requires_permutation():
    with pytest.raises(GraphError):
        relabel(UndirectedGraph(3, frozenset()), {1: 1, 2: 1, 3: 3})


def test_remove_nodes_keeps_remaining_edges():
    g = karate_graph().remove_nodes([1, 2, 3, 33, 34])
    assert g.n == 29
    assert g.edge_count == 19


def test_degrees_sum():
    g = karate_graph()
    assert g.degrees().sum() == 2 * g.edge_count
    assert np.array_equal(g.degrees(), g.adjacency(int).sum(axis=1))
