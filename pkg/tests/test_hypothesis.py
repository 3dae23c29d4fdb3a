import logging

import numpy as np
import pytest

from triadic.generators import clique_union
from triadic.graphs import Digraph, GraphError, UndirectedGraph
from triadic.hypothesis import GBH_PREDICTION, evaluate_gbh, evaluate_gth, karate_reference_report
from triadic.karate import karate_graph
from triadic.null_models import ErParams, sample_er_directed, sample_er_undirected
from triadic.triads import TRIAD_CLASSES


def test_karate_gbh_directions():
    r = evaluate_gbh(karate_graph())
    assert r.observed == (3971, 1575, 393, 45)
    assert r.expected == pytest.approx((3818.95, 1850.18, 298.79, 16.08), abs=0.01)
    assert r.direction == ("over", "under", "over", "over")
    assert r.agrees == (False, False, False, True)
    assert not r.passed
    assert r.p == pytest.approx(78 / 561)


def test_karate_dataset_checks():
    rep = karate_reference_report()
    d = rep.dataset
    assert (d["nodes"], d["edges"], d["possible_edges"]) == (34, 78, 561)
    assert d["degrees"] == {1: 16, 2: 9, 3: 10, 33: 12, 34: 17}
    assert (d["residual_nodes"], d["residual_edges"]) == (29, 19)
    assert d["residual_density"] == pytest.approx(19 / 406)
    assert d["residual_crossing_edges"] == [(9, 31)]
    assert d["faction_sizes"] == {"instructor": 17, "president": 17}


def test_karate_wrong_null_is_labelled():
    w = karate_reference_report().wrong_null
    assert w["label"].startswith("INVALID COMPARISON")
    assert w["class_3"] == pytest.approx(190.68, abs=0.01)
    assert w["class_16"] == pytest.approx(0.04, abs=0.01)


def test_two_cliques_pass_gbh():
    r = evaluate_gbh(clique_union(2, 20))
    assert r.passed
    assert r.direction == GBH_PREDICTION


def test_complete_graph_is_degenerate(caplog):
    g = clique_union(1, 6)
    with caplog.at_level(logging.WARNING):
        r = evaluate_gbh(g)
    assert r.degenerate
    assert r.direction == ("exact",) * 4
    assert not r.passed
    assert "degenerate" in caplog.text


def test_gbh_requires_three_nodes():
    with pytest.raises(GraphError):
        evaluate_gbh(UndirectedGraph(2, frozenset()))


def test_monte_carlo_needs_seed():
    with pytest.raises(ValueError):
        evaluate_gbh(karate_graph(), samples=10)
    with pytest.raises(ValueError):
        evaluate_gth(Digraph(3, frozenset()), samples=10)
    with pytest.raises(ValueError):
        evaluate_gbh(karate_graph(), samples=-1, seed=1)
    with pytest.raises(ValueError):
        evaluate_gbh(karate_graph(), samples=5, seed=1, null="config")


def test_monte_carlo_is_reproducible():
    a = evaluate_gbh(karate_graph(), samples=200, seed=3)
    b = evaluate_gbh(karate_graph(), samples=200, seed=3)
    assert a == b
    assert len(a.mc_quantile) == 4
    assert all(0 <= q <= 1 for q in a.mc_quantile)


def test_gnm_null_is_tighter():
    gnp = evaluate_gbh(karate_graph(), samples=500, seed=1)
    gnm = evaluate_gbh(karate_graph(), samples=500, seed=1, null="gnm")
    assert gnm.null_model == "gnm"
    assert gnm.null_sd[1] < gnp.null_sd[1] / 2
    assert gnm.mc_quantile[1] < 0.01


@pytest.mark.parametrize("index", [7, 8])
def test_gth_worked_example(index):
    r = evaluate_gth(TRIAD_CLASSES[index - 1].representative)
    assert r.observed == (1,)
    assert r.expected[0] == pytest.approx(0.75)
    assert r.direction == ("over",)
    assert not r.passed


def test_gth_complete_digraph_passes_exactly():
    arcs = frozenset((u, v) for u in range(1, 5) for v in range(1, 5) if u != v)
    r = evaluate_gth(Digraph(4, arcs))
    assert r.observed == (0,) and r.expected == (0.0,)
    assert r.passed and r.degenerate


def test_gth_transitive_tournament_passes():
    arcs = frozenset((u, v) for u in range(1, 7) for v in range(u + 1, 7))
    r = evaluate_gth(Digraph(6, arcs))
    assert r.observed == (0,)
    assert r.passed


def test_er_graphs_straddle_their_null():
    # ER graphs sit on the null, so each direction is a coin flip
    params = ErParams(30, 0.2)
    over = []
    for seed in range(60):
        r = evaluate_gbh(sample_er_undirected(params, seed))
        over.append([d == "over" for d in r.direction])
    rate = np.mean(over)
    assert 0.2 <= rate <= 0.8
    gth = [evaluate_gth(sample_er_directed(params, s)).passed for s in range(60)]
    assert 0.2 <= np.mean(gth) <= 0.8


def test_gth_monte_carlo():
    r = evaluate_gth(sample_er_directed(ErParams(15, 0.3), 2), samples=300, seed=5)
    assert r.null_mean[0] == pytest.approx(r.expected[0], rel=0.1)
    assert 0 <= r.mc_quantile[0] <= 1


def test_report_as_dict():
    d = evaluate_gbh(karate_graph()).as_dict()
    assert d["hypothesis"] == "GBH"
    assert d["mc_quantile"] is None
