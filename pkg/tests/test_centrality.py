import math
import random

import pytest

from chronet import (
    DistanceType,
    KatzParams,
    PageRankParams,
    TimeInterval,
    temporal_closeness,
    temporal_degree,
    temporal_edge_betweenness,
    temporal_katz,
    temporal_pagerank,
    to_incidence_lists,
    topk_closeness,
)
from chronet.representations import EdgeBudgetError

import oracles
from conftest import A, B, C, D, graph_from_rows


def test_degree_on_example(example_graph):
    out = temporal_degree(example_graph, "out")
    assert out.scores == (3, 2, 1, 1)  # a, d, b, c
    inc = temporal_degree(example_graph, "in")
    assert inc.scores == (0, 2, 3, 2)
    with pytest.raises(ValueError):
        temporal_degree(example_graph, "both")


def test_degree_empty():
    assert temporal_degree(graph_from_rows(3, []), "out").scores == (0, 0, 0)


def test_closeness_fastest_on_example(example_graph):
    vec = temporal_closeness(example_graph, DistanceType.FASTEST)
    assert vec.scores[A] == pytest.approx(1 + 1 / 4 + 1 / 7)
    assert vec.scores[C] == pytest.approx(1 + 1 / 3)
    assert vec.scores[B] == pytest.approx(1 / 2)
    assert vec.scores[D] == pytest.approx(1 / 2)


def test_closeness_earliest_arrival_uses_elapsed_time(example_graph):
    vec = temporal_closeness(example_graph, DistanceType.EARLIEST_ARRIVAL)
    # from a: arrivals 3, 6, 8 elapsed from interval start 0
    assert vec.scores[A] == pytest.approx(1 / 3 + 1 / 6 + 1 / 8)


def test_closeness_latest_departure(example_graph):
    interval = TimeInterval(0, 20)
    vec = temporal_closeness(example_graph, DistanceType.LATEST_DEPARTURE, interval)
    assert vec.scores[A] == pytest.approx(1 / 15 + 1 / 15 + 1 / 19)
    assert vec.scores[C] == pytest.approx(1 / 14 + 1 / 14)
    assert vec.scores[B] == pytest.approx(1 / 13)
    assert vec.scores[D] == pytest.approx(1 / 12)
    with pytest.raises(ValueError):
        temporal_closeness(example_graph, DistanceType.LATEST_DEPARTURE)


def test_closeness_zero_distance_cap():
    g = graph_from_rows(2, [(0, 1, 4, 0)])
    default = temporal_closeness(g, DistanceType.FASTEST)
    assert default.scores[0] == 1.0
    capped = temporal_closeness(g, DistanceType.FASTEST, zero_distance_value=2.5)
    assert capped.scores[0] == 2.5


def test_closeness_workers_match_serial(example_graph):
    for distance_type in (DistanceType.FASTEST, DistanceType.EARLIEST_ARRIVAL):
        serial = temporal_closeness(example_graph, distance_type)
        threaded = temporal_closeness(example_graph, distance_type, workers=4)
        assert serial.scores == threaded.scores


def test_topk_on_example(example_graph):
    il = to_incidence_lists(example_graph)
    top1 = topk_closeness(il, 1, DistanceType.FASTEST)
    assert top1[0][0] == A
    assert top1[0][1] == pytest.approx(1 + 1 / 4 + 1 / 7)
    top2 = topk_closeness(il, 2, DistanceType.FASTEST)
    assert [v for v, _ in top2] == [A, C]
    full = topk_closeness(il, 4, DistanceType.FASTEST)
    dense = temporal_closeness(example_graph, DistanceType.FASTEST)
    assert {v: s for v, s in full} == pytest.approx(
        {v: s for v, s in enumerate(dense.scores)}
    )


def test_topk_min_transition_matches_full(example_graph):
    il = to_incidence_lists(example_graph)
    ranked = topk_closeness(il, 4, DistanceType.MIN_TRANSITION_SUM)
    dense = temporal_closeness(example_graph, DistanceType.MIN_TRANSITION_SUM)
    assert {v: s for v, s in ranked} == pytest.approx(
        {v: s for v, s in enumerate(dense.scores)}
    )


def test_topk_tie_breaks_by_smaller_id():
    # two separate copies of the same two-vertex pattern tie exactly
    g = graph_from_rows(4, [(0, 1, 2, 1), (2, 3, 2, 1)])
    il = to_incidence_lists(g)
    assert [v for v, _ in topk_closeness(il, 1, DistanceType.FASTEST)] == [0]
    assert [v for v, _ in topk_closeness(il, 3, DistanceType.FASTEST)] == [0, 2, 1]


def test_topk_argument_errors(example_graph):
    il = to_incidence_lists(example_graph)
    with pytest.raises(ValueError):
        topk_closeness(il, 0, DistanceType.FASTEST)
    with pytest.raises(ValueError):
        topk_closeness(il, 5, DistanceType.FASTEST)
    with pytest.raises(ValueError):
        topk_closeness(il, 2, DistanceType.EARLIEST_ARRIVAL)


def test_topk_pruning_never_changes_results():
    rng = random.Random(1002)
    for _ in range(40):
        g = oracles.random_graph(rng)
        interval = oracles.random_interval(rng)
        il = to_incidence_lists(g)
        for distance_type in (DistanceType.FASTEST, DistanceType.MIN_TRANSITION_SUM):
            dense = temporal_closeness(g, distance_type, interval)
            ranking = sorted(
                enumerate(dense.scores), key=lambda p: (-p[1], p[0])
            )
            for k in {1, max(1, g.n // 2), g.n}:
                ranked = topk_closeness(il, k, distance_type, interval)
                expected = ranking[:k]
                assert len(ranked) == k
                for (va, sa), (vb, sb) in zip(ranked, expected):
                    assert va == vb and sa == pytest.approx(sb, abs=1e-12)


def test_betweenness_on_example(example_graph):
    vec = temporal_edge_betweenness(example_graph)
    by_edge = {
        example_graph.edges[i].as_tuple(): s for i, s in enumerate(vec.scores)
    }
    assert by_edge == pytest.approx(
        {
            (A, D, 1, 5): 2.0,  # pairs (a,d) and (a,c)
            (A, B, 2, 1): 0.5,
            (A, B, 5, 2): 0.5,
            (C, B, 6, 1): 2.0,
            (D, C, 6, 2): 1.0,
            (B, D, 7, 2): 2.0,
            (D, C, 8, 4): 1.0,
        }
    )
    # conservation: the total equals the sum of min-hop distances over pairs
    assert sum(vec.scores) == pytest.approx(9.0)


def test_betweenness_single_edge_and_parallel_paths():
    single = graph_from_rows(2, [(0, 1, 2, 1)])
    assert temporal_edge_betweenness(single).scores == (1.0,)
    parallel = graph_from_rows(2, [(0, 1, 1, 1), (0, 1, 3, 1)])
    assert temporal_edge_betweenness(parallel).scores == (0.5, 0.5)


def test_betweenness_interval_zeroes_excluded_edges(example_graph):
    vec = temporal_edge_betweenness(example_graph, TimeInterval(2, 9))
    assert vec.scores[0] == 0.0  # (a, d, 1, 5) starts before the interval
    assert len(vec.scores) == example_graph.m


def test_betweenness_budget(example_graph):
    with pytest.raises(EdgeBudgetError):
        temporal_edge_betweenness(example_graph, max_arcs=4)


def test_betweenness_matches_oracle():
    rng = random.Random(77)
    for _ in range(40):
        g = oracles.random_graph(rng, n_max=6, m_max=12)
        interval = oracles.random_interval(rng)
        expected, hop_total = oracles.brute_edge_betweenness(g, interval)
        vec = temporal_edge_betweenness(g, interval)
        assert list(vec.scores) == pytest.approx(expected, abs=1e-9)
        assert sum(vec.scores) == pytest.approx(hop_total, abs=1e-9)


def test_katz_single_edge_and_chain():
    single = graph_from_rows(2, [(0, 1, 2, 1)])
    assert temporal_katz(single).scores == (0.0, 0.5)
    chain = graph_from_rows(3, [(0, 1, 1, 1), (1, 2, 3, 1)])
    vec = temporal_katz(chain)
    assert vec.scores[1] == pytest.approx(0.5)
    assert vec.scores[2] == pytest.approx(0.75)  # walks {e2} and {e1, e2}


def test_katz_matches_walk_enumeration():
    rng = random.Random(31)
    for _ in range(40):
        g = oracles.random_graph(rng, n_max=6, m_max=12)
        interval = oracles.random_interval(rng)
        beta = rng.choice([0.2, 0.5, 0.9])
        expected = oracles.brute_katz(g, beta, interval)
        vec = temporal_katz(g, KatzParams(beta=beta), interval)
        assert list(vec.scores) == pytest.approx(expected, abs=1e-9)


def test_katz_monotone_under_edge_addition():
    rng = random.Random(99)
    for _ in range(20):
        g = oracles.random_graph(rng, n_max=5, m_max=8)
        base = temporal_katz(g).scores
        rows = [e.as_tuple() for e in g.edges] + [
            (rng.randrange(g.n), rng.randrange(g.n), rng.randint(0, 12), 1)
        ]
        bigger = temporal_katz(graph_from_rows(g.n, rows)).scores
        assert all(b >= a - 1e-12 for a, b in zip(base, bigger))


def test_katz_params_validated():
    with pytest.raises(ValueError):
        KatzParams(beta=0.0)
    with pytest.raises(ValueError):
        KatzParams(beta=1.0)


def test_pagerank_single_edge_and_repeat():
    single = graph_from_rows(2, [(0, 1, 2, 1)])
    vec = temporal_pagerank(single)
    assert vec.scores[0] == pytest.approx(0.15)
    assert vec.scores[1] == pytest.approx(0.1275)
    doubled = graph_from_rows(2, [(0, 1, 2, 1), (0, 1, 4, 1)])
    vec2 = temporal_pagerank(doubled)
    assert vec2.scores[1] == pytest.approx(0.255)
    assert vec2.scores[1] > vec.scores[1]


def test_pagerank_chain_hand_simulation():
    g = graph_from_rows(3, [(0, 1, 1, 1), (1, 2, 3, 1)])
    vec = temporal_pagerank(g, PageRankParams(alpha=0.85, beta=0.5))
    # edge (0,1): r0 += 0.15, inc = 0.15*0.85 = 0.1275 -> r1, s1 = 0.1275
    # edge (1,2): r1 += 0.15, inc = (0.1275 + 0.15)*0.85 = 0.235875
    assert vec.scores[0] == pytest.approx(0.15)
    assert vec.scores[1] == pytest.approx(0.2775)
    assert vec.scores[2] == pytest.approx(0.235875)


def test_pagerank_empty_and_params():
    assert temporal_pagerank(graph_from_rows(2, [])).scores == (0.0, 0.0)
    with pytest.raises(ValueError):
        PageRankParams(alpha=1.0)
    with pytest.raises(ValueError):
        PageRankParams(beta=0.0)
    PageRankParams(beta=1.0)  # closed upper end is allowed


def test_scores_are_non_negative(example_graph):
    for vec in (
        temporal_degree(example_graph, "out"),
        temporal_closeness(example_graph, DistanceType.FASTEST),
        temporal_edge_betweenness(example_graph),
        temporal_katz(example_graph),
        temporal_pagerank(example_graph),
    ):
        assert all(s >= 0 for s in vec.scores)
        assert not math.isnan(sum(vec.scores))
