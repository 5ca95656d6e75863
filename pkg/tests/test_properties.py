import math

from hypothesis import given, settings, strategies as st

from chronet import (
    DistanceType,
    FULL_INTERVAL,
    OrderedEdgeList,
    TimeInterval,
    edges_from_tuples,
    is_valid_temporal_path,
    normalize,
    optimal_path,
    path_metrics,
    restrict_to_interval,
    single_source_distances,
    single_source_with_paths,
    reconstruct_path,
    temporal_closeness,
    temporal_katz,
)
from chronet.pareto import ArrivalCostFront, StartArrivalFront


@st.composite
def graphs(draw, n_max=6, m_max=14, t_max=10, lam_max=3):
    n = draw(st.integers(1, n_max))
    rows = draw(
        st.lists(
            st.tuples(
                st.integers(0, n - 1),
                st.integers(0, n - 1),
                st.integers(0, t_max),
                st.integers(0, lam_max),
            ),
            max_size=m_max,
        )
    )
    rows.sort(key=lambda r: r[2])
    return OrderedEdgeList(n=n, edges=edges_from_tuples(rows))


@st.composite
def intervals(draw, t_max=10, lam_max=3):
    a = draw(st.integers(0, t_max))
    if draw(st.booleans()):
        return TimeInterval(a, math.inf)
    b = draw(st.integers(a, t_max + lam_max))
    return TimeInterval(a, b)


# ---------------------------------------------------------------------------
# Pareto fronts against a naive model


@given(st.lists(st.tuples(st.integers(0, 15), st.integers(0, 15)), max_size=40))
def test_start_arrival_front_matches_naive_model(labels):
    front = StartArrivalFront()
    kept: list[tuple[int, int]] = []
    for start, arrival in labels:
        dominated = any(s >= start and a <= arrival for s, a in kept)
        assert front.dominated(start, arrival) == dominated
        stored = front.insert(start, arrival)
        assert stored == (not dominated)
        if stored:
            kept = [(s, a) for s, a in kept if not (s <= start and a >= arrival)]
            kept.append((start, arrival))
        # invariant: both coordinates strictly ascending
        assert front.starts == sorted(set(front.starts))
        assert front.arrivals == sorted(set(front.arrivals))
        assert set(zip(front.starts, front.arrivals)) == set(kept)
    for time in range(-1, 17):
        idx = front.latest_start_arriving_by(time)
        feasible = [s for s, a in kept if a <= time]
        if feasible:
            assert front.starts[idx] == max(feasible)
        else:
            assert idx == -1


@given(st.lists(st.tuples(st.integers(0, 15), st.integers(0, 15)), max_size=40))
def test_arrival_cost_front_matches_naive_model(labels):
    front = ArrivalCostFront()
    kept: list[tuple[int, int]] = []
    for arrival, cost in labels:
        dominated = any(a <= arrival and c <= cost for a, c in kept)
        assert front.dominated(arrival, cost) == dominated
        stored = front.insert(arrival, cost)
        assert stored == (not dominated)
        if stored:
            kept = [(a, c) for a, c in kept if not (a >= arrival and c >= cost)]
            kept.append((arrival, cost))
        assert front.arrivals == sorted(set(front.arrivals))
        assert front.costs == sorted(set(front.costs), reverse=True)
        assert set(zip(front.arrivals, front.costs)) == set(kept)
    if kept:
        assert front.min_cost() == min(c for _, c in kept)
    else:
        assert front.min_cost() is None


# ---------------------------------------------------------------------------
# graph-level invariants


@settings(max_examples=60, deadline=None)
@given(graphs(), intervals())
def test_restrict_is_idempotent_and_sound(g, interval):
    once = restrict_to_interval(g, interval)
    assert all(interval.contains(e) for e in once.edges)
    assert restrict_to_interval(once, interval) is once
    kept = {e for e in g.edges if interval.contains(e)}
    assert set(once.edges) == kept


@settings(max_examples=60, deadline=None)
@given(graphs(), st.integers(1, 30))
def test_time_shift_equivariance(g, shift):
    shifted = OrderedEdgeList(
        n=g.n,
        edges=tuple(
            type(e)(e.u, e.v, e.t + shift, e.lam) for e in g.edges
        ),
    )
    for source in range(g.n):
        base_ea = single_source_distances(g, source, DistanceType.EARLIEST_ARRIVAL)
        moved_ea = single_source_distances(
            shifted, source, DistanceType.EARLIEST_ARRIVAL
        )
        for v in range(g.n):
            if v == source:
                continue
            if base_ea.values[v] is None:
                assert moved_ea.values[v] is None
            else:
                assert moved_ea.values[v] == base_ea.values[v] + shift
        for distance_type in (
            DistanceType.FASTEST,
            DistanceType.MIN_TRANSITION_SUM,
            DistanceType.MIN_HOPS,
        ):
            assert (
                single_source_distances(shifted, source, distance_type).values
                == single_source_distances(g, source, distance_type).values
            )


@settings(max_examples=40, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_relabel_equivariance(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    relabeled = OrderedEdgeList(
        n=g.n,
        edges=tuple(type(e)(perm[e.u], perm[e.v], e.t, e.lam) for e in g.edges),
    )
    for source in range(g.n):
        base = single_source_distances(g, source, DistanceType.FASTEST)
        moved = single_source_distances(relabeled, perm[source], DistanceType.FASTEST)
        assert all(
            moved.values[perm[v]] == base.values[v] for v in range(g.n)
        )
    base_close = temporal_closeness(g, DistanceType.FASTEST).scores
    moved_close = temporal_closeness(relabeled, DistanceType.FASTEST).scores
    for v in range(g.n):
        assert math.isclose(moved_close[perm[v]], base_close[v], abs_tol=1e-9)
    base_katz = temporal_katz(g).scores
    moved_katz = temporal_katz(relabeled).scores
    for v in range(g.n):
        assert math.isclose(moved_katz[perm[v]], base_katz[v], abs_tol=1e-9)


@settings(max_examples=60, deadline=None)
@given(graphs(), intervals())
def test_value_ranges(g, interval):
    for source in range(g.n):
        ea = single_source_distances(
            g, source, DistanceType.EARLIEST_ARRIVAL, interval
        ).values
        assert all(v is None or v >= interval.a for v in ea)
        hops = single_source_distances(g, source, DistanceType.MIN_HOPS, interval).values
        for v, value in enumerate(hops):
            if v != source and value is not None:
                assert isinstance(value, int) and value >= 1
        fastest = single_source_distances(g, source, DistanceType.FASTEST, interval).values
        assert all(v is None or v >= 0 for v in fastest)
    if interval.finite:
        for target in range(g.n):
            ld = single_source_distances(
                g, target, DistanceType.LATEST_DEPARTURE, interval
            ).values
            assert all(v is None or v <= interval.b for v in ld)


@settings(max_examples=60, deadline=None)
@given(graphs(), intervals())
def test_reconstructed_paths_are_simple_and_feasible(g, interval):
    for distance_type in (
        DistanceType.EARLIEST_ARRIVAL,
        DistanceType.FASTEST,
        DistanceType.MIN_TRANSITION_SUM,
        DistanceType.MIN_HOPS,
    ):
        for source in range(g.n):
            vec, pred = single_source_with_paths(g, source, distance_type, interval)
            for v in range(g.n):
                if v == source or vec.values[v] is None:
                    continue
                path = reconstruct_path(pred, v)
                assert is_valid_temporal_path(path)
                assert all(interval.contains(e) for e in path.edges)
                m = path_metrics(path)
                achieved = {
                    DistanceType.EARLIEST_ARRIVAL: m.arrival,
                    DistanceType.FASTEST: m.duration,
                    DistanceType.MIN_TRANSITION_SUM: m.transition_sum,
                    DistanceType.MIN_HOPS: m.hops,
                }[distance_type]
                assert achieved == vec.values[v]


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_normalize_properties(g):
    deduped = normalize(g, deduplicate=True)
    assert len(set(deduped.edges)) == deduped.m
    assert normalize(deduped, deduplicate=True).edges == deduped.edges
    no_loops = normalize(g, remove_self_loops=True)
    assert all(e.u != e.v for e in no_loops.edges)
    shifted = normalize(g, shift_time_origin=True)
    if shifted.m:
        assert min(e.t for e in shifted.edges) == 0


@settings(max_examples=40, deadline=None)
@given(graphs(), intervals())
def test_latest_departure_path_exists_for_every_finite_value(g, interval):
    for target in range(g.n):
        vec, pred = single_source_with_paths(
            g, target, DistanceType.LATEST_DEPARTURE, interval
        )
        for u in range(g.n):
            if u == target or vec.values[u] is None:
                continue
            path = reconstruct_path(pred, u)
            assert path.edges[0].u == u and path.edges[-1].v == target
            assert is_valid_temporal_path(path)
            assert path_metrics(path).start == vec.values[u]
            assert all(interval.contains(e) for e in path.edges)
