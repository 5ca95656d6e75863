"""Temporal centrality measures.

Closeness follows the harmonic form: C(u) = sum over v != u of 1/d(u, v),
with unreachable vertices contributing 0.  Earliest arrival is measured as
elapsed time past the interval start, latest departure as time left before
the interval end (finite end required).  Zero-transition chains can make
d(u, v) = 0 for v != u; such pairs contribute `zero_distance_value`
(default 1.0) instead of 1/0.
"""

from __future__ import annotations

import heapq
from bisect import bisect_left
from dataclasses import dataclass
from typing import Optional

from .core import (
    FULL_INTERVAL,
    DistanceType,
    OrderedEdgeList,
    TimeInterval,
    restrict_to_interval,
)
from .distances import _ILISTS_FUNCS, pair_measure
from .parallel import map_roots
from .pareto import ArrivalCostFront, StartArrivalFront
from .representations import (
    IncidenceLists,
    to_edge_adjacency_graph,
    to_incidence_lists,
)


@dataclass(frozen=True)
class CentralityVector:
    """Per-vertex (or, when per_edge is set, per-edge) scores."""

    measure: str
    scores: tuple
    per_edge: bool = False

    def to_lines(self, labels=None) -> list[str]:
        out = []
        for i, score in enumerate(self.scores):
            name = labels[i] if labels is not None and not self.per_edge else str(i)
            out.append(f"{name} {score}")
        return out


def temporal_degree(g: OrderedEdgeList, direction: str = "out") -> CentralityVector:
    """Temporal in- or out-degree: the number of incident temporal edges."""
    if direction not in ("in", "out"):
        raise ValueError(f"direction must be 'in' or 'out', got {direction!r}")
    counts = [0] * g.n
    for e in g.edges:
        counts[e.u if direction == "out" else e.v] += 1
    return CentralityVector(measure=f"{direction}-degree", scores=tuple(counts))


def _contribution(d, zero_value: float) -> float:
    return zero_value if d == 0 else 1.0 / d


def temporal_closeness(
    g: OrderedEdgeList,
    distance_type: DistanceType,
    interval: TimeInterval = FULL_INTERVAL,
    *,
    zero_distance_value: float = 1.0,
    workers: Optional[int] = None,
) -> CentralityVector:
    """Harmonic temporal closeness of every vertex under one distance type."""
    if distance_type is DistanceType.LATEST_DEPARTURE and not interval.finite:
        raise ValueError("latest-departure closeness needs a finite interval end")
    il = to_incidence_lists(g)
    func = _ILISTS_FUNCS[distance_type]
    n = g.n
    if distance_type is DistanceType.LATEST_DEPARTURE:
        # one run per target; each run contributes one summand per source
        totals = [0.0] * n
        vecs = map_roots(lambda z: func(il, z, interval), range(n), workers)
        for z, vec in enumerate(vecs):
            for u, value in enumerate(vec.values):
                if u == z or value is None:
                    continue
                totals[u] += _contribution(interval.b - value, zero_distance_value)
        return CentralityVector(measure="closeness", scores=tuple(totals))

    def one(u: int) -> float:
        vec = func(il, u, interval)
        total = 0.0
        for v, value in enumerate(vec.values):
            if v == u or value is None:
                continue
            total += _contribution(
                pair_measure(value, distance_type, interval), zero_distance_value
            )
        return total

    return CentralityVector(
        measure="closeness", scores=tuple(map_roots(one, range(n), workers))
    )


# ---------------------------------------------------------------------------
# exact top-k closeness with upper-bound pruning


def _contribution_bound(d, zero_value: float) -> float:
    """Largest contribution any vertex with distance >= d can make."""
    if d <= 0:
        return max(1.0, zero_value)
    return 1.0 / d


def _pruned_cost_closeness(il, source, interval, zero_value, theta, per_hop=False):
    """Closeness of one source under min transition sum, settling vertices in
    non-decreasing distance; returns None as soon as the admissible bound
    settled + remaining * best-possible falls below theta."""
    n = il.n
    fronts = [ArrivalCostFront() for _ in range(n)]
    settled = [False] * n
    others_settled = 0
    total = 0.0
    heap = [(0, interval.a, source)]
    b = interval.b
    while heap:
        head_cost = heap[0][0]
        remaining = (n - 1) - others_settled
        if remaining == 0:
            break  # every possible contribution is already in
        if theta is not None:
            if total + remaining * _contribution_bound(head_cost, zero_value) < theta:
                return None
        cost, arrival, v = heapq.heappop(heap)
        fv = fronts[v]
        if fv.dominated(arrival, cost):
            continue
        fv.insert(arrival, cost)
        if not settled[v]:
            settled[v] = True
            if v != source:
                others_settled += 1
                total += _contribution(cost, zero_value)
        lst = il.out_lists[v]
        i = bisect_left(lst, arrival, key=lambda e: e.t)
        for k in range(i, len(lst)):
            e = lst[k]
            arr = e.t + e.lam
            if arr > b:
                continue
            c2 = cost + (1 if per_hop else e.lam)
            if not fronts[e.v].dominated(arr, c2):
                heapq.heappush(heap, (c2, arr, e.v))
    return total


def _pruned_duration_closeness(il, source, interval, zero_value, theta):
    """Closeness of one source under the fastest criterion.

    Labels are (start, arrival) pairs keyed by duration; extending a label
    never shrinks its duration, so vertices settle in non-decreasing duration
    and the same admissible bound as for cost labels applies.
    """
    n = il.n
    fronts = [StartArrivalFront() for _ in range(n)]
    settled = [False] * n
    others_settled = 0
    total = 0.0
    heap = [
        (0, tau, source, tau)
        for tau in sorted({e.t for e in il.out_lists[source] if interval.contains(e)})
    ]
    heapq.heapify(heap)
    b = interval.b
    while heap:
        head_duration = heap[0][0]
        remaining = (n - 1) - others_settled
        if remaining == 0:
            break
        if theta is not None:
            if total + remaining * _contribution_bound(head_duration, zero_value) < theta:
                return None
        duration, arrival, v, start = heapq.heappop(heap)
        fv = fronts[v]
        if fv.dominated(start, arrival):
            continue
        fv.insert(start, arrival)
        if not settled[v]:
            settled[v] = True
            if v != source:
                others_settled += 1
                total += _contribution(duration, zero_value)
        lst = il.out_lists[v]
        i = bisect_left(lst, arrival, key=lambda e: e.t)
        for k in range(i, len(lst)):
            e = lst[k]
            arr = e.t + e.lam
            if arr > b:
                continue
            if not fronts[e.v].dominated(start, arr):
                heapq.heappush(heap, (arr - start, arr, e.v, start))
    return total


def topk_closeness(
    il: IncidenceLists,
    k: int,
    distance_type: DistanceType,
    interval: TimeInterval = FULL_INTERVAL,
    *,
    zero_distance_value: float = 1.0,
) -> list[tuple[int, float]]:
    """The k most temporally close vertices, exactly.

    Supported for the fastest and min transition sum criteria.  Sources whose
    admissible upper bound drops below the current k-th best score are
    abandoned early; ties on the final score are broken by smaller vertex id.
    """
    if distance_type not in (DistanceType.FASTEST, DistanceType.MIN_TRANSITION_SUM):
        raise ValueError(f"top-k closeness does not support {distance_type}")
    n = il.n
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}, got {k}")
    kth_heap: list[float] = []
    results: list[tuple[int, float]] = []
    for u in range(n):
        theta = kth_heap[0] if len(kth_heap) == k else None
        if distance_type is DistanceType.MIN_TRANSITION_SUM:
            score = _pruned_cost_closeness(il, u, interval, zero_distance_value, theta)
        else:
            score = _pruned_duration_closeness(il, u, interval, zero_distance_value, theta)
        if score is None:
            continue  # provably below the k-th best
        results.append((u, score))
        if len(kth_heap) < k:
            heapq.heappush(kth_heap, score)
        elif score > kth_heap[0]:
            heapq.heapreplace(kth_heap, score)
    results.sort(key=lambda pair: (-pair[1], pair[0]))
    return results[:k]


# ---------------------------------------------------------------------------
# edge betweenness over the edge adjacency view


def temporal_edge_betweenness(
    g: OrderedEdgeList,
    interval: TimeInterval = FULL_INTERVAL,
    *,
    max_arcs: Optional[int] = None,
) -> CentralityVector:
    """Fraction-of-shortest-paths betweenness of every temporal edge.

    For each ordered pair (s, z) with z reachable from s, every minimum-hop
    time-respecting (s, z)-path contributes 1/sigma_sz to each of its edges.
    Minimum-hop walks never repeat a vertex (a repeat could be cut, shortening
    the walk), so counting walks over the edge adjacency view counts paths.
    Scores align with the edge positions of g; edges outside the interval
    score 0.
    """
    gi = restrict_to_interval(g, interval)
    original_index = [i for i, e in enumerate(g.edges) if interval.contains(e)]
    dlg = to_edge_adjacency_graph(gi, max_arcs)
    m = gi.m
    scores = [0.0] * g.m
    by_tail: dict[int, list[int]] = {}
    for i, e in enumerate(gi.edges):
        by_tail.setdefault(e.u, []).append(i)
    for s in range(g.n):
        seeds = by_tail.get(s)
        if not seeds:
            continue
        depth = [0] * m
        sigma = [0] * m
        order: list[int] = []
        queue = list(seeds)
        for i in seeds:
            depth[i] = 1
            sigma[i] = 1
        qi = 0
        while qi < len(queue):
            i = queue[qi]
            qi += 1
            order.append(i)
            for j in dlg.adjacency[i]:
                if depth[j] == 0:
                    depth[j] = depth[i] + 1
                    queue.append(j)
                if depth[j] == depth[i] + 1:
                    sigma[j] += sigma[i]
        # per-target minimum depth and number of minimum-hop paths
        min_depth: dict[int, int] = {}
        for i in order:
            z = gi.edges[i].v
            if z == s:
                continue
            d = depth[i]
            if z not in min_depth or d < min_depth[z]:
                min_depth[z] = d
        sigma_total: dict[int, int] = {}
        for i in order:
            z = gi.edges[i].v
            if z != s and min_depth.get(z) == depth[i]:
                sigma_total[z] = sigma_total.get(z, 0) + sigma[i]
        delta = [0.0] * m
        for i in reversed(order):
            z = gi.edges[i].v
            if z != s and min_depth.get(z) == depth[i]:
                delta[i] += sigma[i] / sigma_total[z]
            for j in dlg.adjacency[i]:
                if depth[j] == depth[i] + 1:
                    delta[i] += sigma[i] / sigma[j] * delta[j]
            scores[original_index[i]] += delta[i]
    return CentralityVector(measure="edge-betweenness", scores=tuple(scores), per_edge=True)


# ---------------------------------------------------------------------------
# walk-weight centralities over the chronological stream


@dataclass(frozen=True)
class KatzParams:
    """Damping for walk counting; each edge of a walk contributes a factor beta."""

    beta: float = 0.5

    def __post_init__(self):
        if not 0.0 < self.beta < 1.0:
            raise ValueError(f"beta must be in (0, 1), got {self.beta}")


def temporal_katz(
    g: OrderedEdgeList,
    params: KatzParams = KatzParams(),
    interval: TimeInterval = FULL_INTERVAL,
) -> CentralityVector:
    """Damped count of time-respecting walks ending at each vertex.

    katz(v) = sum over walks ending at v of beta^(walk length).  The stream is
    processed chronologically; a walk uses edges in their stream order, which
    for equal timestamps with zero transition counts chains in stream order
    and keeps every score a finite sum.
    """
    beta = params.beta
    scores = [0.0] * g.n
    arrived_weight = [0.0] * g.n  # walk weight with arrival <= the last query time
    pending: list[list] = [[] for _ in range(g.n)]  # (arrival, weight) heaps
    for e in g.edges:
        if not interval.contains(e):
            continue
        heap = pending[e.u]
        while heap and heap[0][0] <= e.t:
            arrived_weight[e.u] += heapq.heappop(heap)[1]
        w = beta * (1.0 + arrived_weight[e.u])
        scores[e.v] += w
        heapq.heappush(pending[e.v], (e.t + e.lam, w))
    return CentralityVector(measure="katz", scores=tuple(scores))


@dataclass(frozen=True)
class PageRankParams:
    """Teleport factor alpha and per-use decay beta of accumulated mass."""

    alpha: float = 0.85
    beta: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must be in (0, 1), got {self.alpha}")
        if not 0.0 < self.beta <= 1.0:
            raise ValueError(f"beta must be in (0, 1], got {self.beta}")


def temporal_pagerank(
    g: OrderedEdgeList,
    params: PageRankParams = PageRankParams(),
    interval: TimeInterval = FULL_INTERVAL,
) -> CentralityVector:
    """Streaming rank diffusion; deterministic given the stream order."""
    alpha, beta = params.alpha, params.beta
    rank = [0.0] * g.n
    mass = [0.0] * g.n
    for e in g.edges:
        if not interval.contains(e):
            continue
        u, v = e.u, e.v
        inc = (mass[u] + (1.0 - alpha)) * alpha
        rank[u] += 1.0 - alpha
        rank[v] += inc
        mass[v] += inc
        mass[u] *= beta
    return CentralityVector(measure="pagerank", scores=tuple(rank))
