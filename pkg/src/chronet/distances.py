"""Single-source temporal distances under five optimality criteria.

Every criterion is implemented over three representations: a chronological
scan of the edge stream, a label-setting search over incidence lists, and a
traversal of the time-node expansion.  All variants of one criterion return
identical values; the stream variants additionally record predecessor links
for path reconstruction.

Conventions shared by all variants, for a run restricted to [a, b]:

* the root's own value is a for earliest arrival, b for latest departure and
  0 for the other criteria;
* unreachable vertices carry None;
* a latest-departure run is rooted at the *target* and fills in one value per
  departure vertex.

Zero-transition edges may chain inside a single timestamp regardless of their
order in the stream.  The chronological scans therefore re-relax a timestamp
group containing such edges until a fixpoint; the label-setting and expansion
based searches need no special handling.
"""

from __future__ import annotations

import heapq
from bisect import bisect_left
from dataclasses import dataclass
from typing import Callable, Optional

from .core import (
    FULL_INTERVAL,
    INFINITY,
    DistanceType,
    OrderedEdgeList,
    TemporalPath,
    TimeInterval,
)
from .pareto import ArrivalCostFront, StartArrivalFront
from .representations import IncidenceLists, TimeNodeGraph


@dataclass(frozen=True)
class DistanceVector:
    """Per-vertex optimal values of one single-source (or single-target) run."""

    root: int
    distance_type: DistanceType
    interval: TimeInterval
    values: tuple

    def __getitem__(self, v: int):
        return self.values[v]

    def to_lines(self, labels=None) -> list[str]:
        out = []
        for v, value in enumerate(self.values):
            name = labels[v] if labels is not None else str(v)
            if value is None or value == INFINITY:
                out.append(f"{name} inf")
            else:
                out.append(f"{name} {value}")
        return out


@dataclass(frozen=True)
class PredecessorInfo:
    """Per-vertex predecessor links of a stream run, for path reconstruction.

    chains[v] is a linked cell (edge, parent_cell).  For forward criteria the
    cell chain walks backwards from v to the root; for latest departure it
    walks forwards from v to the target.
    """

    root: int
    distance_type: DistanceType
    interval: TimeInterval
    chains: tuple
    forward: bool


def reconstruct_path(pred: PredecessorInfo, v: int) -> Optional[TemporalPath]:
    """Optimal path to (or, for latest departure, from) v; None if there is none.

    The root itself has no path object: a zero-length walk is reported as None.
    """
    if v == pred.root:
        return None
    cell = pred.chains[v]
    if cell is None:
        return None
    edges = []
    while cell is not None:
        edges.append(cell[0])
        cell = cell[1]
    if pred.forward:
        edges.reverse()
    return TemporalPath(tuple(edges))


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range for n={n}")


# ---------------------------------------------------------------------------
# chronological stream scans


def _feasible(g: OrderedEdgeList, interval: TimeInterval) -> list:
    if interval.a == 0 and interval.b == INFINITY:
        return list(g.edges)
    return [e for e in g.edges if interval.contains(e)]


def _run_chronological(edges: list, relax_group: Callable, backward: bool = False) -> None:
    """Apply relax_group to each equal-timestamp slice, in time order.

    A group containing zero-transition edges is repeated until it stops
    changing, because such edges can enable one another inside the group in
    either stream order.
    """
    groups = []
    i, m = 0, len(edges)
    while i < m:
        j = i + 1
        t = edges[i].t
        while j < m and edges[j].t == t:
            j += 1
        groups.append(edges[i:j])
        i = j
    if backward:
        groups.reverse()
    for group in groups:
        changed = relax_group(group)
        if changed and any(e.lam == 0 for e in group):
            while relax_group(group):
                pass


def _ea_stream(g, source, interval):
    values: list = [None] * g.n
    values[source] = interval.a
    chains: list = [None] * g.n

    def relax(group):
        changed = False
        for e in group:
            au = values[e.u]
            if au is None or e.t < au:
                continue
            cand = e.t + e.lam
            av = values[e.v]
            if av is None or cand < av:
                values[e.v] = cand
                chains[e.v] = (e, chains[e.u])
                changed = True
        return changed

    _run_chronological(_feasible(g, interval), relax)
    return values, chains


def _ld_stream(g, target, interval):
    values: list = [None] * g.n
    values[target] = interval.b
    chains: list = [None] * g.n

    def relax(group):
        changed = False
        for e in reversed(group):
            lv = values[e.v]
            if lv is None or e.t + e.lam > lv:
                continue
            lu = values[e.u]
            if lu is None or e.t > lu:
                values[e.u] = e.t
                chains[e.u] = (e, chains[e.v])
                changed = True
        return changed

    _run_chronological(_feasible(g, interval), relax, backward=True)
    return values, chains


def _fastest_stream(g, source, interval):
    fronts = [StartArrivalFront() for _ in range(g.n)]
    best: list = [None] * g.n
    best[source] = 0
    best_chain: list = [None] * g.n

    def relax(group):
        changed = False
        for e in group:
            if e.u == source:
                # a walk may begin with this very departure
                if fronts[source].insert(e.t, e.t, None):
                    changed = True
            fu = fronts[e.u]
            idx = fu.latest_start_arriving_by(e.t)
            if idx < 0:
                continue
            start = fu.starts[idx]
            arrival = e.t + e.lam
            chain = (e, fu.chains[idx])
            if fronts[e.v].insert(start, arrival, chain):
                changed = True
                dur = arrival - start
                bv = best[e.v]
                if bv is None or dur < bv:
                    best[e.v] = dur
                    best_chain[e.v] = chain
        return changed

    _run_chronological(_feasible(g, interval), relax)
    return best, best_chain


def _cost_stream(g, source, interval, per_hop: bool):
    fronts = [ArrivalCostFront() for _ in range(g.n)]
    fronts[source].insert(interval.a, 0, None)

    def relax(group):
        changed = False
        for e in group:
            fu = fronts[e.u]
            idx = fu.min_cost_arriving_by(e.t)
            if idx < 0:
                continue
            cost = fu.costs[idx] + (1 if per_hop else e.lam)
            chain = (e, fu.chains[idx])
            if fronts[e.v].insert(e.t + e.lam, cost, chain):
                changed = True
        return changed

    _run_chronological(_feasible(g, interval), relax)
    values: list = [f.min_cost() for f in fronts]
    chains: list = [f.chains[-1] if f.costs else None for f in fronts]
    values[source] = 0
    chains[source] = None
    return values, chains


_STREAM_KERNELS = {
    DistanceType.EARLIEST_ARRIVAL: lambda g, r, i: _ea_stream(g, r, i),
    DistanceType.LATEST_DEPARTURE: lambda g, r, i: _ld_stream(g, r, i),
    DistanceType.FASTEST: lambda g, r, i: _fastest_stream(g, r, i),
    DistanceType.MIN_TRANSITION_SUM: lambda g, r, i: _cost_stream(g, r, i, False),
    DistanceType.MIN_HOPS: lambda g, r, i: _cost_stream(g, r, i, True),
}


def single_source_with_paths(
    g: OrderedEdgeList,
    root: int,
    distance_type: DistanceType,
    interval: TimeInterval = FULL_INTERVAL,
) -> tuple[DistanceVector, PredecessorInfo]:
    """Stream run returning both values and predecessor links."""
    _check_vertex(g.n, root)
    values, chains = _STREAM_KERNELS[distance_type](g, root, interval)
    vec = DistanceVector(root, distance_type, interval, tuple(values))
    pred = PredecessorInfo(
        root=root,
        distance_type=distance_type,
        interval=interval,
        chains=tuple(chains),
        forward=distance_type is not DistanceType.LATEST_DEPARTURE,
    )
    return vec, pred


def optimal_path(
    g: OrderedEdgeList,
    root: int,
    v: int,
    distance_type: DistanceType,
    interval: TimeInterval = FULL_INTERVAL,
) -> Optional[TemporalPath]:
    """One optimal path between root and v (root is the target for latest departure)."""
    _check_vertex(g.n, v)
    _, pred = single_source_with_paths(g, root, distance_type, interval)
    return reconstruct_path(pred, v)


def earliest_arrival_stream(g, source, interval=FULL_INTERVAL) -> DistanceVector:
    return single_source_with_paths(g, source, DistanceType.EARLIEST_ARRIVAL, interval)[0]


def latest_departure_stream(g, target, interval=FULL_INTERVAL) -> DistanceVector:
    return single_source_with_paths(g, target, DistanceType.LATEST_DEPARTURE, interval)[0]


def fastest_stream(g, source, interval=FULL_INTERVAL) -> DistanceVector:
    return single_source_with_paths(g, source, DistanceType.FASTEST, interval)[0]


def min_transition_stream(g, source, interval=FULL_INTERVAL) -> DistanceVector:
    return single_source_with_paths(g, source, DistanceType.MIN_TRANSITION_SUM, interval)[0]


def min_hops_stream(g, source, interval=FULL_INTERVAL) -> DistanceVector:
    return single_source_with_paths(g, source, DistanceType.MIN_HOPS, interval)[0]


# ---------------------------------------------------------------------------
# label-setting searches over incidence lists


def _ea_ilists_values(il: IncidenceLists, source: int, interval: TimeInterval) -> list:
    values: list = [None] * il.n
    tentative = [INFINITY] * il.n
    tentative[source] = interval.a
    settled = [False] * il.n
    heap = [(interval.a, source)]
    b = interval.b
    while heap:
        arrival, u = heapq.heappop(heap)
        if settled[u]:
            continue
        settled[u] = True
        values[u] = arrival
        lst = il.out_lists[u]
        i = bisect_left(lst, arrival, key=lambda e: e.t)
        for k in range(i, len(lst)):
            e = lst[k]
            arr = e.t + e.lam
            if arr > b:
                continue
            if not settled[e.v] and arr < tentative[e.v]:
                tentative[e.v] = arr
                heapq.heappush(heap, (arr, e.v))
    return values


def earliest_arrival_ilists(il, source, interval=FULL_INTERVAL) -> DistanceVector:
    _check_vertex(il.n, source)
    values = _ea_ilists_values(il, source, interval)
    return DistanceVector(source, DistanceType.EARLIEST_ARRIVAL, interval, tuple(values))


def latest_departure_ilists(il, target, interval=FULL_INTERVAL) -> DistanceVector:
    _check_vertex(il.n, target)
    values: list = [None] * il.n
    tentative = [-INFINITY] * il.n
    tentative[target] = interval.b
    settled = [False] * il.n
    heap = [(-interval.b, target)]
    a = interval.a
    while heap:
        dep, u = heapq.heappop(heap)
        dep = -dep
        if settled[u]:
            continue
        settled[u] = True
        values[u] = dep
        for e in il.in_lists[u]:  # sorted by arrival
            if e.t + e.lam > dep:
                break  # later in-edges arrive after our departure
            if e.t >= a and not settled[e.u] and e.t > tentative[e.u]:
                tentative[e.u] = e.t
                heapq.heappush(heap, (-e.t, e.u))
    return DistanceVector(target, DistanceType.LATEST_DEPARTURE, interval, tuple(values))


def fastest_ilists(il, source, interval=FULL_INTERVAL) -> DistanceVector:
    """Per distinct feasible start time, one earliest-arrival pass from the source.

    A pass started at time tau also explores walks that leave the source later;
    those durations are overestimates and are superseded by the later passes,
    so the pointwise minimum over passes is exact.
    """
    _check_vertex(il.n, source)
    starts = sorted({e.t for e in il.out_lists[source] if interval.contains(e)})
    best: list = [None] * il.n
    for tau in starts:
        arr = _ea_ilists_values(il, source, TimeInterval(tau, interval.b))
        for v, a in enumerate(arr):
            if a is None or v == source:
                continue
            d = a - tau
            if best[v] is None or d < best[v]:
                best[v] = d
    best[source] = 0
    return DistanceVector(source, DistanceType.FASTEST, interval, tuple(best))


def _cost_ilists_values(il, source, interval, per_hop: bool) -> list:
    fronts = [ArrivalCostFront() for _ in range(il.n)]
    dist: list = [None] * il.n
    heap = [(0, interval.a, source)]
    b = interval.b
    while heap:
        cost, arrival, v = heapq.heappop(heap)
        fv = fronts[v]
        if fv.dominated(arrival, cost):
            continue
        fv.insert(arrival, cost)
        if dist[v] is None:
            dist[v] = cost
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
    dist[source] = 0
    return dist


def min_transition_ilists(il, source, interval=FULL_INTERVAL) -> DistanceVector:
    _check_vertex(il.n, source)
    values = _cost_ilists_values(il, source, interval, per_hop=False)
    return DistanceVector(source, DistanceType.MIN_TRANSITION_SUM, interval, tuple(values))


def min_hops_ilists(il, source, interval=FULL_INTERVAL) -> DistanceVector:
    _check_vertex(il.n, source)
    values = _cost_ilists_values(il, source, interval, per_hop=True)
    return DistanceVector(source, DistanceType.MIN_HOPS, interval, tuple(values))


# ---------------------------------------------------------------------------
# traversals of the time-node expansion


def _reachable_sweep(trs: TimeNodeGraph, seeds: list, b, record) -> None:
    """Walk the expansion from the seed nodes, reporting each usable cross edge.

    record(edge) is called once per cross edge leaving a reached node; the
    caller folds arrivals.  Chain edges only propagate reachedness.
    """
    visited = [False] * len(trs.nodes)
    stack = []
    for i in seeds:
        if not visited[i]:
            visited[i] = True
            stack.append(i)
    while stack:
        i = stack.pop()
        nxt = trs.chain_next[i]
        if nxt >= 0 and not visited[nxt]:
            visited[nxt] = True
            stack.append(nxt)
        for j, e in trs.cross[i]:
            if e.t + e.lam > b:
                continue
            record(e)
            if not visited[j]:
                visited[j] = True
                stack.append(j)


def earliest_arrival_trs(trs, source, interval=FULL_INTERVAL) -> DistanceVector:
    """Reachability sweep; the candidate arrival of a cross edge is its real
    arrival t + lam, not the node time it attaches to."""
    _check_vertex(trs.n, source)
    values: list = [None] * trs.n
    values[source] = interval.a
    start = trs.node_at_or_after(source, interval.a)
    if start >= 0:

        def record(e):
            arr = e.t + e.lam
            if values[e.v] is None or arr < values[e.v]:
                values[e.v] = arr

        _reachable_sweep(trs, [start], interval.b, record)
    return DistanceVector(source, DistanceType.EARLIEST_ARRIVAL, interval, tuple(values))


def latest_departure_trs(trs, target, interval=FULL_INTERVAL) -> DistanceVector:
    """Latest feasible first departure, via reverse reachability to the target.

    A cross edge can begin an optimal walk iff its expansion endpoint reaches
    any node of the target; the answer per vertex is the maximum availability
    over such edges.
    """
    _check_vertex(trs.n, target)
    a, b = interval.a, interval.b
    count = len(trs.nodes)
    radj: list[list[int]] = [[] for _ in range(count)]
    for i in range(count):
        nxt = trs.chain_next[i]
        if nxt >= 0:
            radj[nxt].append(i)
        for j, e in trs.cross[i]:
            if e.t >= a and e.t + e.lam <= b:
                radj[j].append(i)
    reach = [False] * count
    lo, hi = trs.vertex_slice[target]
    stack = list(range(lo, hi))
    for i in stack:
        reach[i] = True
    while stack:
        i = stack.pop()
        for p in radj[i]:
            if not reach[p]:
                reach[p] = True
                stack.append(p)
    values: list = [None] * trs.n
    values[target] = interval.b
    for i in range(count):
        for j, e in trs.cross[i]:
            if e.t < a or e.t + e.lam > b or not reach[j]:
                continue
            u = e.u
            if values[u] is None or e.t > values[u]:
                values[u] = e.t
    return DistanceVector(target, DistanceType.LATEST_DEPARTURE, interval, tuple(values))


def fastest_trs(trs, source, interval=FULL_INTERVAL) -> DistanceVector:
    """One sweep per source node that owns departures; durations are measured
    against that node's time and minimized pointwise, as for incidence lists."""
    _check_vertex(trs.n, source)
    best: list = [None] * trs.n
    best[source] = 0
    start = trs.node_at_or_after(source, interval.a)
    if start >= 0:
        _, hi = trs.vertex_slice[source]
        for i0 in range(start, hi):
            if not trs.cross[i0]:
                continue
            tau = trs.nodes[i0][1]
            arrivals: list = [None] * trs.n

            def record(e):
                arr = e.t + e.lam
                if arrivals[e.v] is None or arr < arrivals[e.v]:
                    arrivals[e.v] = arr

            _reachable_sweep(trs, [i0], interval.b, record)
            for v, arr in enumerate(arrivals):
                if arr is None or v == source:
                    continue
                d = arr - tau
                if best[v] is None or d < best[v]:
                    best[v] = d
    return DistanceVector(source, DistanceType.FASTEST, interval, tuple(best))


def _cost_trs_values(trs, source, interval, per_hop: bool) -> list:
    values: list = [None] * trs.n
    start = trs.node_at_or_after(source, interval.a)
    if start >= 0:
        dist = [INFINITY] * len(trs.nodes)
        dist[start] = 0
        heap = [(0, start)]
        b = interval.b
        while heap:
            d, i = heapq.heappop(heap)
            if d > dist[i]:
                continue
            v = trs.nodes[i][0]
            if values[v] is None or d < values[v]:
                values[v] = d
            nxt = trs.chain_next[i]
            if nxt >= 0 and d < dist[nxt]:
                dist[nxt] = d
                heapq.heappush(heap, (d, nxt))
            for j, e in trs.cross[i]:
                if e.t + e.lam > b:
                    continue
                d2 = d + (1 if per_hop else e.lam)
                if d2 < dist[j]:
                    dist[j] = d2
                    heapq.heappush(heap, (d2, j))
    values[source] = 0
    return values


def min_transition_trs(trs, source, interval=FULL_INTERVAL) -> DistanceVector:
    _check_vertex(trs.n, source)
    values = _cost_trs_values(trs, source, interval, per_hop=False)
    return DistanceVector(source, DistanceType.MIN_TRANSITION_SUM, interval, tuple(values))


def min_hops_trs(trs, source, interval=FULL_INTERVAL) -> DistanceVector:
    _check_vertex(trs.n, source)
    values = _cost_trs_values(trs, source, interval, per_hop=True)
    return DistanceVector(source, DistanceType.MIN_HOPS, interval, tuple(values))


# ---------------------------------------------------------------------------
# dispatch and whole-graph measures

_ILISTS_FUNCS = {
    DistanceType.EARLIEST_ARRIVAL: earliest_arrival_ilists,
    DistanceType.LATEST_DEPARTURE: latest_departure_ilists,
    DistanceType.FASTEST: fastest_ilists,
    DistanceType.MIN_TRANSITION_SUM: min_transition_ilists,
    DistanceType.MIN_HOPS: min_hops_ilists,
}

_TRS_FUNCS = {
    DistanceType.EARLIEST_ARRIVAL: earliest_arrival_trs,
    DistanceType.LATEST_DEPARTURE: latest_departure_trs,
    DistanceType.FASTEST: fastest_trs,
    DistanceType.MIN_TRANSITION_SUM: min_transition_trs,
    DistanceType.MIN_HOPS: min_hops_trs,
}


def single_source_distances(rep, root, distance_type, interval=FULL_INTERVAL) -> DistanceVector:
    """Dispatch on the representation; root is the target for latest departure."""
    if isinstance(rep, OrderedEdgeList):
        return single_source_with_paths(rep, root, distance_type, interval)[0]
    if isinstance(rep, IncidenceLists):
        return _ILISTS_FUNCS[distance_type](rep, root, interval)
    if isinstance(rep, TimeNodeGraph):
        return _TRS_FUNCS[distance_type](rep, root, interval)
    raise TypeError(f"unsupported representation {type(rep).__name__}")


def pair_measure(value, distance_type, interval):
    """Turn a raw single-source value into the pair distance used by diameter
    and closeness: elapsed time for earliest arrival, remaining time for
    latest departure, the raw value otherwise.  None passes through."""
    if value is None:
        return None
    if distance_type is DistanceType.EARLIEST_ARRIVAL:
        return value - interval.a
    if distance_type is DistanceType.LATEST_DEPARTURE:
        return interval.b - value
    return value


def temporal_diameter(
    g: OrderedEdgeList,
    distance_type: DistanceType,
    interval: TimeInterval = FULL_INTERVAL,
    *,
    workers: Optional[int] = None,
) -> Optional[int]:
    """Maximum pair distance over ordered reachable pairs; None if no pair.

    Earliest arrival is measured as elapsed time past the interval start and
    latest departure as time left before the interval end; the latter needs a
    finite interval end.
    """
    from .parallel import map_roots
    from .representations import to_incidence_lists

    if distance_type is DistanceType.LATEST_DEPARTURE and not interval.finite:
        raise ValueError("latest-departure diameter needs a finite interval end")
    il = to_incidence_lists(g)
    func = _ILISTS_FUNCS[distance_type]

    def eccentricity(root):
        vec = func(il, root, interval)
        worst = None
        for v, value in enumerate(vec.values):
            if v == root or value is None:
                continue
            d = pair_measure(value, distance_type, interval)
            if worst is None or d > worst:
                worst = d
        return worst

    best = None
    for worst in map_roots(eccentricity, range(g.n), workers):
        if worst is not None and (best is None or worst > best):
            best = worst
    return best
