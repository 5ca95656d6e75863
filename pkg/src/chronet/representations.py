"""Derived graph representations built from an ordered edge stream.

Besides the raw stream the package works with four views:

* IncidenceLists: per-vertex out-edges sorted by availability and in-edges
  sorted by arrival, for label-setting searches.
* TimeNodeGraph: the time-respecting static expansion.  Every vertex is split
  into (vertex, time) nodes, zero-weight chain edges connect consecutive times
  of the same vertex, and every temporal edge becomes one weighted cross edge
  into the earliest node of its head that is not before its arrival.
* EdgeAdjacencyGraph: one node per temporal edge, with an arc between two
  edges iff the second can directly continue the first in time.
* AggregatedGraph: the underlying static graph with contact frequencies.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Optional

from .core import OrderedEdgeList, TemporalEdge


@dataclass(frozen=True)
class IncidenceLists:
    """Per-vertex incidence: out by availability time, in by arrival time."""

    n: int
    out_lists: tuple[tuple[TemporalEdge, ...], ...]
    in_lists: tuple[tuple[TemporalEdge, ...], ...]

    def dump(self) -> str:
        rows = []
        for v in range(self.n):
            out = " ".join(str(e.as_tuple()) for e in self.out_lists[v])
            rows.append(f"{v} out: {out}")
        return "\n".join(rows)


def to_incidence_lists(g: OrderedEdgeList) -> IncidenceLists:
    out_lists: list[list[TemporalEdge]] = [[] for _ in range(g.n)]
    in_lists: list[list[TemporalEdge]] = [[] for _ in range(g.n)]
    for e in g.edges:
        out_lists[e.u].append(e)  # stream order, already sorted by t
        in_lists[e.v].append(e)
    for lst in in_lists:
        lst.sort(key=lambda e: e.t + e.lam)
    return IncidenceLists(
        n=g.n,
        out_lists=tuple(tuple(lst) for lst in out_lists),
        in_lists=tuple(tuple(lst) for lst in in_lists),
    )


@dataclass(frozen=True)
class TimeNodeGraph:
    """Time-respecting static expansion of a temporal graph.

    Nodes are (vertex, time) pairs, grouped by vertex with ascending times.
    For vertex u the node times are u's distinct out-availability times, plus
    the maximum in-arrival of u when u has any in-edge (so that every arrival
    has a node at or after it).  chain_next[i] links node i to the next node of
    the same vertex (weight 0); cross edges carry the original temporal edge.
    Vertices without any incident edge have no nodes at all.
    """

    n: int
    nodes: tuple[tuple[int, int], ...]
    vertex_slice: tuple[tuple[int, int], ...]
    chain_next: tuple[int, ...]
    cross: tuple[tuple[tuple[int, TemporalEdge], ...], ...]

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def node_at_or_after(self, v: int, time: int) -> int:
        """Index of the first node of v with node time >= time, or -1."""
        lo, hi = self.vertex_slice[v]
        while lo < hi:
            mid = (lo + hi) // 2
            if self.nodes[mid][1] < time:
                lo = mid + 1
            else:
                hi = mid
        if lo == self.vertex_slice[v][1]:
            return -1
        return lo

    def static_edges(self) -> list[tuple[tuple[int, int], tuple[int, int], int]]:
        """All expansion edges as ((u, t), (v, t'), weight) triples."""
        result = []
        for i, nxt in enumerate(self.chain_next):
            if nxt >= 0:
                result.append((self.nodes[i], self.nodes[nxt], 0))
        for i, targets in enumerate(self.cross):
            for j, e in targets:
                result.append((self.nodes[i], self.nodes[j], e.lam))
        return result

    def dump(self) -> str:
        rows = [f"nodes: {self.node_count}"]
        for src, dst, w in self.static_edges():
            rows.append(f"{src} -> {dst} [{w}]")
        return "\n".join(rows)


def to_time_node_graph(g: OrderedEdgeList) -> TimeNodeGraph:
    out_times: list[set[int]] = [set() for _ in range(g.n)]
    max_in_arrival: list[Optional[int]] = [None] * g.n
    for e in g.edges:
        out_times[e.u].add(e.t)
        arr = e.t + e.lam
        prev = max_in_arrival[e.v]
        if prev is None or arr > prev:
            max_in_arrival[e.v] = arr

    nodes: list[tuple[int, int]] = []
    vertex_slice: list[tuple[int, int]] = []
    index: dict[tuple[int, int], int] = {}
    for v in range(g.n):
        times = set(out_times[v])
        if max_in_arrival[v] is not None:
            times.add(max_in_arrival[v])
        start = len(nodes)
        for t in sorted(times):
            index[(v, t)] = len(nodes)
            nodes.append((v, t))
        vertex_slice.append((start, len(nodes)))

    chain_next = [-1] * len(nodes)
    for v, (start, end) in enumerate(vertex_slice):
        for i in range(start, end - 1):
            chain_next[i] = i + 1

    cross: list[list[tuple[int, TemporalEdge]]] = [[] for _ in nodes]
    trs = TimeNodeGraph(
        n=g.n,
        nodes=tuple(nodes),
        vertex_slice=tuple(vertex_slice),
        chain_next=tuple(chain_next),
        cross=tuple(),  # placeholder, rebuilt below with targets resolved
    )
    for e in g.edges:
        src = index[(e.u, e.t)]
        tgt = trs.node_at_or_after(e.v, e.t + e.lam)
        assert tgt >= 0, "head vertex must own a node at or after the arrival"
        cross[src].append((tgt, e))
    return TimeNodeGraph(
        n=g.n,
        nodes=trs.nodes,
        vertex_slice=trs.vertex_slice,
        chain_next=trs.chain_next,
        cross=tuple(tuple(lst) for lst in cross),
    )


class EdgeBudgetError(RuntimeError):
    """Raised when a representation would exceed its configured edge budget."""


@dataclass(frozen=True)
class EdgeAdjacencyGraph:
    """One node per temporal edge; arcs link edges that can follow each other.

    Node i is g.edges[i].  An arc i -> j exists iff edges[i].v == edges[j].u
    and edges[i] arrives no later than edges[j] departs.  An edge never links
    to itself.  Distinct zero-lam edges sharing a vertex and a timestamp can
    form cycles; consumers must not assume acyclicity.
    """

    m: int
    edges: tuple[TemporalEdge, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def arc_count(self) -> int:
        return sum(len(a) for a in self.adjacency)

    def dump(self) -> str:
        rows = []
        for i, targets in enumerate(self.adjacency):
            for j in targets:
                rows.append(f"{self.edges[i].as_tuple()} -> {self.edges[j].as_tuple()}")
        return "\n".join(rows)


def to_edge_adjacency_graph(
    g: OrderedEdgeList, max_arcs: Optional[int] = None
) -> EdgeAdjacencyGraph:
    """Build the edge adjacency view; size is quadratic in m in the worst case.

    max_arcs bounds the number of arcs; exceeding it raises EdgeBudgetError
    rather than truncating silently.
    """
    by_tail: list[list[int]] = [[] for _ in range(g.n)]
    tail_times: list[list[int]] = [[] for _ in range(g.n)]
    for i, e in enumerate(g.edges):
        by_tail[e.u].append(i)  # stream order keeps these sorted by t
        tail_times[e.u].append(e.t)
    adjacency: list[tuple[int, ...]] = []
    total = 0
    for i, e in enumerate(g.edges):
        arr = e.t + e.lam
        candidates = by_tail[e.v]
        first = bisect_left(tail_times[e.v], arr)
        targets = [j for j in candidates[first:] if j != i]
        total += len(targets)
        if max_arcs is not None and total > max_arcs:
            raise EdgeBudgetError(
                f"edge adjacency graph exceeds the budget of {max_arcs} arcs"
            )
        adjacency.append(tuple(targets))
    return EdgeAdjacencyGraph(m=g.m, edges=g.edges, adjacency=tuple(adjacency))


@dataclass(frozen=True)
class AggregatedGraph:
    """Static directed graph with per-pair contact counts."""

    n: int
    frequencies: dict[tuple[int, int], int]

    @property
    def edge_count(self) -> int:
        return len(self.frequencies)

    @property
    def total_contacts(self) -> int:
        return sum(self.frequencies.values())

    def frequency(self, u: int, v: int) -> int:
        return self.frequencies.get((u, v), 0)

    def dump(self) -> str:
        rows = []
        for (u, v), w in sorted(self.frequencies.items()):
            rows.append(f"{u} {v} {w}")
        return "\n".join(rows)


def to_aggregated_graph(g: OrderedEdgeList) -> AggregatedGraph:
    freq: dict[tuple[int, int], int] = {}
    for e in g.edges:
        key = (e.u, e.v)
        freq[key] = freq.get(key, 0) + 1
    return AggregatedGraph(n=g.n, frequencies=freq)
