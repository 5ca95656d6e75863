"""Core temporal graph types.

A temporal graph is a set of directed edges (u, v, t, lam): the edge can be
taken at availability time t and reaches v at time t + lam.  The whole package
works on a single canonical in-memory form, the OrderedEdgeList, which keeps
the edges sorted by availability time.  Restricting a graph to a time interval
[a, b] keeps exactly the edges that both depart and arrive inside it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional, Sequence

VertexId = int
Time = int

INFINITY = math.inf


class DistanceType(Enum):
    """Optimality criteria for time-respecting paths."""

    EARLIEST_ARRIVAL = "earliest-arrival"
    LATEST_DEPARTURE = "latest-departure"
    FASTEST = "fastest"
    MIN_TRANSITION_SUM = "min-transition"
    MIN_HOPS = "min-hops"


@dataclass(frozen=True, slots=True)
class TemporalEdge:
    """Directed edge available at time t whose traversal takes lam time units."""

    u: VertexId
    v: VertexId
    t: Time
    lam: int = 1

    def __post_init__(self):
        if self.u < 0 or self.v < 0:
            raise ValueError(f"vertex ids must be non-negative, got ({self.u}, {self.v})")
        if self.t < 0:
            raise ValueError(f"availability time must be non-negative, got {self.t}")
        if self.lam < 0:
            raise ValueError(f"transition time must be non-negative, got {self.lam}")

    @property
    def arrival(self) -> Time:
        return self.t + self.lam

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.u, self.v, self.t, self.lam)


@dataclass(frozen=True, slots=True)
class TimeInterval:
    """Closed interval [a, b]; an edge participates iff t >= a and t + lam <= b."""

    a: Time = 0
    b: Time | float = INFINITY

    def __post_init__(self):
        if self.a < 0:
            raise ValueError(f"interval start must be non-negative, got {self.a}")
        if self.b < self.a:
            raise ValueError(f"empty interval [{self.a}, {self.b}]")

    def contains(self, e: TemporalEdge) -> bool:
        return e.t >= self.a and e.t + e.lam <= self.b

    @property
    def finite(self) -> bool:
        return self.b != INFINITY


FULL_INTERVAL = TimeInterval()


@dataclass(frozen=True)
class OrderedEdgeList:
    """Canonical temporal graph: edges sorted by availability time.

    `directed` records whether the edge set is to be read as directed; loading
    an undirected file stores both orientations of every contact and sets the
    flag to False.  `labels` maps dense vertex ids back to the input names.
    """

    n: int
    edges: tuple[TemporalEdge, ...]
    directed: bool = True
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if not isinstance(self.edges, tuple):
            object.__setattr__(self, "edges", tuple(self.edges))
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError(f"expected {self.n} labels, got {len(self.labels)}")
        last_t = None
        for e in self.edges:
            if e.u >= self.n or e.v >= self.n:
                raise ValueError(f"edge {e} references a vertex >= n={self.n}")
            if last_t is not None and e.t < last_t:
                raise ValueError("edges must be sorted by availability time")
            last_t = e.t

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _label_index(self) -> dict[str, int]:
        if self.labels is None:
            return {}
        return {name: i for i, name in enumerate(self.labels)}

    def label_of(self, v: VertexId) -> str:
        if self.labels is not None:
            return self.labels[v]
        return str(v)

    def id_of(self, label: str) -> VertexId:
        """Resolve an input vertex name (or a printed dense id) to its id."""
        if self.labels is not None and label in self._label_index:
            return self._label_index[label]
        try:
            v = int(label)
        except ValueError:
            raise KeyError(f"unknown vertex {label!r}") from None
        if not 0 <= v < self.n:
            raise KeyError(f"vertex id {v} out of range 0..{self.n - 1}")
        return v


def restrict_to_interval(g: OrderedEdgeList, interval: TimeInterval) -> OrderedEdgeList:
    """Keep only edges that fully fit into the interval; order is preserved."""
    kept = tuple(e for e in g.edges if interval.contains(e))
    if len(kept) == len(g.edges):
        return g
    return OrderedEdgeList(n=g.n, edges=kept, directed=g.directed, labels=g.labels)


@dataclass(frozen=True)
class TemporalPath:
    """A non-empty sequence of temporal edges meant to form a time-respecting path."""

    edges: tuple[TemporalEdge, ...]

    def __post_init__(self):
        if not isinstance(self.edges, tuple):
            object.__setattr__(self, "edges", tuple(self.edges))
        if len(self.edges) == 0:
            raise ValueError("a temporal path must contain at least one edge")

    @property
    def start(self) -> Time:
        return self.edges[0].t

    @property
    def arrival(self) -> Time:
        return self.edges[-1].arrival

    @property
    def duration(self) -> Time:
        return self.arrival - self.start

    @property
    def transition_sum(self) -> int:
        return sum(e.lam for e in self.edges)

    @property
    def hops(self) -> int:
        return len(self.edges)

    def vertices(self) -> list[VertexId]:
        return [self.edges[0].u] + [e.v for e in self.edges]


@dataclass(frozen=True, slots=True)
class PathMetrics:
    start: Time
    arrival: Time
    duration: Time
    transition_sum: int
    hops: int


def is_valid_temporal_path(path: TemporalPath) -> bool:
    """True iff consecutive edges connect, never overlap in time, and no vertex repeats."""
    edges = path.edges
    for prev, nxt in zip(edges, edges[1:]):
        if prev.v != nxt.u:
            return False
        if prev.t + prev.lam > nxt.t:
            return False
    seen = set()
    for v in path.vertices():
        if v in seen:
            return False
        seen.add(v)
    return True


def is_valid_temporal_walk(edges: Sequence[TemporalEdge]) -> bool:
    """Like path validity but vertices may repeat."""
    if len(edges) == 0:
        return False
    for prev, nxt in zip(edges, edges[1:]):
        if prev.v != nxt.u or prev.t + prev.lam > nxt.t:
            return False
    return True


def path_metrics(path: TemporalPath) -> PathMetrics:
    """Metrics of a valid temporal path; rejects invalid edge sequences."""
    if not is_valid_temporal_path(path):
        raise ValueError("not a valid temporal path")
    return PathMetrics(
        start=path.start,
        arrival=path.arrival,
        duration=path.duration,
        transition_sum=path.transition_sum,
        hops=path.hops,
    )


def edges_from_tuples(rows: Iterable[tuple]) -> tuple[TemporalEdge, ...]:
    """Convenience: build edges from (u, v, t) or (u, v, t, lam) tuples."""
    return tuple(TemporalEdge(*row) for row in rows)
