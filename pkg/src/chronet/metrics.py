"""Local and global temporal statistics.

Burstiness of a contact sequence, clustering of a vertex's neighborhood over
time, network-wide efficiency, and the overlap of consecutive snapshots.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import FULL_INTERVAL, OrderedEdgeList, TimeInterval, VertexId
from .centrality import temporal_closeness
from .core import DistanceType


# ---------------------------------------------------------------------------
# burstiness


@dataclass(frozen=True)
class InterContactSequence:
    """Sorted contact times with their inter-contact gap statistics."""

    times: tuple
    gaps: tuple
    gap_mean: float
    gap_std: float  # population form

    @classmethod
    def from_times(cls, times: Sequence[int]) -> "InterContactSequence":
        ts = tuple(sorted(times))
        gaps = tuple(b - a for a, b in zip(ts, ts[1:]))
        if gaps:
            mean = statistics.fmean(gaps)
            std = statistics.pstdev(gaps)
        else:
            mean = 0.0
            std = 0.0
        return cls(times=ts, gaps=gaps, gap_mean=mean, gap_std=std)

    def burstiness(self) -> Optional[float]:
        """(std - mean) / (std + mean) of the gaps; None when undefined."""
        if len(self.times) < 2:
            return None
        if self.gap_std + self.gap_mean == 0:
            return None  # all gaps zero
        return (self.gap_std - self.gap_mean) / (self.gap_std + self.gap_mean)


def burstiness(times: Sequence[int]) -> Optional[float]:
    return InterContactSequence.from_times(times).burstiness()


def pair_contact_times(
    g: OrderedEdgeList,
    u: VertexId,
    v: VertexId,
    interval: TimeInterval = FULL_INTERVAL,
) -> tuple:
    """Availability times of edges between u and v, either direction.

    Undirected inputs store each contact in both orientations, so only the
    canonical one is read there; directed inputs merge both directions.
    """
    if g.directed:
        keep = ((u, v), (v, u)) if u != v else ((u, u),)
    else:
        keep = ((min(u, v), max(u, v)),)
    return tuple(
        e.t for e in g.edges if (e.u, e.v) in keep and interval.contains(e)
    )


def vertex_contact_times(
    g: OrderedEdgeList, u: VertexId, interval: TimeInterval = FULL_INTERVAL
) -> tuple:
    """Availability times of all edges incident to u (once per contact)."""
    if g.directed:
        return tuple(
            e.t for e in g.edges if (e.u == u or e.v == u) and interval.contains(e)
        )
    # the undirected expansion lists every incident contact once as an out-edge
    return tuple(e.t for e in g.edges if e.u == u and interval.contains(e))


def pair_burstiness(
    g: OrderedEdgeList,
    u: VertexId,
    v: VertexId,
    interval: TimeInterval = FULL_INTERVAL,
) -> Optional[float]:
    return burstiness(pair_contact_times(g, u, v, interval))


def vertex_burstiness(
    g: OrderedEdgeList, u: VertexId, interval: TimeInterval = FULL_INTERVAL
) -> Optional[float]:
    return burstiness(vertex_contact_times(g, u, interval))


def burstiness_vector(
    g: OrderedEdgeList, interval: TimeInterval = FULL_INTERVAL
) -> list:
    """Per-vertex burstiness; None entries where undefined."""
    if g.directed:
        contacts: list[list] = [[] for _ in range(g.n)]
        for e in g.edges:
            if not interval.contains(e):
                continue
            contacts[e.u].append(e.t)
            if e.v != e.u:
                contacts[e.v].append(e.t)
    else:
        contacts = [[] for _ in range(g.n)]
        for e in g.edges:
            if interval.contains(e):
                contacts[e.u].append(e.t)
    return [burstiness(ts) for ts in contacts]


# ---------------------------------------------------------------------------
# temporal clustering coefficient


def _clustering_context(g: OrderedEdgeList, interval: TimeInterval):
    """Out-neighborhoods plus, per timestamp, the linked unordered pairs."""
    neighborhoods: list[set] = [set() for _ in range(g.n)]
    linked_pairs: dict[int, set] = {}
    for e in g.edges:
        if not interval.contains(e):
            continue
        pairs = linked_pairs.setdefault(e.t, set())
        if e.u != e.v:
            neighborhoods[e.u].add(e.v)
            pairs.add((e.u, e.v) if e.u < e.v else (e.v, e.u))
    return neighborhoods, linked_pairs


def _clustering_of(u, neighborhoods, linked_pairs) -> float:
    neighborhood = neighborhoods[u]
    deg = len(neighborhood)
    if deg < 2 or not linked_pairs:
        return 0.0
    hits = 0
    for pairs in linked_pairs.values():
        for v, w in pairs:
            if v in neighborhood and w in neighborhood:
                hits += 1
    return hits / (len(linked_pairs) * (deg * (deg - 1) // 2))


def temporal_clustering_coefficient(
    g: OrderedEdgeList, u: VertexId, interval: TimeInterval = FULL_INTERVAL
) -> float:
    """How often pairs of u's neighbors are linked, averaged over timestamps.

    The neighborhood is u's out-neighborhood over the whole interval; at each
    distinct timestamp a neighbor pair counts when some edge (either
    direction) connects it.  Fewer than two neighbors, or no timestamps,
    gives 0.
    """
    if not 0 <= u < g.n:
        raise ValueError(f"vertex id {u} out of range 0..{g.n - 1}")
    neighborhoods, linked_pairs = _clustering_context(g, interval)
    return _clustering_of(u, neighborhoods, linked_pairs)


def clustering_vector(
    g: OrderedEdgeList, interval: TimeInterval = FULL_INTERVAL
) -> list[float]:
    neighborhoods, linked_pairs = _clustering_context(g, interval)
    return [_clustering_of(u, neighborhoods, linked_pairs) for u in range(g.n)]


# ---------------------------------------------------------------------------
# temporal efficiency


def temporal_efficiency(
    g: OrderedEdgeList,
    distance_type: DistanceType,
    interval: TimeInterval = FULL_INTERVAL,
    *,
    zero_distance_value: float = 1.0,
    workers: Optional[int] = None,
) -> Optional[float]:
    """Mean reciprocal distance over ordered pairs, 1/unreachable = 0.

    Equals the closeness total divided by n(n-1); None when n < 2.
    """
    n = g.n
    if n < 2:
        return None
    closeness = temporal_closeness(
        g,
        distance_type,
        interval,
        zero_distance_value=zero_distance_value,
        workers=workers,
    )
    return sum(closeness.scores) / (n * (n - 1))


# ---------------------------------------------------------------------------
# topological overlap


def _snapshot_neighbors(g: OrderedEdgeList, interval: TimeInterval):
    """t -> vertex -> set of neighbors (either direction, self excluded)."""
    snapshots: dict[int, dict[int, set]] = {}
    for e in g.edges:
        if not interval.contains(e) or e.u == e.v:
            continue
        snap = snapshots.setdefault(e.t, {})
        snap.setdefault(e.u, set()).add(e.v)
        snap.setdefault(e.v, set()).add(e.u)
    return snapshots


def _overlap_of(u, times, snapshots) -> float:
    terms = []
    empty: set = set()
    for t1, t2 in zip(times, times[1:]):
        a = snapshots.get(t1, {}).get(u, empty)
        b = snapshots.get(t2, {}).get(u, empty)
        denom = math.sqrt(len(a) * len(b))
        terms.append(len(a & b) / denom if denom else 0.0)
    if not terms:
        return 0.0
    return sum(terms) / len(terms)


def topological_overlap(
    g: OrderedEdgeList, u: VertexId, interval: TimeInterval = FULL_INTERVAL
) -> float:
    """Average cosine overlap of u's neighbor sets at consecutive timestamps.

    Consecutive means consecutive in the sorted distinct timestamps of the
    whole graph within the interval; a term with an empty side is 0.
    """
    if not 0 <= u < g.n:
        raise ValueError(f"vertex id {u} out of range 0..{g.n - 1}")
    times = sorted({e.t for e in g.edges if interval.contains(e)})
    snapshots = _snapshot_neighbors(g, interval)
    return _overlap_of(u, times, snapshots)


def overlap_vector(
    g: OrderedEdgeList, interval: TimeInterval = FULL_INTERVAL
) -> list[float]:
    times = sorted({e.t for e in g.edges if interval.contains(e)})
    snapshots = _snapshot_neighbors(g, interval)
    return [_overlap_of(u, times, snapshots) for u in range(g.n)]


def global_topological_overlap(
    g: OrderedEdgeList, interval: TimeInterval = FULL_INTERVAL
) -> float:
    """Mean local overlap over all vertices; 0 for the empty vertex set."""
    if g.n == 0:
        return 0.0
    return sum(overlap_vector(g, interval)) / g.n
