"""Edge list files, cleaning, and whole-graph statistics.

The interchange format is one contact per line: ``u v t [lam]``, whitespace
separated, with arbitrary string vertex names, a default transition time of 1,
and ``#`` starting a comment line.  Vertex names are mapped to dense ids in
order of first appearance; the mapping is kept on the returned graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields
from operator import attrgetter
from typing import Optional

from .core import OrderedEdgeList, TemporalEdge


class EdgeListParseError(ValueError):
    """Raised for malformed edge list input; carries file and line context."""

    def __init__(self, message: str, path: str, line: int):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line


def load_ordered_edge_list(path: str, directed: bool = True) -> OrderedEdgeList:
    """Parse an edge list file into an ordered edge list.

    With directed=False every input contact is stored in both orientations and
    the result is flagged as an undirected expansion.
    """
    labels: dict[str, int] = {}
    edges: list[TemporalEdge] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) not in (3, 4):
                raise EdgeListParseError(
                    f"expected 'u v t [lam]', got {len(parts)} fields", path, lineno
                )
            u = labels.setdefault(parts[0], len(labels))
            v = labels.setdefault(parts[1], len(labels))
            try:
                t = int(parts[2])
                lam = int(parts[3]) if len(parts) == 4 else 1
            except ValueError:
                raise EdgeListParseError(
                    f"times must be integers, got {parts[2:]!r}", path, lineno
                ) from None
            if t < 0:
                raise EdgeListParseError(f"negative availability time {t}", path, lineno)
            if lam < 0:
                raise EdgeListParseError(f"negative transition time {lam}", path, lineno)
            edges.append(TemporalEdge(u, v, t, lam))
            if not directed:
                edges.append(TemporalEdge(v, u, t, lam))
    edges.sort(key=attrgetter("t"))
    return OrderedEdgeList(
        n=len(labels),
        edges=tuple(edges),
        directed=directed,
        labels=tuple(labels),
    )


def write_edge_list(g: OrderedEdgeList, path: str, include_transition: bool = True) -> None:
    """Write the graph back out, one edge per line, using original labels.

    For an undirected expansion both stored orientations are written; reloading
    with directed=False would double them again, so undirected graphs should be
    rewritten from their source contacts instead.  Lines use LF endings.
    """
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for e in g.edges:
            u, v = g.label_of(e.u), g.label_of(e.v)
            if include_transition:
                fh.write(f"{u} {v} {e.t} {e.lam}\n")
            else:
                fh.write(f"{u} {v} {e.t}\n")


def normalize(
    g: OrderedEdgeList,
    *,
    remove_self_loops: bool = False,
    deduplicate: bool = False,
    shift_time_origin: bool = False,
) -> OrderedEdgeList:
    """Cleaning pass: drop self loops, drop exact duplicates, shift times to 0.

    Deduplication keeps the first occurrence of each (u, v, t, lam) tuple.
    Shifting subtracts the minimum availability time from every edge, which
    leaves all durations unchanged.
    """
    edges = list(g.edges)
    if remove_self_loops:
        edges = [e for e in edges if e.u != e.v]
    if deduplicate:
        seen = set()
        kept = []
        for e in edges:
            key = e.as_tuple()
            if key not in seen:
                seen.add(key)
                kept.append(e)
        edges = kept
    if shift_time_origin and edges:
        origin = min(e.t for e in edges)
        if origin:
            edges = [TemporalEdge(e.u, e.v, e.t - origin, e.lam) for e in edges]
    return OrderedEdgeList(n=g.n, edges=tuple(edges), directed=g.directed, labels=g.labels)


@dataclass(frozen=True)
class GraphStatistics:
    """Summary counts of a temporal graph."""

    n: int
    m: int
    distinct_timestamps: int
    aggregated_edge_count: int
    in_degree_min: int
    in_degree_max: int
    out_degree_min: int
    out_degree_max: int
    min_time: int
    max_arrival_time: int

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def to_text(self) -> str:
        return "\n".join(f"{k} {v}" for k, v in self.to_dict().items())

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def get_statistics(g: OrderedEdgeList) -> GraphStatistics:
    """Compute summary statistics in one pass over the edge stream."""
    n = g.n
    out_deg = [0] * n
    in_deg = [0] * n
    times = set()
    pairs = set()
    max_arrival = 0
    for e in g.edges:
        out_deg[e.u] += 1
        in_deg[e.v] += 1
        times.add(e.t)
        pairs.add(e.u * n + e.v)
        arr = e.t + e.lam
        if arr > max_arrival:
            max_arrival = arr
    return GraphStatistics(
        n=n,
        m=g.m,
        distinct_timestamps=len(times),
        aggregated_edge_count=len(pairs),
        in_degree_min=min(in_deg) if n else 0,
        in_degree_max=max(in_deg) if n else 0,
        out_degree_min=min(out_deg) if n else 0,
        out_degree_max=max(out_deg) if n else 0,
        min_time=g.edges[0].t if g.m else 0,
        max_arrival_time=max_arrival,
    )
