"""Temporal graph analysis: distances, centrality, and activity metrics
over edge streams (u, v, t, lam)."""

from .core import (
    FULL_INTERVAL,
    INFINITY,
    DistanceType,
    OrderedEdgeList,
    PathMetrics,
    TemporalEdge,
    TemporalPath,
    TimeInterval,
    edges_from_tuples,
    is_valid_temporal_path,
    is_valid_temporal_walk,
    path_metrics,
    restrict_to_interval,
)
from .io import (
    EdgeListParseError,
    GraphStatistics,
    get_statistics,
    load_ordered_edge_list,
    normalize,
    write_edge_list,
)
from .representations import (
    AggregatedGraph,
    EdgeAdjacencyGraph,
    EdgeBudgetError,
    IncidenceLists,
    TimeNodeGraph,
    to_aggregated_graph,
    to_edge_adjacency_graph,
    to_incidence_lists,
    to_time_node_graph,
)
from .distances import (
    DistanceVector,
    PredecessorInfo,
    optimal_path,
    pair_measure,
    reconstruct_path,
    single_source_distances,
    single_source_with_paths,
    temporal_diameter,
)
from .centrality import (
    CentralityVector,
    KatzParams,
    PageRankParams,
    temporal_closeness,
    temporal_degree,
    temporal_edge_betweenness,
    temporal_katz,
    temporal_pagerank,
    topk_closeness,
)
from .metrics import (
    InterContactSequence,
    burstiness,
    burstiness_vector,
    clustering_vector,
    global_topological_overlap,
    overlap_vector,
    pair_burstiness,
    pair_contact_times,
    temporal_clustering_coefficient,
    temporal_efficiency,
    topological_overlap,
    vertex_burstiness,
    vertex_contact_times,
)
from .cli import rank_correlation

__version__ = "0.1.0"

__all__ = [
    "AggregatedGraph",
    "CentralityVector",
    "DistanceType",
    "DistanceVector",
    "EdgeAdjacencyGraph",
    "EdgeBudgetError",
    "EdgeListParseError",
    "FULL_INTERVAL",
    "GraphStatistics",
    "INFINITY",
    "IncidenceLists",
    "InterContactSequence",
    "KatzParams",
    "OrderedEdgeList",
    "PageRankParams",
    "PathMetrics",
    "PredecessorInfo",
    "TemporalEdge",
    "TemporalPath",
    "TimeInterval",
    "TimeNodeGraph",
    "burstiness",
    "burstiness_vector",
    "clustering_vector",
    "edges_from_tuples",
    "get_statistics",
    "global_topological_overlap",
    "is_valid_temporal_path",
    "is_valid_temporal_walk",
    "load_ordered_edge_list",
    "normalize",
    "optimal_path",
    "overlap_vector",
    "pair_burstiness",
    "pair_contact_times",
    "pair_measure",
    "path_metrics",
    "rank_correlation",
    "reconstruct_path",
    "restrict_to_interval",
    "single_source_distances",
    "single_source_with_paths",
    "temporal_closeness",
    "temporal_clustering_coefficient",
    "temporal_degree",
    "temporal_diameter",
    "temporal_edge_betweenness",
    "temporal_efficiency",
    "temporal_katz",
    "temporal_pagerank",
    "to_aggregated_graph",
    "to_edge_adjacency_graph",
    "to_incidence_lists",
    "to_time_node_graph",
    "topk_closeness",
    "topological_overlap",
    "vertex_burstiness",
    "vertex_contact_times",
    "write_edge_list",
]
