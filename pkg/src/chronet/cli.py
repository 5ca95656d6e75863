"""Command-line front-end.

Each subcommand is a thin adapter: load the edge list, call one library
operation, serialize its result.  Text output uses the same "id value" lines
the library types produce; json output is a single document with the
content-determining config echoed back, so fixed input and config give
identical bytes.

Exit codes: 0 success, 1 runtime error (bad data, unknown label, resource
limits), 2 usage error (unknown command or flags, rejected by argparse).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .centrality import (
    KatzParams,
    PageRankParams,
    temporal_closeness,
    temporal_edge_betweenness,
    temporal_katz,
    temporal_pagerank,
    topk_closeness,
)
from .core import (
    FULL_INTERVAL,
    DistanceType,
    OrderedEdgeList,
    TimeInterval,
    restrict_to_interval,
)
from .distances import single_source_distances, temporal_diameter
from .io import get_statistics, load_ordered_edge_list, normalize, write_edge_list
from .metrics import (
    burstiness_vector,
    clustering_vector,
    global_topological_overlap,
    overlap_vector,
    pair_burstiness,
    temporal_efficiency,
)
from .representations import to_incidence_lists, to_time_node_graph

_DISTANCE_CHOICES = tuple(d.value for d in DistanceType)
_REPRESENTATION_CHOICES = ("stream", "ilists", "trs")


def _name_of(g: OrderedEdgeList, v: int) -> str:
    return g.labels[v] if g.labels is not None else str(v)


def _json_value(v):
    # json has no Infinity literal; unreachable stays null
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    return v


def _parse_interval(pair) -> TimeInterval:
    if pair is None:
        return FULL_INTERVAL
    a = int(pair[0])
    b = math.inf if pair[1].lower() == "inf" else int(pair[1])
    return TimeInterval(a, b)


def _interval_echo(interval: TimeInterval) -> list:
    return [interval.a, "inf" if not interval.finite else interval.b]


def _load(args):
    g = load_ordered_edge_list(args.input, directed=not args.undirected)
    return g, _parse_interval(args.interval)


def _base_config(args, interval: TimeInterval) -> dict:
    return {
        "input": args.input,
        "directed": not args.undirected,
        "interval": _interval_echo(interval),
    }


def _vector_payload(g, scores, none_text="undefined"):
    """(results, lines) for per-vertex scores; None entries print as text."""
    values = []
    lines = []
    for v, score in enumerate(scores):
        name = _name_of(g, v)
        values.append([name, _json_value(score)])
        lines.append(f"{name} {none_text if score is None else score}")
    return {"values": values}, lines


def _cmd_stats(args):
    g, interval = _load(args)
    stats = get_statistics(restrict_to_interval(g, interval))
    return _base_config(args, interval), stats.to_dict(), stats.to_text().splitlines()


def _cmd_distances(args):
    g, interval = _load(args)
    root = g.id_of(args.source)
    dtype = DistanceType(args.distance)
    if args.representation == "ilists":
        rep = to_incidence_lists(g)
    elif args.representation == "trs":
        rep = to_time_node_graph(g)
    else:
        rep = g
    vec = single_source_distances(rep, root, dtype, interval)
    config = _base_config(args, interval)
    config.update(
        source=args.source, distance=args.distance, representation=args.representation
    )
    values = [
        [_name_of(g, v), _json_value(value)] for v, value in enumerate(vec.values)
    ]
    return config, {"root": _name_of(g, root), "values": values}, vec.to_lines(g.labels)


def _cmd_diameter(args):
    g, interval = _load(args)
    dtype = DistanceType(args.distance)
    value = temporal_diameter(g, dtype, interval, workers=args.threads)
    config = _base_config(args, interval)
    config.update(distance=args.distance)
    line = f"diameter {'undefined' if value is None else value}"
    return config, {"diameter": _json_value(value)}, [line]


def _cmd_closeness(args):
    g, interval = _load(args)
    dtype = DistanceType(args.distance)
    vec = temporal_closeness(
        g,
        dtype,
        interval,
        zero_distance_value=args.zero_distance_value,
        workers=args.threads,
    )
    config = _base_config(args, interval)
    config.update(distance=args.distance, zero_distance_value=args.zero_distance_value)
    results, lines = _vector_payload(g, vec.scores)
    return config, results, lines


def _cmd_topk(args):
    g, interval = _load(args)
    dtype = DistanceType(args.distance)
    ranked = topk_closeness(
        to_incidence_lists(g),
        args.k,
        dtype,
        interval,
        zero_distance_value=args.zero_distance_value,
    )
    config = _base_config(args, interval)
    config.update(
        k=args.k, distance=args.distance, zero_distance_value=args.zero_distance_value
    )
    values = []
    lines = []
    for rank, (v, score) in enumerate(ranked, start=1):
        name = _name_of(g, v)
        values.append([rank, name, score])
        lines.append(f"{rank} {name} {score}")
    return config, {"values": values}, lines


def _cmd_betweenness(args):
    g, interval = _load(args)
    vec = temporal_edge_betweenness(g, interval, max_arcs=args.max_arcs)
    config = _base_config(args, interval)
    if args.max_arcs is not None:
        config.update(max_arcs=args.max_arcs)
    values = [[i, score] for i, score in enumerate(vec.scores)]
    lines = [f"{i} {score}" for i, score in enumerate(vec.scores)]
    return config, {"values": values}, lines


def _cmd_katz(args):
    g, interval = _load(args)
    vec = temporal_katz(g, KatzParams(beta=args.beta), interval)
    config = _base_config(args, interval)
    config.update(beta=args.beta)
    results, lines = _vector_payload(g, vec.scores)
    return config, results, lines


def _cmd_pagerank(args):
    g, interval = _load(args)
    vec = temporal_pagerank(g, PageRankParams(alpha=args.alpha, beta=args.beta), interval)
    config = _base_config(args, interval)
    config.update(alpha=args.alpha, beta=args.beta)
    results, lines = _vector_payload(g, vec.scores)
    return config, results, lines


def _cmd_burstiness(args):
    g, interval = _load(args)
    config = _base_config(args, interval)
    if args.pair is not None:
        u, v = (g.id_of(x) for x in args.pair)
        value = pair_burstiness(g, u, v, interval)
        config.update(pair=list(args.pair))
        line = f"burstiness {'undefined' if value is None else value}"
        return config, {"burstiness": value}, [line]
    results, lines = _vector_payload(g, burstiness_vector(g, interval))
    return config, results, lines


def _cmd_clustering(args):
    g, interval = _load(args)
    results, lines = _vector_payload(g, clustering_vector(g, interval))
    return _base_config(args, interval), results, lines


def _cmd_efficiency(args):
    g, interval = _load(args)
    dtype = DistanceType(args.distance)
    value = temporal_efficiency(
        g,
        dtype,
        interval,
        zero_distance_value=args.zero_distance_value,
        workers=args.threads,
    )
    config = _base_config(args, interval)
    config.update(distance=args.distance, zero_distance_value=args.zero_distance_value)
    line = f"efficiency {'undefined' if value is None else value}"
    return config, {"efficiency": value}, [line]


def _cmd_overlap(args):
    g, interval = _load(args)
    config = _base_config(args, interval)
    if args.global_:
        value = global_topological_overlap(g, interval)
        config.update(scope="global")
        return config, {"global_overlap": value}, [f"global_overlap {value}"]
    results, lines = _vector_payload(g, overlap_vector(g, interval))
    return config, results, lines


def _cmd_convert(args):
    g, interval = _load(args)
    g = restrict_to_interval(g, interval)
    g = normalize(
        g,
        remove_self_loops=args.drop_self_loops,
        deduplicate=args.dedup,
        shift_time_origin=args.shift_origin,
    )
    write_edge_list(g, args.output, include_transition=not args.no_transition_column)
    config = _base_config(args, interval)
    config.update(
        dedup=args.dedup,
        drop_self_loops=args.drop_self_loops,
        shift_origin=args.shift_origin,
    )
    return config, {"written": args.output, "m": g.m}, []


def _read_score_file(path: str) -> dict:
    scores: dict[str, float] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            name, score = line.split()
            if name in scores:
                raise ValueError(f"{path}: duplicate id {name!r}")
            scores[name] = float(score)
    return scores


def rank_correlation(path_a: str, path_b: str) -> float:
    """Kendall tau-b between two "id score" files over the same id set."""
    from scipy.stats import kendalltau

    a = _read_score_file(path_a)
    b = _read_score_file(path_b)
    if a.keys() != b.keys():
        raise ValueError("score files cover different id sets")
    keys = sorted(a)
    tau, _ = kendalltau([a[k] for k in keys], [b[k] for k in keys])
    return float(tau)


def _cmd_correlate(args):
    tau = rank_correlation(args.file_a, args.file_b)
    config = {"file_a": args.file_a, "file_b": args.file_b}
    return config, {"kendall_tau": tau}, [f"kendall_tau {tau}"]


_COMMANDS = {
    "stats": _cmd_stats,
    "distances": _cmd_distances,
    "diameter": _cmd_diameter,
    "closeness": _cmd_closeness,
    "topk": _cmd_topk,
    "betweenness": _cmd_betweenness,
    "katz": _cmd_katz,
    "pagerank": _cmd_pagerank,
    "burstiness": _cmd_burstiness,
    "clustering": _cmd_clustering,
    "efficiency": _cmd_efficiency,
    "overlap": _cmd_overlap,
    "convert": _cmd_convert,
    "correlate": _cmd_correlate,
}


def _add_io_arguments(sub, with_threads=False):
    sub.add_argument("input", help="edge list file: 'u v t [lam]' per line")
    sub.add_argument(
        "--undirected",
        action="store_true",
        help="expand every line into both directions",
    )
    sub.add_argument(
        "--interval",
        nargs=2,
        metavar=("A", "B"),
        help="keep edges inside [A, B] (B may be 'inf')",
    )
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--output", help="write results here instead of stdout")
    if with_threads:
        sub.add_argument("--threads", type=int, default=1)


def _add_distance_argument(sub, required=True):
    sub.add_argument("--distance", choices=_DISTANCE_CHOICES, required=required)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chronet", description="Temporal graph analysis"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("stats", help="summary statistics")
    _add_io_arguments(sub)

    sub = commands.add_parser("distances", help="single-source temporal distances")
    _add_io_arguments(sub)
    sub.add_argument("--source", required=True, help="source (target for latest-departure)")
    _add_distance_argument(sub)
    sub.add_argument(
        "--representation", choices=_REPRESENTATION_CHOICES, default="stream"
    )

    sub = commands.add_parser("diameter", help="largest finite temporal distance")
    _add_io_arguments(sub, with_threads=True)
    _add_distance_argument(sub)

    sub = commands.add_parser("closeness", help="harmonic temporal closeness")
    _add_io_arguments(sub, with_threads=True)
    _add_distance_argument(sub)
    sub.add_argument("--zero-distance-value", type=float, default=1.0)

    sub = commands.add_parser("topk", help="exact top-k temporal closeness")
    _add_io_arguments(sub)
    sub.add_argument("--k", type=int, required=True)
    _add_distance_argument(sub)
    sub.add_argument("--zero-distance-value", type=float, default=1.0)

    sub = commands.add_parser("betweenness", help="temporal edge betweenness")
    _add_io_arguments(sub)
    sub.add_argument(
        "--max-arcs",
        type=int,
        help="abort if the edge adjacency graph would exceed this many arcs",
    )

    sub = commands.add_parser("katz", help="temporal Katz centrality")
    _add_io_arguments(sub)
    sub.add_argument("--beta", type=float, default=0.5)

    sub = commands.add_parser("pagerank", help="temporal PageRank")
    _add_io_arguments(sub)
    sub.add_argument("--alpha", type=float, default=0.85)
    sub.add_argument("--beta", type=float, default=1.0)

    sub = commands.add_parser("burstiness", help="inter-contact burstiness")
    _add_io_arguments(sub)
    sub.add_argument(
        "--pair", nargs=2, metavar=("U", "V"), help="one vertex pair instead of all vertices"
    )

    sub = commands.add_parser("clustering", help="temporal clustering coefficient")
    _add_io_arguments(sub)

    sub = commands.add_parser("efficiency", help="temporal efficiency")
    _add_io_arguments(sub, with_threads=True)
    _add_distance_argument(sub)
    sub.add_argument("--zero-distance-value", type=float, default=1.0)

    sub = commands.add_parser("overlap", help="topological overlap")
    _add_io_arguments(sub)
    sub.add_argument(
        "--global", dest="global_", action="store_true", help="one network-wide value"
    )

    sub = commands.add_parser("convert", help="rewrite an edge list")
    sub.add_argument("input", help="edge list file")
    sub.add_argument("--undirected", action="store_true")
    sub.add_argument("--interval", nargs=2, metavar=("A", "B"))
    sub.add_argument("--output", required=True)
    sub.add_argument("--dedup", action="store_true", help="drop repeated edges")
    sub.add_argument("--drop-self-loops", action="store_true")
    sub.add_argument(
        "--shift-origin", action="store_true", help="shift times so the earliest is 0"
    )
    sub.add_argument(
        "--no-transition-column",
        action="store_true",
        help="write 'u v t' lines without the transition time",
    )
    sub.set_defaults(format="text")

    sub = commands.add_parser("correlate", help="Kendall tau-b of two score files")
    sub.add_argument("file_a")
    sub.add_argument("file_b")
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--output", help="write results here instead of stdout")

    return parser


def _emit(args, command: str, config: dict, results: dict, lines: list[str]) -> None:
    if args.format == "json":
        document = {"command": command, "config": config, "results": results}
        text = json.dumps(document, indent=2) + "\n"
    else:
        text = "".join(line + "\n" for line in lines)
    output = getattr(args, "output", None)
    if output and command != "convert":
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config, results, lines = _COMMANDS[args.command](args)
        _emit(args, args.command, config, results, lines)
    except (ValueError, KeyError, RuntimeError, OSError) as exc:
        # KeyError's str() wraps the message in quotes
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
