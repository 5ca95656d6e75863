#!/usr/bin/env python3
"""Time the single-source distance kernels on a synthetic temporal graph.

Generates a random graph, runs every distance type on every representation
from a sample of source vertices, and prints mean per-source runtimes. Meant
for eyeballing representation trade-offs, not for publication numbers.
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from chronet import (
    DistanceType,
    OrderedEdgeList,
    TemporalEdge,
    single_source_distances,
    to_incidence_lists,
    to_time_node_graph,
)

REPRESENTATIONS = ("stream", "ilists", "trs")


def synthetic_graph(rng: random.Random, n: int, m: int, horizon: int) -> OrderedEdgeList:
    edges = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n)
        while v == u:
            v = rng.randrange(n)
        edges.append(TemporalEdge(u, v, rng.randrange(horizon), rng.randint(1, 4)))
    edges.sort(key=lambda e: e.t)
    return OrderedEdgeList(n, tuple(edges))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--vertices", type=int, default=2000)
    parser.add_argument("--edges", type=int, default=50000)
    parser.add_argument("--horizon", type=int, default=10000)
    parser.add_argument("--sources", type=int, default=20,
                        help="number of sampled source vertices")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    graph = synthetic_graph(rng, args.vertices, args.edges, args.horizon)
    sources = [rng.randrange(args.vertices) for _ in range(args.sources)]

    built = {"stream": graph}
    started = time.perf_counter()
    built["ilists"] = to_incidence_lists(graph)
    ilists_build = time.perf_counter() - started
    started = time.perf_counter()
    built["trs"] = to_time_node_graph(graph)
    trs_build = time.perf_counter() - started
    print(f"graph: n={args.vertices} m={args.edges} horizon={args.horizon}")
    print(f"build: ilists {ilists_build * 1000:.1f}ms, "
          f"trs {trs_build * 1000:.1f}ms ({built['trs'].node_count} nodes)")
    print()

    header = f"{'distance type':<18}" + "".join(f"{r:>12}" for r in REPRESENTATIONS)
    print(header)
    for dtype in DistanceType:
        cells = []
        for rep in REPRESENTATIONS:
            target = built[rep]
            started = time.perf_counter()
            for s in sources:
                single_source_distances(target, s, dtype)
            mean_ms = (time.perf_counter() - started) / len(sources) * 1000
            cells.append(f"{mean_ms:>10.2f}ms")
        print(f"{dtype.value:<18}" + "".join(cells))
    return 0


if __name__ == "__main__":
    sys.exit(main())
