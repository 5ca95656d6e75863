/**
 * End-to-end workflow against the engine: load an edge list, print its
 * statistics, rank vertices by temporal closeness under two distance types,
 * and report Kendall's tau-b between the rankings.
 *
 * Usage: node dist/compare-rankings.js <edge-list> [out-dir]
 */

import { mkdirSync, writeFileSync } from "node:fs";
import { join } from "node:path";
import { pathToFileURL } from "node:url";

import {
  DistanceType,
  GraphStatistics,
  getStatistics,
  lastDocument,
  loadOrderedEdgeList,
  rankCorrelation,
  release,
  temporalCloseness,
} from "./index.js";

export interface WorkflowResult {
  statistics: GraphStatistics;
  fastest: number[];
  earliestArrival: number[];
  tau: number;
  /** Raw engine documents captured at each step, keyed by step name. */
  documents: Record<string, Buffer>;
}

function writeScores(path: string, scores: number[]): void {
  const lines = scores.map((score, id) => `${id} ${score}`);
  writeFileSync(path, lines.join("\n") + "\n");
}

export function run(input: string, outDir: string): WorkflowResult {
  mkdirSync(outDir, { recursive: true });
  const documents: Record<string, Buffer> = {};
  const graph = loadOrderedEdgeList(input);
  try {
    const statistics = getStatistics(graph);
    documents.stats = lastDocument()!;

    const fastest = temporalCloseness(graph, DistanceType.Fastest);
    documents.closenessFastest = lastDocument()!;
    const earliestArrival = temporalCloseness(graph, DistanceType.EarliestArrival);
    documents.closenessEarliestArrival = lastDocument()!;

    const fileA = join(outDir, "closeness_fastest.scores");
    const fileB = join(outDir, "closeness_earliest-arrival.scores");
    writeScores(fileA, fastest);
    writeScores(fileB, earliestArrival);
    const tau = rankCorrelation(fileA, fileB);
    documents.correlate = lastDocument()!;

    return { statistics, fastest, earliestArrival, tau, documents };
  } finally {
    release(graph);
  }
}

function main(argv: string[]): number {
  if (argv.length < 1 || argv.length > 2) {
    console.error("usage: compare-rankings <edge-list> [out-dir]");
    return 2;
  }
  const [input, outDir = "."] = argv;
  const result = run(input, outDir);
  const stats = result.statistics;
  console.log(`vertices            ${stats.n}`);
  console.log(`edges               ${stats.m}`);
  console.log(`distinct timestamps ${stats.distinct_timestamps}`);
  console.log(`aggregated edges    ${stats.aggregated_edge_count}`);
  console.log(`time range          [${stats.min_time}, ${stats.max_arrival_time}]`);
  console.log(`kendall tau-b (fastest vs earliest-arrival) = ${result.tau.toFixed(4)}`);
  return 0;
}

if (process.argv[1] && import.meta.url === pathToFileURL(process.argv[1]).href) {
  process.exit(main(process.argv.slice(2)));
}
