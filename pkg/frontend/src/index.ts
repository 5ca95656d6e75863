/**
 * Bindings to the chronet temporal graph engine.
 *
 * Every operation shells out to the engine CLI with `--format json`,
 * captures the emitted document, and returns the parsed results. Scores
 * come back indexed by the engine's dense vertex ids; `labels` exposes the
 * id -> label map the engine assigned on load. The raw bytes of the most
 * recent document are kept for cross-boundary golden tests.
 */

import { spawnSync } from "node:child_process";

/** Mirrors the engine package version. */
export const VERSION = "0.1.0";

/** Path-optimality criteria understood by the engine. */
export enum DistanceType {
  EarliestArrival = "earliest-arrival",
  LatestDeparture = "latest-departure",
  Fastest = "fastest",
  MinTransitionSum = "min-transition",
  MinHops = "min-hops",
}

/** Closed time window [a, b]; "inf" leaves the end unbounded. */
export type Interval = [number, number | "inf"];

export interface LoadOptions {
  /** Expand every line into both directions when false. Default true. */
  directed?: boolean;
}

export interface RunOptions {
  interval?: Interval;
  threads?: number;
}

export interface ClosenessOptions extends RunOptions {
  zeroDistanceValue?: number;
}

/**
 * Handle to an engine-side ordered edge list. Operations taking a handle
 * throw once it has been released.
 */
export interface GraphHandle {
  readonly path: string;
  readonly directed: boolean;
  released: boolean;
  /** Dense id -> label, filled by the load. */
  labelMap: string[];
}

export interface GraphStatistics {
  n: number;
  m: number;
  distinct_timestamps: number;
  aggregated_edge_count: number;
  in_degree_min: number;
  in_degree_max: number;
  out_degree_min: number;
  out_degree_max: number;
  min_time: number;
  max_arrival_time: number;
}

export interface RankedVertex {
  rank: number;
  id: number;
  score: number;
}

/** Engine failure: carries the exit code and the CLI's stderr diagnostic. */
export class EngineError extends Error {
  readonly exitCode: number | null;
  readonly diagnostic: string;

  constructor(command: string, exitCode: number | null, diagnostic: string) {
    const suffix = exitCode === null ? "" : ` (exit ${exitCode})`;
    super(`chronet ${command} failed${suffix}: ${diagnostic}`);
    this.name = "EngineError";
    this.exitCode = exitCode;
    this.diagnostic = diagnostic;
  }
}

function engineExecutable(): string {
  return process.env.CHRONET_CLI ?? "chronet";
}

let lastRaw: Buffer | null = null;

/**
 * Raw bytes of the most recent engine document, exactly as the CLI wrote
 * them. Golden tests compare these against a direct CLI invocation.
 */
export function lastDocument(): Buffer | null {
  return lastRaw;
}

function invoke(command: string, args: string[]): any {
  const exe = engineExecutable();
  const result = spawnSync(exe, [command, ...args, "--format", "json"], {
    maxBuffer: 256 * 1024 * 1024,
  });
  if (result.error) {
    throw new EngineError(command, null, `cannot run '${exe}': ${result.error.message}`);
  }
  if (result.status !== 0) {
    const diagnostic = result.stderr.toString("utf8").trim() || "no diagnostic";
    throw new EngineError(command, result.status, diagnostic);
  }
  lastRaw = result.stdout;
  return JSON.parse(result.stdout.toString("utf8"));
}

function live(handle: GraphHandle): void {
  if (handle.released) {
    throw new Error(`graph handle for '${handle.path}' used after release`);
  }
}

function requireDistance(value: DistanceType): string {
  if (!Object.values(DistanceType).includes(value)) {
    throw new RangeError(`unknown distance type '${value}'`);
  }
  return value;
}

function graphArgs(handle: GraphHandle, options: RunOptions = {}): string[] {
  const args = [handle.path];
  if (!handle.directed) {
    args.push("--undirected");
  }
  if (options.interval) {
    args.push("--interval", String(options.interval[0]), String(options.interval[1]));
  }
  if (options.threads !== undefined) {
    args.push("--threads", String(options.threads));
  }
  return args;
}

/** null stays null (unreachable/undefined); the string "inf" becomes Infinity. */
function fromJsonValue(value: unknown): number | null {
  if (value === null) {
    return null;
  }
  if (value === "inf") {
    return Infinity;
  }
  return value as number;
}

function vectorScores(doc: any): Array<number | null> {
  return doc.results.values.map((pair: [string, unknown]) => fromJsonValue(pair[1]));
}

/**
 * Loads an edge list through the engine and returns a handle. The load runs
 * one cheap full-vector pass, which both validates the file and yields the
 * dense id -> label map.
 */
export function loadOrderedEdgeList(path: string, options: LoadOptions = {}): GraphHandle {
  const handle: GraphHandle = {
    path,
    directed: options.directed ?? true,
    released: false,
    labelMap: [],
  };
  const doc = invoke("pagerank", graphArgs(handle));
  handle.labelMap = doc.results.values.map((pair: [string, unknown]) => pair[0]);
  return handle;
}

/** Marks the handle released; further operations on it throw. Idempotent. */
export function release(handle: GraphHandle): void {
  handle.released = true;
  handle.labelMap = [];
}

/** Dense id -> label map of the loaded graph. */
export function labels(handle: GraphHandle): string[] {
  live(handle);
  return [...handle.labelMap];
}

export function labelOf(handle: GraphHandle, id: number): string {
  live(handle);
  if (id < 0 || id >= handle.labelMap.length) {
    throw new RangeError(`vertex id ${id} out of range`);
  }
  return handle.labelMap[id];
}

export function getStatistics(handle: GraphHandle, options: RunOptions = {}): GraphStatistics {
  live(handle);
  const doc = invoke("stats", graphArgs(handle, { interval: options.interval }));
  return doc.results as GraphStatistics;
}

/** Harmonic temporal closeness, indexed by dense vertex id. */
export function temporalCloseness(
  handle: GraphHandle,
  distanceType: DistanceType,
  options: ClosenessOptions = {},
): number[] {
  live(handle);
  const args = graphArgs(handle, options);
  args.push("--distance", requireDistance(distanceType));
  if (options.zeroDistanceValue !== undefined) {
    args.push("--zero-distance-value", String(options.zeroDistanceValue));
  }
  const doc = invoke("closeness", args);
  return vectorScores(doc) as number[];
}

/** Exact top-k closeness; ties broken toward the smaller vertex id. */
export function topkCloseness(
  handle: GraphHandle,
  k: number,
  distanceType: DistanceType,
  options: ClosenessOptions = {},
): RankedVertex[] {
  live(handle);
  const args = graphArgs(handle, { interval: options.interval });
  args.push("--k", String(k), "--distance", requireDistance(distanceType));
  if (options.zeroDistanceValue !== undefined) {
    args.push("--zero-distance-value", String(options.zeroDistanceValue));
  }
  const doc = invoke("topk", args);
  return doc.results.values.map(([rank, label, score]: [number, string, number]) => ({
    rank,
    id: handle.labelMap.indexOf(label),
    score,
  }));
}

/** Largest finite pairwise distance, or null when no pair is connected. */
export function temporalDiameter(
  handle: GraphHandle,
  distanceType: DistanceType,
  options: RunOptions = {},
): number | null {
  live(handle);
  const args = graphArgs(handle, options);
  args.push("--distance", requireDistance(distanceType));
  const doc = invoke("diameter", args);
  return fromJsonValue(doc.results.diameter);
}

/** Per-vertex inter-contact burstiness; null where under two contacts. */
export function burstinessVector(
  handle: GraphHandle,
  options: RunOptions = {},
): Array<number | null> {
  live(handle);
  const doc = invoke("burstiness", graphArgs(handle, { interval: options.interval }));
  return vectorScores(doc);
}

export function pairBurstiness(
  handle: GraphHandle,
  u: number,
  v: number,
  options: RunOptions = {},
): number | null {
  live(handle);
  const args = graphArgs(handle, { interval: options.interval });
  args.push("--pair", labelOf(handle, u), labelOf(handle, v));
  const doc = invoke("burstiness", args);
  return fromJsonValue(doc.results.burstiness);
}

export function clusteringVector(handle: GraphHandle, options: RunOptions = {}): number[] {
  live(handle);
  const doc = invoke("clustering", graphArgs(handle, { interval: options.interval }));
  return vectorScores(doc) as number[];
}

/** Mean closeness over ordered pairs, or null for under two vertices. */
export function temporalEfficiency(
  handle: GraphHandle,
  distanceType: DistanceType,
  options: ClosenessOptions = {},
): number | null {
  live(handle);
  const args = graphArgs(handle, options);
  args.push("--distance", requireDistance(distanceType));
  if (options.zeroDistanceValue !== undefined) {
    args.push("--zero-distance-value", String(options.zeroDistanceValue));
  }
  const doc = invoke("efficiency", args);
  return fromJsonValue(doc.results.efficiency);
}

export function overlapVector(handle: GraphHandle, options: RunOptions = {}): number[] {
  live(handle);
  const doc = invoke("overlap", graphArgs(handle, { interval: options.interval }));
  return vectorScores(doc) as number[];
}

export function globalOverlap(handle: GraphHandle, options: RunOptions = {}): number {
  live(handle);
  const args = graphArgs(handle, { interval: options.interval });
  args.push("--global");
  const doc = invoke("overlap", args);
  return doc.results.global_overlap as number;
}

/** Kendall tau-b between two score files (lines of "id score"). */
export function rankCorrelation(fileA: string, fileB: string): number {
  const doc = invoke("correlate", [fileA, fileB]);
  return doc.results.kendall_tau as number;
}
