import { spawnSync } from "node:child_process";
import { existsSync, mkdtempSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { run } from "../src/compare-rankings.js";

const EXAMPLE = "a d 1 5\na b 2 1\na b 5 2\nc b 6 1\nd c 6 2\nb d 7 2\nd c 8 4\n";

let workDir: string;
let examplePath: string;
let outDir: string;

function cliBytes(...args: string[]): Buffer {
  const result = spawnSync("chronet", [...args, "--format", "json"]);
  expect(result.status).toBe(0);
  return result.stdout;
}

beforeAll(() => {
  workDir = mkdtempSync(join(tmpdir(), "chronet-workflow-"));
  examplePath = join(workDir, "example.tg");
  outDir = join(workDir, "out");
  writeFileSync(examplePath, EXAMPLE);
});

afterAll(() => {
  rmSync(workDir, { recursive: true, force: true });
});

describe("ranking comparison workflow", () => {
  it("runs end-to-end on the worked example", () => {
    const result = run(examplePath, outDir);
    expect(result.statistics.n).toBe(4);
    expect(result.statistics.m).toBe(7);
    expect(result.fastest).toEqual([
      1.3928571428571428, 0.5, 0.5, 1.3333333333333333,
    ]);
    expect(result.earliestArrival).toEqual([
      0.625, 0.125, 0.1111111111111111, 0.25396825396825395,
    ]);
    expect(result.tau).toBe(0.912870929175277);
  });

  it("captures documents byte-identical to the CLI at every step", () => {
    const result = run(examplePath, outDir);
    expect(result.documents.stats.equals(cliBytes("stats", examplePath))).toBe(true);
    expect(
      result.documents.closenessFastest.equals(
        cliBytes("closeness", examplePath, "--distance", "fastest"),
      ),
    ).toBe(true);
    expect(
      result.documents.closenessEarliestArrival.equals(
        cliBytes("closeness", examplePath, "--distance", "earliest-arrival"),
      ),
    ).toBe(true);
    expect(
      result.documents.correlate.equals(
        cliBytes(
          "correlate",
          join(outDir, "closeness_fastest.scores"),
          join(outDir, "closeness_earliest-arrival.scores"),
        ),
      ),
    ).toBe(true);
  });

  const builtScript = join(
    dirname(fileURLToPath(import.meta.url)),
    "..",
    "dist",
    "compare-rankings.js",
  );

  it.skipIf(!existsSync(builtScript))("runs as a compiled script", () => {
    const result = spawnSync("node", [builtScript, examplePath, join(workDir, "script-out")], {
      encoding: "utf8",
    });
    expect(result.status).toBe(0);
    expect(result.stdout).toContain("vertices            4");
    expect(result.stdout).toContain("kendall tau-b (fastest vs earliest-arrival) = 0.9129");
  });
});
