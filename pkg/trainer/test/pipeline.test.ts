import { execFileSync, spawnSync } from "node:child_process";
import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { runPipelineOnData } from "../src/pipeline.js";
import { makeSyntheticDataset } from "../src/synthetic.js";

// small search budgets: these tests exercise the pipeline mechanics and the
// export contract, not model quality at full budget
const FAST = { seed: 7, searchBudget: 3, cnnBudget: 1, folds: 3 };

function fusionEngineAvailable(): boolean {
  const probe = spawnSync("python3", ["-c", "import rankfusion"], { encoding: "utf-8" });
  return probe.status === 0;
}

describe("pipeline on synthetic data", { timeout: 240_000 }, () => {
  const result = runPipelineOnData(makeSyntheticDataset(7), FAST);

  it("exports 138 rows with five score columns", () => {
    const lines = result.csv.trimEnd().split("\n");
    const comments = lines.filter((line) => line.startsWith("#"));
    const body = lines.filter((line) => !line.startsWith("#"));
    expect(comments.length).toBeGreaterThanOrEqual(2);
    expect(comments.some((line) => line.includes("model E: cnn("))).toBe(true);
    expect(body[0]).toBe("item_id,label,A,B,C,D,E");
    expect(body.length).toBe(1 + 138);
    expect(result.testSize).toBe(138);
  });

  it("emits valid probabilities everywhere", () => {
    const body = result.csv
      .trimEnd()
      .split("\n")
      .filter((line) => !line.startsWith("#"))
      .slice(1);
    for (const line of body) {
      const cells = line.split(",");
      expect(cells.length).toBe(7);
      expect(["0", "1"]).toContain(cells[1]);
      for (const cell of cells.slice(2)) {
        const value = Number(cell);
        expect(Number.isFinite(value)).toBe(true);
        expect(value).toBeGreaterThanOrEqual(0);
        expect(value).toBeLessThanOrEqual(1);
      }
    }
  });

  it("reruns byte-for-byte with the same seed", () => {
    const again = runPipelineOnData(makeSyntheticDataset(7), FAST);
    expect(again.csv).toBe(result.csv);
  });

  it("changes with the seed", () => {
    const other = runPipelineOnData(makeSyntheticDataset(7), { ...FAST, seed: 8 });
    expect(other.csv).not.toBe(result.csv);
  });

  it.skipIf(!fusionEngineAvailable())(
    "loads through the fusion engine with zero warnings and n = 138",
    () => {
      const dir = mkdtempSync(join(tmpdir(), "trainer-"));
      const scoresPath = join(dir, "scores.csv");
      writeFileSync(scoresPath, result.csv, "utf-8");

      const run = spawnSync(
        "python3",
        ["-m", "rankfusion.cli", "fuse", scoresPath, "--format", "json"],
        { encoding: "utf-8", maxBuffer: 64 * 1024 * 1024 },
      );
      expect(run.status).toBe(0);
      expect(run.stderr).not.toContain("warning:");
      const rows = JSON.parse(run.stdout) as { case: string; accuracy: number }[];
      expect(rows.length).toBe(109);

      const rsc = execFileSync("python3", ["-m", "rankfusion.cli", "rsc", scoresPath], {
        encoding: "utf-8",
      });
      expect(rsc.split("\n")[0]).toBe("system,rank_position,normalized_score");
    },
  );
});
