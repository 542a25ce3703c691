/**
 * Scores-CSV export in the fusion engine's contract: metadata comment
 * lines, then header `item_id,label,A,B,C,D,E`, then one row per test
 * instance with class-1 probabilities. Numbers are printed with
 * JavaScript's shortest round-trip formatting, so identical runs produce
 * identical bytes.
 */

export interface ExportInput {
  seed: number;
  itemIds: string[];
  labels: number[];
  /** column id -> (description, probabilities) in output column order */
  systems: { id: string; description: string; scores: Float64Array }[];
}

export function renderScoresCsv(input: ExportInput): string {
  const n = input.labels.length;
  for (const system of input.systems) {
    if (system.scores.length !== n) {
      throw new Error(
        `system ${system.id} has ${system.scores.length} scores for ${n} rows`,
      );
    }
    for (let i = 0; i < n; i++) {
      const value = system.scores[i];
      if (!Number.isFinite(value) || value < 0 || value > 1) {
        throw new Error(`system ${system.id}, row ${i}: invalid probability ${value}`);
      }
    }
  }

  const lines: string[] = [];
  lines.push(`# credit-approval-trainer seed=${input.seed}`);
  for (const system of input.systems) {
    lines.push(`# model ${system.id}: ${system.description}`);
  }
  lines.push(["item_id", "label", ...input.systems.map((s) => s.id)].join(","));
  for (let i = 0; i < n; i++) {
    const cells = [input.itemIds[i], String(input.labels[i])];
    for (const system of input.systems) cells.push(String(system.scores[i]));
    lines.push(cells.join(","));
  }
  return lines.join("\n") + "\n";
}
