/**
 * Randomized hyperparameter search with stratified k-fold cross-validation.
 * Configurations are sampled from each model family's grid with a seeded
 * generator; the score is mean validation accuracy at the 0.5 cutoff, and
 * the best configuration is refit on the full training set.
 */

import type { Matrix } from "./preprocess.js";
import { takeRows } from "./preprocess.js";
import { Rng, derivedSeed } from "./rng.js";
import type { FittedModel, ModelConfig, ModelFamily } from "./models/types.js";

export interface TuningResult {
  family: string;
  config: ModelConfig;
  cvAccuracy: number;
  model: FittedModel;
}

export function accuracyAtHalf(probabilities: Float64Array, labels: number[]): number {
  let correct = 0;
  for (let i = 0; i < labels.length; i++) {
    const predicted = probabilities[i] >= 0.5 ? 1 : 0;
    if (predicted === labels[i]) correct++;
  }
  return correct / labels.length;
}

export function stratifiedFolds(labels: number[], folds: number, rng: Rng): number[][] {
  const byClass: Record<number, number[]> = { 0: [], 1: [] };
  labels.forEach((label, index) => byClass[label].push(index));
  const assignment: number[][] = Array.from({ length: folds }, () => []);
  for (const cls of [0, 1]) {
    const indices = rng.shuffle([...byClass[cls]]);
    indices.forEach((index, position) => assignment[position % folds].push(index));
  }
  return assignment.map((fold) => fold.sort((a, b) => a - b));
}

export function randomSearch(
  family: ModelFamily,
  X: Matrix,
  y: number[],
  options: { configs: number; folds: number; seed: number },
): TuningResult {
  const configRng = new Rng(derivedSeed(options.seed, `${family.name}:configs`));
  const foldRng = new Rng(derivedSeed(options.seed, `${family.name}:folds`));
  const folds = stratifiedFolds(y, options.folds, foldRng);

  let best: { config: ModelConfig; accuracy: number } | null = null;
  for (let trial = 0; trial < options.configs; trial++) {
    const config = family.sampleConfig(configRng);
    let total = 0;
    for (let fold = 0; fold < folds.length; fold++) {
      const validationRows = folds[fold];
      const validationSet = new Set(validationRows);
      const trainRows: number[] = [];
      for (let i = 0; i < y.length; i++) {
        if (!validationSet.has(i)) trainRows.push(i);
      }
      const model = fitOrExplain(
        family,
        takeRows(X, trainRows),
        trainRows.map((row) => y[row]),
        config,
        derivedSeed(options.seed, `${family.name}:${trial}:${fold}`),
      );
      const probabilities = model.predictProba(takeRows(X, validationRows));
      total += accuracyAtHalf(
        probabilities,
        validationRows.map((row) => y[row]),
      );
    }
    const accuracy = total / folds.length;
    if (best === null || accuracy > best.accuracy) {
      best = { config, accuracy };
    }
  }

  if (best === null) throw new Error(`no configurations sampled for ${family.name}`);
  const model = fitOrExplain(
    family,
    X,
    y,
    best.config,
    derivedSeed(options.seed, `${family.name}:final`),
  );
  return { family: family.name, config: best.config, cvAccuracy: best.accuracy, model };
}

/** Fit, and on failure abort with the model family named. */
function fitOrExplain(
  family: ModelFamily,
  X: Matrix,
  y: number[],
  config: ModelConfig,
  seed: number,
): FittedModel {
  try {
    return family.fit(X, y, config, seed);
  } catch (error) {
    const message = error instanceof Error ? error.message : String(error);
    throw new Error(`training ${family.name} failed: ${message}`);
  }
}
