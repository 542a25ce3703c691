/**
 * End-to-end training pipeline: load the raw dataset, preprocess with a
 * stratified 80/20 split, tune and fit the five base models on the training
 * split, and export the test split's class-1 probabilities in the fusion
 * engine's scores-CSV contract (columns A..E = KNN, LDA, AdaBoost, random
 * forest, CNN).
 */

import { loadRawDataset, type RawDataset } from "./dataset.js";
import { renderScoresCsv } from "./exportScores.js";
import { adaboostFamily } from "./models/adaboost.js";
import { cnnFamily } from "./models/cnn.js";
import { forestFamily } from "./models/forest.js";
import { knnFamily } from "./models/knn.js";
import { ldaFamily } from "./models/lda.js";
import type { ModelFamily } from "./models/types.js";
import { preprocess } from "./preprocess.js";
import { Rng, derivedSeed } from "./rng.js";
import { accuracyAtHalf, randomSearch, type TuningResult } from "./tuning.js";

export interface PipelineOptions {
  seed: number;
  /** sampled configurations per classic model family */
  searchBudget: number;
  /** sampled configurations for the CNN (its fits dominate the runtime) */
  cnnBudget: number;
  folds: number;
}

export const DEFAULT_OPTIONS: PipelineOptions = {
  seed: 7,
  searchBudget: 25,
  cnnBudget: 8,
  folds: 5,
};

export interface ModelReport {
  column: string;
  family: string;
  config: Record<string, number | string>;
  cvAccuracy: number;
  testAccuracy: number;
  description: string;
}

export interface PipelineResult {
  csv: string;
  models: ModelReport[];
  testSize: number;
  testPositives: number;
}

const COLUMN_ORDER: { column: string; family: ModelFamily }[] = [
  { column: "A", family: knnFamily },
  { column: "B", family: ldaFamily },
  { column: "C", family: adaboostFamily },
  { column: "D", family: forestFamily },
  { column: "E", family: cnnFamily },
];

export function runPipelineOnData(
  raw: RawDataset,
  options: Partial<PipelineOptions> = {},
): PipelineResult {
  const opts = { ...DEFAULT_OPTIONS, ...options };
  const data = preprocess(raw, new Rng(derivedSeed(opts.seed, "split")));

  const models: ModelReport[] = [];
  const systems: { id: string; description: string; scores: Float64Array }[] = [];
  for (const { column, family } of COLUMN_ORDER) {
    const budget = family.name === "cnn" ? opts.cnnBudget : opts.searchBudget;
    const result: TuningResult = randomSearch(family, data.trainX, data.trainY, {
      configs: budget,
      folds: opts.folds,
      seed: opts.seed,
    });
    const scores = result.model.predictProba(data.testX);
    models.push({
      column,
      family: family.name,
      config: result.config,
      cvAccuracy: result.cvAccuracy,
      testAccuracy: accuracyAtHalf(scores, data.testY),
      description: result.model.describe(),
    });
    systems.push({ id: column, description: result.model.describe(), scores });
  }

  const csv = renderScoresCsv({
    seed: opts.seed,
    itemIds: data.split.test.map((row) => `row${row}`),
    labels: data.testY,
    systems,
  });
  return {
    csv,
    models,
    testSize: data.testY.length,
    testPositives: data.testY.reduce((total, label) => total + label, 0),
  };
}

export function runPipeline(
  datasetPath: string,
  options: Partial<PipelineOptions> = {},
): PipelineResult {
  return runPipelineOnData(loadRawDataset(datasetPath), options);
}
