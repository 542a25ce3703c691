import type { Matrix } from "../preprocess.js";
import type { Rng } from "../rng.js";

/** A fitted binary classifier exposing class-1 probabilities. */
export interface FittedModel {
  predictProba(X: Matrix): Float64Array;
  describe(): string;
}

export type ModelConfig = Record<string, number | string>;

/** One tunable model family: a config sampler plus a fit function. */
export interface ModelFamily {
  name: string;
  sampleConfig(rng: Rng): ModelConfig;
  fit(X: Matrix, y: number[], config: ModelConfig, seed: number): FittedModel;
}
