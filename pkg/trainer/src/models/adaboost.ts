/**
 * Discrete AdaBoost over decision stumps. Each round fits the stump with
 * the lowest weighted error (threshold plus polarity on one feature),
 * reweights the samples, and accumulates the stump votes. The probability
 * is a logistic squash of the normalized vote margin, so the 0.5 cutoff
 * coincides with the usual sign-of-margin prediction.
 */

import type { Matrix } from "../preprocess.js";
import type { Rng } from "../rng.js";
import type { FittedModel, ModelConfig, ModelFamily } from "./types.js";

const ROUNDS_GRID = [25, 50, 75, 100, 150] as const;
const LEARNING_RATE_GRID = [0.3, 0.5, 0.8, 1.0] as const;

interface Stump {
  feature: number;
  threshold: number;
  /** +1: predict class 1 when value >= threshold; -1: the opposite */
  polarity: number;
  alpha: number;
}

function stumpVote(stump: Stump, value: number): number {
  const raw = value >= stump.threshold ? 1 : -1;
  return raw * stump.polarity;
}

class AdaBoostModel implements FittedModel {
  constructor(
    private readonly stumps: Stump[],
    private readonly rounds: number,
    private readonly learningRate: number,
  ) {}

  predictProba(X: Matrix): Float64Array {
    const out = new Float64Array(X.rows);
    let alphaTotal = 0;
    for (const stump of this.stumps) alphaTotal += stump.alpha;
    for (let row = 0; row < X.rows; row++) {
      let margin = 0;
      for (const stump of this.stumps) {
        margin += stump.alpha * stumpVote(stump, X.data[row * X.cols + stump.feature]);
      }
      const normalized = alphaTotal > 0 ? margin / alphaTotal : 0;
      out[row] = 1 / (1 + Math.exp(-2 * normalized));
    }
    return out;
  }

  describe(): string {
    return `adaboost(rounds=${this.rounds},lr=${this.learningRate})`;
  }
}

/**
 * Weighted best stump across all features: one sorted sweep per feature,
 * O(d * n) after the presorting that fit() provides.
 */
function bestStump(
  X: Matrix,
  signs: Int8Array,
  weights: Float64Array,
  sorted: number[][],
): Omit<Stump, "alpha"> & { error: number } {
  let best = { feature: 0, threshold: -Infinity, polarity: 1, error: Infinity };
  let weightTotal = 0;
  let positiveTotal = 0; // weighted sum of +1 samples
  for (let i = 0; i < signs.length; i++) {
    weightTotal += weights[i];
    if (signs[i] > 0) positiveTotal += weights[i];
  }

  for (let feature = 0; feature < X.cols; feature++) {
    const order = sorted[feature];
    // threshold below every value: predict +1 for all (polarity +1)
    let positiveBelow = 0; // weighted +1 mass with value < threshold
    let weightBelow = 0;
    const consider = (threshold: number) => {
      // polarity +1 errors: +1 samples below threshold, -1 samples at/above
      const errorPlus = positiveBelow + (weightTotal - weightBelow - (positiveTotal - positiveBelow));
      const errorMinus = weightTotal - errorPlus;
      if (errorPlus < best.error) {
        best = { feature, threshold, polarity: 1, error: errorPlus };
      }
      if (errorMinus < best.error) {
        best = { feature, threshold, polarity: -1, error: errorMinus };
      }
    };
    consider(-Infinity);
    for (let position = 0; position < order.length; position++) {
      const sample = order[position];
      const value = X.data[sample * X.cols + feature];
      weightBelow += weights[sample];
      if (signs[sample] > 0) positiveBelow += weights[sample];
      const next =
        position + 1 < order.length
          ? X.data[order[position + 1] * X.cols + feature]
          : Infinity;
      if (next !== value) {
        consider(next === Infinity ? value + 1 : (value + next) / 2);
      }
    }
  }
  return best;
}

export const adaboostFamily: ModelFamily = {
  name: "adaboost",
  sampleConfig(rng: Rng): ModelConfig {
    return { rounds: rng.pick(ROUNDS_GRID), learningRate: rng.pick(LEARNING_RATE_GRID) };
  },
  fit(X: Matrix, y: number[], config: ModelConfig): FittedModel {
    const rounds = config.rounds as number;
    const learningRate = config.learningRate as number;
    const n = X.rows;
    const signs = new Int8Array(n);
    for (let i = 0; i < n; i++) signs[i] = y[i] === 1 ? 1 : -1;

    const sorted: number[][] = [];
    for (let feature = 0; feature < X.cols; feature++) {
      const order = Array.from({ length: n }, (_, i) => i);
      order.sort((a, b) => X.data[a * X.cols + feature] - X.data[b * X.cols + feature] || a - b);
      sorted.push(order);
    }

    const weights = new Float64Array(n).fill(1 / n);
    const stumps: Stump[] = [];
    for (let round = 0; round < rounds; round++) {
      const candidate = bestStump(X, signs, weights, sorted);
      const error = Math.max(candidate.error, 1e-12);
      if (error >= 0.5) break; // no better than chance; stop boosting
      const alpha = learningRate * 0.5 * Math.log((1 - error) / error);
      const stump: Stump = { ...candidate, alpha };
      stumps.push(stump);

      let total = 0;
      for (let i = 0; i < n; i++) {
        const vote = stumpVote(stump, X.data[i * X.cols + stump.feature]);
        weights[i] *= Math.exp(-alpha * vote * signs[i]);
        total += weights[i];
      }
      for (let i = 0; i < n; i++) weights[i] /= total;
    }
    return new AdaBoostModel(stumps, rounds, learningRate);
  },
};
