/**
 * k-nearest neighbours with uniform or inverse-distance vote weighting.
 * Probability of class 1 is the (weighted) fraction of positive neighbours.
 */

import type { Matrix } from "../preprocess.js";
import { matrixRow } from "../preprocess.js";
import type { Rng } from "../rng.js";
import type { FittedModel, ModelConfig, ModelFamily } from "./types.js";

const K_GRID = [3, 5, 7, 9, 11, 13, 15, 19, 23, 27, 31] as const;
const WEIGHTING = ["uniform", "distance"] as const;

function squaredDistance(a: Float64Array, b: Float64Array): number {
  let total = 0;
  for (let i = 0; i < a.length; i++) {
    const delta = a[i] - b[i];
    total += delta * delta;
  }
  return total;
}

class KnnModel implements FittedModel {
  constructor(
    private readonly trainX: Matrix,
    private readonly trainY: number[],
    private readonly k: number,
    private readonly weighting: string,
  ) {}

  predictProba(X: Matrix): Float64Array {
    const out = new Float64Array(X.rows);
    const distances = new Float64Array(this.trainX.rows);
    const order = new Array<number>(this.trainX.rows);
    for (let row = 0; row < X.rows; row++) {
      const query = matrixRow(X, row);
      for (let i = 0; i < this.trainX.rows; i++) {
        distances[i] = squaredDistance(query, matrixRow(this.trainX, i));
        order[i] = i;
      }
      order.sort((a, b) => distances[a] - distances[b] || a - b);
      let positive = 0;
      let total = 0;
      for (let j = 0; j < this.k && j < order.length; j++) {
        const neighbour = order[j];
        const weight =
          this.weighting === "distance" ? 1 / (Math.sqrt(distances[neighbour]) + 1e-9) : 1;
        total += weight;
        if (this.trainY[neighbour] === 1) positive += weight;
      }
      out[row] = positive / total;
    }
    return out;
  }

  describe(): string {
    return `knn(k=${this.k},weights=${this.weighting})`;
  }
}

export const knnFamily: ModelFamily = {
  name: "knn",
  sampleConfig(rng: Rng): ModelConfig {
    return { k: rng.pick(K_GRID), weighting: rng.pick(WEIGHTING) };
  },
  fit(X: Matrix, y: number[], config: ModelConfig): FittedModel {
    return new KnnModel(X, y, config.k as number, config.weighting as string);
  },
};
