/**
 * Linear discriminant analysis with shrinkage-regularized pooled covariance.
 * Under the shared-covariance Gaussian model the class-1 posterior is a
 * logistic function of a linear discriminant, which is what predictProba
 * returns.
 */

import type { Matrix } from "../preprocess.js";
import { matrixRow } from "../preprocess.js";
import type { Rng } from "../rng.js";
import type { FittedModel, ModelConfig, ModelFamily } from "./types.js";

const SHRINKAGE_GRID = [0, 1e-4, 1e-3, 1e-2, 0.05, 0.1, 0.2, 0.35, 0.5] as const;

/** Solve A x = b by Gaussian elimination with partial pivoting. */
function solve(A: number[][], b: number[]): number[] {
  const n = b.length;
  const M = A.map((row, i) => [...row, b[i]]);
  for (let col = 0; col < n; col++) {
    let pivot = col;
    for (let row = col + 1; row < n; row++) {
      if (Math.abs(M[row][col]) > Math.abs(M[pivot][col])) pivot = row;
    }
    if (Math.abs(M[pivot][col]) < 1e-12) {
      throw new Error("singular covariance matrix; increase shrinkage");
    }
    [M[col], M[pivot]] = [M[pivot], M[col]];
    for (let row = col + 1; row < n; row++) {
      const factor = M[row][col] / M[col][col];
      for (let k = col; k <= n; k++) M[row][k] -= factor * M[col][k];
    }
  }
  const x = new Array<number>(n).fill(0);
  for (let row = n - 1; row >= 0; row--) {
    let total = M[row][n];
    for (let k = row + 1; k < n; k++) total -= M[row][k] * x[k];
    x[row] = total / M[row][row];
  }
  return x;
}

function sigmoid(z: number): number {
  return z >= 0 ? 1 / (1 + Math.exp(-z)) : Math.exp(z) / (1 + Math.exp(z));
}

class LdaModel implements FittedModel {
  constructor(
    private readonly weights: number[],
    private readonly bias: number,
    private readonly shrinkage: number,
  ) {}

  predictProba(X: Matrix): Float64Array {
    const out = new Float64Array(X.rows);
    for (let row = 0; row < X.rows; row++) {
      const features = matrixRow(X, row);
      let z = this.bias;
      for (let i = 0; i < features.length; i++) z += this.weights[i] * features[i];
      out[row] = sigmoid(z);
    }
    return out;
  }

  describe(): string {
    return `lda(shrinkage=${this.shrinkage})`;
  }
}

export const ldaFamily: ModelFamily = {
  name: "lda",
  sampleConfig(rng: Rng): ModelConfig {
    return { shrinkage: rng.pick(SHRINKAGE_GRID) };
  },
  fit(X: Matrix, y: number[], config: ModelConfig): FittedModel {
    const gamma = config.shrinkage as number;
    const d = X.cols;
    const counts = [0, 0];
    const means = [new Float64Array(d), new Float64Array(d)];
    for (let row = 0; row < X.rows; row++) {
      const cls = y[row];
      counts[cls]++;
      const features = matrixRow(X, row);
      for (let i = 0; i < d; i++) means[cls][i] += features[i];
    }
    if (counts[0] === 0 || counts[1] === 0) {
      throw new Error("lda needs both classes present in the training data");
    }
    for (const cls of [0, 1]) {
      for (let i = 0; i < d; i++) means[cls][i] /= counts[cls];
    }

    // pooled within-class covariance
    const cov: number[][] = Array.from({ length: d }, () => new Array<number>(d).fill(0));
    for (let row = 0; row < X.rows; row++) {
      const features = matrixRow(X, row);
      const mean = means[y[row]];
      for (let i = 0; i < d; i++) {
        const di = features[i] - mean[i];
        for (let j = i; j < d; j++) {
          cov[i][j] += di * (features[j] - mean[j]);
        }
      }
    }
    const denominator = X.rows - 2;
    let trace = 0;
    for (let i = 0; i < d; i++) {
      for (let j = i; j < d; j++) {
        cov[i][j] /= denominator;
        cov[j][i] = cov[i][j];
      }
      trace += cov[i][i];
    }
    const ridge = gamma * (trace / d) + 1e-9;
    for (let i = 0; i < d; i++) {
      for (let j = 0; j < d; j++) cov[i][j] *= 1 - gamma;
      cov[i][i] += ridge;
    }

    const meanDelta = Array.from({ length: d }, (_, i) => means[1][i] - means[0][i]);
    const weights = solve(cov, meanDelta);
    let bias = Math.log(counts[1] / counts[0]);
    for (let i = 0; i < d; i++) {
      bias -= 0.5 * weights[i] * (means[1][i] + means[0][i]);
    }
    return new LdaModel(weights, bias, gamma);
  },
};
