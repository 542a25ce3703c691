/**
 * Small 1-D convolutional network for tabular rows treated as sequences:
 * conv(+relu) -> maxpool(2) -> conv(+relu) -> global average pool ->
 * dense -> sigmoid, trained with Adam on binary cross-entropy.
 *
 * Written directly on typed arrays with hand-derived gradients; a fit on a
 * few hundred rows takes seconds, and every source of randomness (weight
 * init, epoch shuffling) comes from the seeded generator, so runs are
 * reproducible. Gradients are verified against finite differences in the
 * test suite.
 */

import type { Matrix } from "../preprocess.js";
import { matrixRow } from "../preprocess.js";
import { Rng } from "../rng.js";
import type { FittedModel, ModelConfig, ModelFamily } from "./types.js";

const FILTERS1_GRID = [8, 16] as const;
const FILTERS2_GRID = [16, 32] as const;
const KERNEL_GRID = [3, 5] as const;
const LEARNING_RATE_GRID = [0.003, 0.01] as const;
const EPOCHS_GRID = [15, 25, 40] as const;
const BATCH_SIZE = 32;

interface CnnParams {
  w1: Float64Array; // [f1][k]
  b1: Float64Array; // [f1]
  w2: Float64Array; // [f2][f1][k]
  b2: Float64Array; // [f2]
  wd: Float64Array; // [f2]
  bd: Float64Array; // [1]
}

interface CnnShape {
  d: number;
  k: number;
  f1: number;
  f2: number;
  pooled: number; // floor(d / 2)
}

function glorot(rng: Rng, fanIn: number, fanOut: number, size: number): Float64Array {
  const limit = Math.sqrt(6 / (fanIn + fanOut));
  const out = new Float64Array(size);
  for (let i = 0; i < size; i++) out[i] = (rng.next() * 2 - 1) * limit;
  return out;
}

function initParams(shape: CnnShape, rng: Rng): CnnParams {
  const { k, f1, f2 } = shape;
  return {
    w1: glorot(rng, k, f1 * k, f1 * k),
    b1: new Float64Array(f1),
    w2: glorot(rng, f1 * k, f2 * k, f2 * f1 * k),
    b2: new Float64Array(f2),
    wd: glorot(rng, f2, 1, f2),
    bd: new Float64Array(1),
  };
}

function zerosLike(params: CnnParams): CnnParams {
  return {
    w1: new Float64Array(params.w1.length),
    b1: new Float64Array(params.b1.length),
    w2: new Float64Array(params.w2.length),
    b2: new Float64Array(params.b2.length),
    wd: new Float64Array(params.wd.length),
    bd: new Float64Array(params.bd.length),
  };
}

interface Workspace {
  z1: Float64Array; // [d][f1]
  a1: Float64Array;
  pooled: Float64Array; // [pooled][f1]
  argmax: Int32Array;
  z2: Float64Array; // [pooled][f2]
  a2: Float64Array;
  gap: Float64Array; // [f2]
  dPooled: Float64Array;
  dz2: Float64Array;
}

function makeWorkspace(shape: CnnShape): Workspace {
  const { d, f1, f2, pooled } = shape;
  return {
    z1: new Float64Array(d * f1),
    a1: new Float64Array(d * f1),
    pooled: new Float64Array(pooled * f1),
    argmax: new Int32Array(pooled * f1),
    z2: new Float64Array(pooled * f2),
    a2: new Float64Array(pooled * f2),
    gap: new Float64Array(f2),
    dPooled: new Float64Array(pooled * f1),
    dz2: new Float64Array(pooled * f2),
  };
}

/** Forward pass for one sample; fills the workspace and returns sigmoid(z). */
export function cnnForward(
  x: Float64Array,
  params: CnnParams,
  shape: CnnShape,
  ws: Workspace,
): number {
  const { d, k, f1, f2, pooled } = shape;
  const pad = Math.floor(k / 2);

  for (let p = 0; p < d; p++) {
    for (let a = 0; a < f1; a++) {
      let z = params.b1[a];
      for (let u = 0; u < k; u++) {
        const source = p + u - pad;
        if (source >= 0 && source < d) z += params.w1[a * k + u] * x[source];
      }
      ws.z1[p * f1 + a] = z;
      ws.a1[p * f1 + a] = z > 0 ? z : 0;
    }
  }

  for (let q = 0; q < pooled; q++) {
    for (let a = 0; a < f1; a++) {
      const first = ws.a1[2 * q * f1 + a];
      const second = ws.a1[(2 * q + 1) * f1 + a];
      if (first >= second) {
        ws.pooled[q * f1 + a] = first;
        ws.argmax[q * f1 + a] = 2 * q;
      } else {
        ws.pooled[q * f1 + a] = second;
        ws.argmax[q * f1 + a] = 2 * q + 1;
      }
    }
  }

  for (let q = 0; q < pooled; q++) {
    for (let c = 0; c < f2; c++) {
      let z = params.b2[c];
      for (let u = 0; u < k; u++) {
        const source = q + u - pad;
        if (source < 0 || source >= pooled) continue;
        const base = source * f1;
        const wBase = c * f1 * k;
        for (let a = 0; a < f1; a++) {
          z += params.w2[wBase + a * k + u] * ws.pooled[base + a];
        }
      }
      ws.z2[q * f2 + c] = z;
      ws.a2[q * f2 + c] = z > 0 ? z : 0;
    }
  }

  for (let c = 0; c < f2; c++) {
    let total = 0;
    for (let q = 0; q < pooled; q++) total += ws.a2[q * f2 + c];
    ws.gap[c] = total / pooled;
  }

  let z = params.bd[0];
  for (let c = 0; c < f2; c++) z += params.wd[c] * ws.gap[c];
  return z >= 0 ? 1 / (1 + Math.exp(-z)) : Math.exp(z) / (1 + Math.exp(z));
}

/** Backward pass for one sample; accumulates parameter gradients in `grads`. */
export function cnnBackward(
  x: Float64Array,
  label: number,
  probability: number,
  params: CnnParams,
  shape: CnnShape,
  ws: Workspace,
  grads: CnnParams,
): void {
  const { d, k, f1, f2, pooled } = shape;
  const pad = Math.floor(k / 2);
  const dz = probability - label; // sigmoid + binary cross-entropy

  grads.bd[0] += dz;
  for (let c = 0; c < f2; c++) grads.wd[c] += dz * ws.gap[c];

  ws.dz2.fill(0);
  for (let q = 0; q < pooled; q++) {
    for (let c = 0; c < f2; c++) {
      if (ws.z2[q * f2 + c] > 0) {
        ws.dz2[q * f2 + c] = (dz * params.wd[c]) / pooled;
      }
    }
  }

  ws.dPooled.fill(0);
  for (let q = 0; q < pooled; q++) {
    for (let c = 0; c < f2; c++) {
      const g = ws.dz2[q * f2 + c];
      if (g === 0) continue;
      grads.b2[c] += g;
      const wBase = c * f1 * k;
      for (let u = 0; u < k; u++) {
        const source = q + u - pad;
        if (source < 0 || source >= pooled) continue;
        const base = source * f1;
        for (let a = 0; a < f1; a++) {
          grads.w2[wBase + a * k + u] += g * ws.pooled[base + a];
          ws.dPooled[base + a] += g * params.w2[wBase + a * k + u];
        }
      }
    }
  }

  for (let q = 0; q < pooled; q++) {
    for (let a = 0; a < f1; a++) {
      const g = ws.dPooled[q * f1 + a];
      if (g === 0) continue;
      const source = ws.argmax[q * f1 + a];
      if (ws.z1[source * f1 + a] > 0) {
        grads.b1[a] += g;
        for (let u = 0; u < k; u++) {
          const sourceX = source + u - pad;
          if (sourceX >= 0 && sourceX < d) {
            grads.w1[a * k + u] += g * x[sourceX];
          }
        }
      }
    }
  }
}

class AdamState {
  m: CnnParams;
  v: CnnParams;
  t = 0;

  constructor(params: CnnParams) {
    this.m = zerosLike(params);
    this.v = zerosLike(params);
  }

  step(params: CnnParams, grads: CnnParams, lr: number): void {
    this.t++;
    const b1 = 0.9;
    const b2 = 0.999;
    const eps = 1e-8;
    const correction1 = 1 - Math.pow(b1, this.t);
    const correction2 = 1 - Math.pow(b2, this.t);
    for (const key of ["w1", "b1", "w2", "b2", "wd", "bd"] as const) {
      const p = params[key];
      const g = grads[key];
      const m = this.m[key];
      const v = this.v[key];
      for (let i = 0; i < p.length; i++) {
        m[i] = b1 * m[i] + (1 - b1) * g[i];
        v[i] = b2 * v[i] + (1 - b2) * g[i] * g[i];
        p[i] -= (lr * (m[i] / correction1)) / (Math.sqrt(v[i] / correction2) + eps);
      }
    }
  }
}

export class CnnModel implements FittedModel {
  constructor(
    private readonly params: CnnParams,
    private readonly shape: CnnShape,
    private readonly config: ModelConfig,
  ) {}

  predictProba(X: Matrix): Float64Array {
    const ws = makeWorkspace(this.shape);
    const out = new Float64Array(X.rows);
    for (let row = 0; row < X.rows; row++) {
      out[row] = cnnForward(matrixRow(X, row) as Float64Array, this.params, this.shape, ws);
    }
    return out;
  }

  describe(): string {
    const { f1, f2, k } = this.shape;
    return (
      `cnn(conv1d(${f1},k${k})+relu -> maxpool2 -> conv1d(${f2},k${k})+relu ` +
      `-> globalavgpool -> dense(1,sigmoid); adam lr=${this.config.learningRate} ` +
      `epochs=${this.config.epochs} batch=${BATCH_SIZE})`
    );
  }
}

export function fitCnn(
  X: Matrix,
  y: number[],
  config: ModelConfig,
  seed: number,
): CnnModel {
  const shape: CnnShape = {
    d: X.cols,
    k: config.kernel as number,
    f1: config.filters1 as number,
    f2: config.filters2 as number,
    pooled: Math.floor(X.cols / 2),
  };
  const rng = new Rng(seed);
  const params = initParams(shape, rng);
  const adam = new AdamState(params);
  const ws = makeWorkspace(shape);
  const order = Array.from({ length: X.rows }, (_, i) => i);
  const epochs = config.epochs as number;
  const lr = config.learningRate as number;

  for (let epoch = 0; epoch < epochs; epoch++) {
    rng.shuffle(order);
    for (let start = 0; start < order.length; start += BATCH_SIZE) {
      const batch = order.slice(start, start + BATCH_SIZE);
      const grads = zerosLike(params);
      for (const sample of batch) {
        const x = matrixRow(X, sample) as Float64Array;
        const probability = cnnForward(x, params, shape, ws);
        cnnBackward(x, y[sample], probability, params, shape, ws, grads);
      }
      for (const key of ["w1", "b1", "w2", "b2", "wd", "bd"] as const) {
        const g = grads[key];
        for (let i = 0; i < g.length; i++) g[i] /= batch.length;
      }
      adam.step(params, grads, lr);
    }
  }
  return new CnnModel(params, shape, config);
}

export const cnnFamily: ModelFamily = {
  name: "cnn",
  sampleConfig(rng: Rng): ModelConfig {
    return {
      filters1: rng.pick(FILTERS1_GRID),
      filters2: rng.pick(FILTERS2_GRID),
      kernel: rng.pick(KERNEL_GRID),
      learningRate: rng.pick(LEARNING_RATE_GRID),
      epochs: rng.pick(EPOCHS_GRID),
    };
  },
  fit: fitCnn,
};

export type { CnnParams, CnnShape, Workspace };
export { initParams, makeWorkspace, zerosLike };
