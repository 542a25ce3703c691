import { describe, expect, it } from "vitest";

import { adaboostFamily } from "../src/models/adaboost.js";
import {
  cnnBackward,
  cnnFamily,
  cnnForward,
  fitCnn,
  initParams,
  makeWorkspace,
  zerosLike,
  type CnnShape,
} from "../src/models/cnn.js";
import { forestFamily } from "../src/models/forest.js";
import { knnFamily } from "../src/models/knn.js";
import { ldaFamily } from "../src/models/lda.js";
import type { ModelFamily } from "../src/models/types.js";
import { preprocess } from "../src/preprocess.js";
import { Rng } from "../src/rng.js";
import { makeSyntheticDataset } from "../src/synthetic.js";
import { accuracyAtHalf, randomSearch } from "../src/tuning.js";

const DEFAULTS: Record<string, Record<string, number | string>> = {
  knn: { k: 9, weighting: "distance" },
  lda: { shrinkage: 0.05 },
  adaboost: { rounds: 75, learningRate: 0.5 },
  forest: { trees: 50, maxDepth: 8, maxFeatures: "sqrt", minLeaf: 2 },
  cnn: { filters1: 8, filters2: 16, kernel: 3, learningRate: 0.01, epochs: 15 },
};

const dataset = makeSyntheticDataset(100);
const data = preprocess(dataset, new Rng(100));

function checkFamily(family: ModelFamily) {
  const model = family.fit(data.trainX, data.trainY, DEFAULTS[family.name], 41);
  const probabilities = model.predictProba(data.testX);
  for (const p of probabilities) {
    expect(p).toBeGreaterThanOrEqual(0);
    expect(p).toBeLessThanOrEqual(1);
  }
  const accuracy = accuracyAtHalf(probabilities, data.testY);
  expect(accuracy).toBeGreaterThan(0.8);
  return probabilities;
}

describe("model families on learnable data", () => {
  it("knn learns and emits valid probabilities", () => {
    checkFamily(knnFamily);
  });
  it("lda learns and emits valid probabilities", () => {
    checkFamily(ldaFamily);
  });
  it("adaboost learns and emits valid probabilities", () => {
    checkFamily(adaboostFamily);
  });
  it("forest learns and emits valid probabilities", () => {
    checkFamily(forestFamily);
  });
  it("cnn learns and emits valid probabilities", () => {
    checkFamily(cnnFamily);
  });

  it("seeded families are reproducible", () => {
    for (const family of [forestFamily]) {
      const first = family.fit(data.trainX, data.trainY, DEFAULTS[family.name], 55);
      const second = family.fit(data.trainX, data.trainY, DEFAULTS[family.name], 55);
      expect(first.predictProba(data.testX)).toEqual(second.predictProba(data.testX));
    }
    const cnnA = fitCnn(data.trainX, data.trainY, DEFAULTS.cnn, 56);
    const cnnB = fitCnn(data.trainX, data.trainY, DEFAULTS.cnn, 56);
    expect(cnnA.predictProba(data.testX)).toEqual(cnnB.predictProba(data.testX));
  });

  it("config sampling is seeded", () => {
    for (const family of [knnFamily, ldaFamily, adaboostFamily, forestFamily]) {
      expect(family.sampleConfig(new Rng(8))).toEqual(family.sampleConfig(new Rng(8)));
    }
  });

  it("a failing fit aborts naming the model", () => {
    const singleClass = data.trainY.map(() => 1);
    expect(() =>
      randomSearch(ldaFamily, data.trainX, singleClass, { configs: 1, folds: 2, seed: 1 }),
    ).toThrow(/training lda failed/);
  });
});

describe("cnn gradients", () => {
  it("match central finite differences", () => {
    const shape: CnnShape = { d: 8, k: 3, f1: 2, f2: 3, pooled: 4 };
    const rng = new Rng(2024);
    const params = initParams(shape, rng);
    // fresh init has exact zeros (zero biases, relu-dead inputs), which parks
    // pre-activations exactly on the relu kink where finite differences and
    // subgradients legitimately disagree; jitter everything away from kinks
    for (const key of ["w1", "b1", "w2", "b2", "wd", "bd"] as const) {
      const values = params[key];
      for (let i = 0; i < values.length; i++) values[i] += 0.3 * rng.normal();
    }
    const ws = makeWorkspace(shape);

    const loss = (x: Float64Array, y: number): number => {
      const p = cnnForward(x, params, shape, ws);
      return -(y * Math.log(p) + (1 - y) * Math.log(1 - p));
    };

    const keys = ["w1", "b1", "w2", "b2", "wd", "bd"] as const;
    for (let sample = 0; sample < 3; sample++) {
      const x = new Float64Array(shape.d);
      for (let i = 0; i < shape.d; i++) x[i] = rng.normal();
      const y = sample % 2;

      const grads = zerosLike(params);
      const p = cnnForward(x, params, shape, ws);
      cnnBackward(x, y, p, params, shape, ws, grads);

      const epsilon = 1e-6;
      for (const key of keys) {
        const values = params[key];
        for (let i = 0; i < values.length; i++) {
          const original = values[i];
          values[i] = original + epsilon;
          const plus = loss(x, y);
          values[i] = original - epsilon;
          const minus = loss(x, y);
          values[i] = original;
          const numeric = (plus - minus) / (2 * epsilon);
          const analytic = grads[key][i];
          const scale = Math.max(1e-4, Math.abs(numeric), Math.abs(analytic));
          expect(Math.abs(numeric - analytic) / scale).toBeLessThan(1e-4);
        }
      }
    }
  });
});
