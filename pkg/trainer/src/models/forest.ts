/**
 * Random forest of gini-split CART trees: bootstrap sampling per tree and a
 * random feature subset per node. Probability is the mean over trees of the
 * leaf's positive fraction.
 */

import type { Matrix } from "../preprocess.js";
import { matrixRow } from "../preprocess.js";
import { Rng } from "../rng.js";
import type { FittedModel, ModelConfig, ModelFamily } from "./types.js";

const TREES_GRID = [50, 100, 150] as const;
const DEPTH_GRID = [4, 6, 8, 10, 14] as const;
const FEATURES_GRID = ["sqrt", "half"] as const;
const MIN_LEAF_GRID = [1, 2, 4] as const;

interface TreeNode {
  feature: number;
  threshold: number;
  left: TreeNode | null;
  right: TreeNode | null;
  probability: number; // positive fraction at this node (used by leaves)
}

function giniSplit(
  X: Matrix,
  y: number[],
  samples: number[],
  feature: number,
): { threshold: number; impurity: number } | null {
  const order = [...samples].sort(
    (a, b) => X.data[a * X.cols + feature] - X.data[b * X.cols + feature] || a - b,
  );
  const total = order.length;
  let positiveTotal = 0;
  for (const sample of order) positiveTotal += y[sample];

  let best: { threshold: number; impurity: number } | null = null;
  let leftCount = 0;
  let leftPositive = 0;
  for (let position = 0; position < total - 1; position++) {
    const sample = order[position];
    leftCount++;
    leftPositive += y[sample];
    const value = X.data[sample * X.cols + feature];
    const next = X.data[order[position + 1] * X.cols + feature];
    if (next === value) continue;
    const rightCount = total - leftCount;
    const rightPositive = positiveTotal - leftPositive;
    const pLeft = leftPositive / leftCount;
    const pRight = rightPositive / rightCount;
    const impurity =
      (leftCount / total) * 2 * pLeft * (1 - pLeft) +
      (rightCount / total) * 2 * pRight * (1 - pRight);
    if (best === null || impurity < best.impurity) {
      best = { threshold: (value + next) / 2, impurity };
    }
  }
  return best;
}

function growTree(
  X: Matrix,
  y: number[],
  samples: number[],
  depth: number,
  maxDepth: number,
  minLeaf: number,
  featuresPerNode: number,
  rng: Rng,
): TreeNode {
  let positive = 0;
  for (const sample of samples) positive += y[sample];
  const node: TreeNode = {
    feature: -1,
    threshold: 0,
    left: null,
    right: null,
    probability: positive / samples.length,
  };
  if (
    depth >= maxDepth ||
    samples.length < 2 * minLeaf ||
    positive === 0 ||
    positive === samples.length
  ) {
    return node;
  }

  const candidates = rng.shuffle(Array.from({ length: X.cols }, (_, i) => i)).slice(
    0,
    featuresPerNode,
  );
  let bestFeature = -1;
  let bestSplit: { threshold: number; impurity: number } | null = null;
  for (const feature of candidates) {
    const split = giniSplit(X, y, samples, feature);
    if (split && (bestSplit === null || split.impurity < bestSplit.impurity)) {
      bestFeature = feature;
      bestSplit = split;
    }
  }
  if (bestFeature < 0 || bestSplit === null) return node;

  const left: number[] = [];
  const right: number[] = [];
  for (const sample of samples) {
    (X.data[sample * X.cols + bestFeature] <= bestSplit.threshold ? left : right).push(sample);
  }
  if (left.length < minLeaf || right.length < minLeaf) return node;

  node.feature = bestFeature;
  node.threshold = bestSplit.threshold;
  node.left = growTree(X, y, left, depth + 1, maxDepth, minLeaf, featuresPerNode, rng);
  node.right = growTree(X, y, right, depth + 1, maxDepth, minLeaf, featuresPerNode, rng);
  return node;
}

function treeProbability(node: TreeNode, features: Float64Array): number {
  let current = node;
  while (current.left !== null && current.right !== null) {
    current = features[current.feature] <= current.threshold ? current.left : current.right;
  }
  return current.probability;
}

class ForestModel implements FittedModel {
  constructor(
    private readonly trees: TreeNode[],
    private readonly config: ModelConfig,
  ) {}

  predictProba(X: Matrix): Float64Array {
    const out = new Float64Array(X.rows);
    for (let row = 0; row < X.rows; row++) {
      const features = matrixRow(X, row);
      let total = 0;
      for (const tree of this.trees) total += treeProbability(tree, features);
      out[row] = total / this.trees.length;
    }
    return out;
  }

  describe(): string {
    return `forest(trees=${this.config.trees},depth=${this.config.maxDepth},features=${this.config.maxFeatures},minLeaf=${this.config.minLeaf})`;
  }
}

export const forestFamily: ModelFamily = {
  name: "forest",
  sampleConfig(rng: Rng): ModelConfig {
    return {
      trees: rng.pick(TREES_GRID),
      maxDepth: rng.pick(DEPTH_GRID),
      maxFeatures: rng.pick(FEATURES_GRID),
      minLeaf: rng.pick(MIN_LEAF_GRID),
    };
  },
  fit(X: Matrix, y: number[], config: ModelConfig, seed: number): FittedModel {
    const rng = new Rng(seed);
    const treeCount = config.trees as number;
    const featuresPerNode =
      config.maxFeatures === "sqrt"
        ? Math.max(1, Math.round(Math.sqrt(X.cols)))
        : Math.max(1, Math.floor(X.cols / 2));
    const trees: TreeNode[] = [];
    for (let t = 0; t < treeCount; t++) {
      const bootstrap = Array.from({ length: X.rows }, () => rng.int(X.rows));
      trees.push(
        growTree(
          X,
          y,
          bootstrap,
          0,
          config.maxDepth as number,
          config.minLeaf as number,
          featuresPerNode,
          rng,
        ),
      );
    }
    return new ForestModel(trees, config);
  },
};
