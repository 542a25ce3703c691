/**
 * Preprocessing: stratified train/test split, z-scoring of numeric
 * attributes with statistics fit on the training split only, one-hot
 * encoding of nominals, binaries passed through unchanged.
 *
 * Feature layout (FEATURE_WIDTH columns): z-scored numerics, then binaries,
 * then one-hot blocks in config order.
 */

import {
  BINARY_ATTRIBUTES,
  FEATURE_WIDTH,
  NOMINAL_ATTRIBUTES,
  NUMERIC_ATTRIBUTES,
} from "./datasetConfig.js";
import type { RawDataset } from "./dataset.js";
import { Rng } from "./rng.js";

export interface Matrix {
  rows: number;
  cols: number;
  data: Float64Array; // row-major
}

export function matrixRow(matrix: Matrix, row: number): Float64Array {
  return matrix.data.subarray(row * matrix.cols, (row + 1) * matrix.cols);
}

export interface SplitIndices {
  train: number[];
  test: number[];
}

export interface PreprocessedDataset {
  trainX: Matrix;
  trainY: number[];
  testX: Matrix;
  testY: number[];
  split: SplitIndices;
  numericMeans: number[];
  numericStds: number[];
}

/**
 * Seeded stratified split: shuffles each class separately and reserves
 * round(testFraction * classSize) rows of each class for the test set, so
 * train and test label proportions stay within a percentage point of the
 * full dataset's.
 */
export function stratifiedSplit(
  labels: number[],
  testFraction: number,
  rng: Rng,
): SplitIndices {
  const positives: number[] = [];
  const negatives: number[] = [];
  labels.forEach((label, index) => (label === 1 ? positives : negatives).push(index));
  rng.shuffle(positives);
  rng.shuffle(negatives);

  const testPositives = Math.round(testFraction * positives.length);
  const testNegatives = Math.round(testFraction * negatives.length);
  const test = [...positives.slice(0, testPositives), ...negatives.slice(0, testNegatives)];
  const train = [...positives.slice(testPositives), ...negatives.slice(testNegatives)];
  test.sort((a, b) => a - b);
  train.sort((a, b) => a - b);
  return { train, test };
}

export function preprocess(
  raw: RawDataset,
  rng: Rng,
  testFraction = 0.2,
): PreprocessedDataset {
  const split = stratifiedSplit(raw.labels, testFraction, rng);

  const numericMeans: number[] = [];
  const numericStds: number[] = [];
  for (const attribute of NUMERIC_ATTRIBUTES) {
    let sum = 0;
    for (const row of split.train) sum += raw.attributes[row][attribute];
    const mean = sum / split.train.length;
    let varianceSum = 0;
    for (const row of split.train) {
      const delta = raw.attributes[row][attribute] - mean;
      varianceSum += delta * delta;
    }
    const std = Math.sqrt(varianceSum / split.train.length);
    numericMeans.push(mean);
    numericStds.push(std === 0 ? 1 : std);
  }

  const encode = (rows: number[]): Matrix => {
    const matrix: Matrix = {
      rows: rows.length,
      cols: FEATURE_WIDTH,
      data: new Float64Array(rows.length * FEATURE_WIDTH),
    };
    rows.forEach((rawRow, outRow) => {
      const values = raw.attributes[rawRow];
      const out = matrixRow(matrix, outRow);
      let cursor = 0;
      NUMERIC_ATTRIBUTES.forEach((attribute, position) => {
        out[cursor++] = (values[attribute] - numericMeans[position]) / numericStds[position];
      });
      for (const attribute of BINARY_ATTRIBUTES) {
        out[cursor++] = values[attribute];
      }
      for (const nominal of NOMINAL_ATTRIBUTES) {
        const hot = nominal.categories.indexOf(values[nominal.index]);
        out[cursor + hot] = 1;
        cursor += nominal.categories.length;
      }
    });
    return matrix;
  };

  return {
    trainX: encode(split.train),
    trainY: split.train.map((row) => raw.labels[row]),
    testX: encode(split.test),
    testY: split.test.map((row) => raw.labels[row]),
    split,
    numericMeans,
    numericStds,
  };
}

/** Row subset of a matrix (copy). */
export function takeRows(matrix: Matrix, rows: number[]): Matrix {
  const out: Matrix = {
    rows: rows.length,
    cols: matrix.cols,
    data: new Float64Array(rows.length * matrix.cols),
  };
  rows.forEach((row, outRow) => {
    out.data.set(matrixRow(matrix, row), outRow * matrix.cols);
  });
  return out;
}
