/**
 * Schema-compatible synthetic stand-in for the real dataset, used by tests
 * and demos when the UCI file is not present. Feature distributions are
 * invented but label-correlated, so the pipeline has real signal to learn;
 * results on it say nothing about the real data.
 */

import {
  BINARY_ATTRIBUTES,
  EXPECTED_ROWS,
  NOMINAL_ATTRIBUTES,
  NUMERIC_ATTRIBUTES,
} from "./datasetConfig.js";
import type { RawDataset } from "./dataset.js";
import { Rng } from "./rng.js";

export function makeSyntheticDataset(seed: number, rows = EXPECTED_ROWS): RawDataset {
  const rng = new Rng(seed);
  const positives = Math.round(rows * 0.445);
  const labels = rng.shuffle(
    Array.from({ length: rows }, (_, i) => (i < positives ? 1 : 0)),
  );

  const attributes: number[][] = [];
  for (let row = 0; row < rows; row++) {
    const label = labels[row];
    const values = new Array<number>(14).fill(0);
    NUMERIC_ATTRIBUTES.forEach((attribute, position) => {
      const shift = (label === 1 ? 1 : -1) * (0.4 + 0.15 * position);
      const rounded = Math.round((shift + rng.normal() * 1.2) * 1000) / 1000;
      values[attribute] = rounded === 0 ? 0 : rounded; // normalize -0
    });
    for (const attribute of BINARY_ATTRIBUTES) {
      const pOne = label === 1 ? 0.7 : 0.35;
      values[attribute] = rng.next() < pOne ? 1 : 0;
    }
    for (const nominal of NOMINAL_ATTRIBUTES) {
      const k = nominal.categories.length;
      // class-conditional bias towards opposite ends of the category list
      const u = rng.next();
      const biased = label === 1 ? Math.pow(u, 1.6) : 1 - Math.pow(u, 1.6);
      const index = Math.min(k - 1, Math.floor(biased * k));
      values[nominal.index] = nominal.categories[index];
    }
    attributes.push(values);
  }
  return { attributes, labels };
}

export function renderRawDataset(dataset: RawDataset): string {
  return (
    dataset.attributes
      .map((values, row) => [...values, dataset.labels[row]].join(" "))
      .join("\n") + "\n"
  );
}
