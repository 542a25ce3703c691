/**
 * Raw dataset loading. The UCI file is whitespace-separated (comma-separated
 * copies exist too); each row holds the 14 attribute values followed by the
 * 0/1 class label.
 */

import { readFileSync } from "node:fs";

import {
  BINARY_ATTRIBUTES,
  EXPECTED_COLUMNS,
  EXPECTED_ROWS,
  NOMINAL_ATTRIBUTES,
} from "./datasetConfig.js";

export interface RawDataset {
  /** attributes[row][attribute], 14 per row */
  attributes: number[][];
  labels: number[];
}

export function parseRawDataset(text: string, expectRows = EXPECTED_ROWS): RawDataset {
  const attributes: number[][] = [];
  const labels: number[] = [];
  const lines = text.split(/\r?\n/);

  for (let lineNumber = 1; lineNumber <= lines.length; lineNumber++) {
    const line = lines[lineNumber - 1].trim();
    if (line === "" || line.startsWith("#")) continue;
    const cells = line.split(/[\s,]+/);
    if (cells.length !== EXPECTED_COLUMNS) {
      throw new Error(
        `line ${lineNumber}: expected ${EXPECTED_COLUMNS} values, found ${cells.length}`,
      );
    }
    const values = cells.map((cell, position) => {
      const value = Number(cell);
      if (!Number.isFinite(value)) {
        throw new Error(`line ${lineNumber}, field ${position + 1}: not a number: ${cell}`);
      }
      return value;
    });
    const label = values[EXPECTED_COLUMNS - 1];
    if (label !== 0 && label !== 1) {
      throw new Error(`line ${lineNumber}: label must be 0 or 1, got ${label}`);
    }
    validateRow(values, lineNumber);
    attributes.push(values.slice(0, EXPECTED_COLUMNS - 1));
    labels.push(label);
  }

  if (expectRows > 0 && attributes.length !== expectRows) {
    throw new Error(`expected ${expectRows} data rows, found ${attributes.length}`);
  }
  return { attributes, labels };
}

function validateRow(values: number[], lineNumber: number): void {
  for (const index of BINARY_ATTRIBUTES) {
    if (values[index] !== 0 && values[index] !== 1) {
      throw new Error(
        `line ${lineNumber}: attribute A${index + 1} must be binary 0/1, got ${values[index]}`,
      );
    }
  }
  for (const nominal of NOMINAL_ATTRIBUTES) {
    if (!nominal.categories.includes(values[nominal.index])) {
      throw new Error(
        `line ${lineNumber}: attribute A${nominal.index + 1} has unknown category ${values[nominal.index]}`,
      );
    }
  }
}

export function loadRawDataset(path: string, expectRows = EXPECTED_ROWS): RawDataset {
  return parseRawDataset(readFileSync(path, "utf-8"), expectRows);
}
