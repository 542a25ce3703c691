/**
 * Attribute typing for the Australian Credit Approval file (14 attributes
 * plus a 0/1 label, 690 rows). Follows the dataset's official documentation:
 * 6 continuous attributes, 4 binary, 4 nominal. Nominal category sets are
 * fixed here rather than inferred from data so the encoded feature layout
 * is identical for any subset of rows.
 */

export const EXPECTED_ROWS = 690;
export const EXPECTED_COLUMNS = 15; // 14 attributes + label

export const NUMERIC_ATTRIBUTES = [1, 2, 6, 9, 12, 13] as const; // A2 A3 A7 A10 A13 A14
export const BINARY_ATTRIBUTES = [0, 7, 8, 10] as const; // A1 A8 A9 A11

export interface NominalAttribute {
  index: number;
  categories: readonly number[];
}

export const NOMINAL_ATTRIBUTES: readonly NominalAttribute[] = [
  { index: 3, categories: [1, 2, 3] }, // A4
  { index: 4, categories: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14] }, // A5
  { index: 5, categories: [1, 2, 3, 4, 5, 6, 7, 8, 9] }, // A6
  { index: 11, categories: [1, 2, 3] }, // A12
];

export const ONE_HOT_WIDTH = NOMINAL_ATTRIBUTES.reduce(
  (total, attribute) => total + attribute.categories.length,
  0,
);

/** numeric block, then binary block, then one-hot blocks */
export const FEATURE_WIDTH =
  NUMERIC_ATTRIBUTES.length + BINARY_ATTRIBUTES.length + ONE_HOT_WIDTH;
