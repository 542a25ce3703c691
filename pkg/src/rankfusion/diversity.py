"""Cognitive diversity between scoring systems, measured on rank-score curves.

Two systems that order and score the test set differently have visibly
different rank-score curves; the gap between the curves is what we quantify.
Diversity is computed on the curves, never on raw per-instance scores, so it
is invariant to how instances happen to be numbered.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np


def cognitive_diversity(a, b) -> float:
    """Root-mean-square-style gap between two rank-score curves.

    The squared differences over all n rank positions are summed and divided
    by n - 2 before taking the root, so inputs with n < 3 are rejected (the
    denominator would not be positive).
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"curve length mismatch: {a.size} vs {b.size}")
    n = a.size
    if n < 3:
        raise ValueError(
            f"cognitive diversity needs n >= 3 (the denominator is n - 2), got n={n}"
        )
    diff = a - b
    return float(np.sqrt(float(np.dot(diff, diff)) / (n - 2)))


def cd_matrix(curves: Sequence[np.ndarray]) -> np.ndarray:
    """Pairwise cognitive-diversity matrix over a list of rank-score curves.

    Symmetric with a zero diagonal; entry (i, j) is the diversity between
    systems i and j.
    """
    t = len(curves)
    if t < 2:
        raise ValueError(f"need at least two systems to compare, got {t}")
    matrix = np.zeros((t, t))
    for i in range(t):
        for j in range(i + 1, t):
            value = cognitive_diversity(curves[i], curves[j])
            matrix[i, j] = value
            matrix[j, i] = value
    return matrix


def diversity_strength(matrix: np.ndarray, subset: Sequence[int]) -> np.ndarray:
    """Average diversity of each subset member to the other subset members.

    For member i, the strength is the mean of CD(i, j) over the other
    members j of the subset; the averaging denominator is the subset size
    minus one. Output is aligned with the order of ``subset``.
    """
    members = list(subset)
    k = len(members)
    if k < 2:
        raise ValueError(
            f"diversity strength is undefined for a singleton (subset size {k})"
        )
    if len(set(members)) != k:
        raise ValueError("subset indices must be distinct")
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"diversity matrix must be square, got shape {matrix.shape}")
    if any(i < 0 or i >= matrix.shape[0] for i in members):
        raise ValueError(
            f"subset indices out of range for a {matrix.shape[0]}-system matrix"
        )
    strengths = np.empty(k)
    for pos, i in enumerate(members):
        others = [j for j in members if j != i]
        strengths[pos] = matrix[i, others].mean()
    return strengths
