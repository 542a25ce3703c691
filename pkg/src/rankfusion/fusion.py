"""Combine subsets of scoring systems by weighted score or rank averaging.

A fusion case names a subset of systems, a fusion type (average the scores,
or average the ranks), and a weighting scheme: AC gives every system weight
1, WCDS weights each system by its diversity strength within the subset.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .diversity import diversity_strength
from .scoring import ScoringSystem

FUSION_TYPES = ("score", "rank")
WEIGHTINGS = ("AC", "WCDS")
RANK_WEIGHT_MODES = ("inverse", "direct")


class DegenerateWeightsWarning(UserWarning):
    """Diversity-strength weights collapsed to zero; equal weights used instead."""


@dataclass(frozen=True)
class FusionCase:
    """A subset of system ids plus the fusion type and weighting to apply."""

    systems: tuple[str, ...]
    fusion_type: str
    weighting: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "systems", tuple(self.systems))
        if len(self.systems) < 2:
            raise ValueError(f"a fusion case needs at least two systems: {self.systems}")
        if len(set(self.systems)) != len(self.systems):
            raise ValueError(f"fusion case has duplicate system ids: {self.systems}")
        if self.fusion_type not in FUSION_TYPES:
            raise ValueError(
                f"fusion_type must be one of {FUSION_TYPES}, got {self.fusion_type!r}"
            )
        if self.weighting not in WEIGHTINGS:
            raise ValueError(
                f"weighting must be one of {WEIGHTINGS}, got {self.weighting!r}"
            )

    @property
    def label(self) -> str:
        """Compact subset label: 'BCD' for single-letter ids, 'm1+m2' otherwise."""
        if all(len(s) == 1 for s in self.systems):
            return "".join(self.systems)
        return "+".join(self.systems)


def _check_weights(weights, count: int) -> np.ndarray:
    w = np.asarray(weights, dtype=float)
    if w.ndim != 1 or w.size != count:
        raise ValueError(f"expected {count} weights, got shape {w.shape}")
    if not np.all(np.isfinite(w)) or np.any(w <= 0.0):
        raise ValueError(f"weights must be finite and strictly positive: {w.tolist()}")
    return w


def _weighted_mean(rows: np.ndarray, coefficients: np.ndarray) -> np.ndarray:
    # Accumulate system by system, in order. Downstream labeling breaks value
    # ties by instance index, so fused values must not depend on summation
    # order; a BLAS dot may regroup additions and shift a tie by one ulp.
    total = np.zeros(rows.shape[1])
    for coefficient, row in zip(coefficients, rows):
        total += coefficient * row
    return total / _sequential_sum(coefficients)


def _sequential_sum(values: np.ndarray) -> float:
    total = 0.0
    for v in values:
        total += float(v)
    return total


def case_weights(
    case: FusionCase, matrix: np.ndarray, system_ids: Sequence[str]
) -> np.ndarray:
    """Weight vector for a fusion case, aligned with ``case.systems``.

    AC yields all ones. WCDS yields each member's diversity strength within
    the fused subset, computed from the pairwise diversity matrix of the
    whole experiment (``system_ids`` gives the matrix row order). A zero
    diversity strength (identical curves inside the subset) would make a
    weight unusable, so the case falls back to equal weights with a warning
    instead of failing.
    """
    k = len(case.systems)
    if case.weighting == "AC":
        return np.ones(k)
    index = {sid: i for i, sid in enumerate(system_ids)}
    missing = [sid for sid in case.systems if sid not in index]
    if missing:
        raise ValueError(f"diversity matrix does not cover systems: {missing}")
    strengths = diversity_strength(matrix, [index[sid] for sid in case.systems])
    if np.any(strengths == 0.0):
        warnings.warn(
            f"zero diversity strength in case {case.label}; "
            "falling back to equal weights",
            DegenerateWeightsWarning,
            stacklevel=2,
        )
        return np.ones(k)
    return strengths


def fuse_scores(systems: Sequence[ScoringSystem], weights) -> np.ndarray:
    """Per-instance weighted mean of the systems' scores.

    The result is a convex combination, so every fused value stays within
    the elementwise min and max of the inputs (and hence in [0, 1]). Equal
    weights are replaced by ones so that the equal-weight case is computed
    bit-for-bit like the unweighted one.
    """
    if not systems:
        raise ValueError("no systems to fuse")
    n = systems[0].n
    for s in systems:
        if s.n != n:
            raise ValueError(
                f"score length mismatch: system {s.id!r} has {s.n} instances, expected {n}"
            )
    w = _check_weights(weights, len(systems))
    if np.all(w == w[0]):
        w = np.ones_like(w)
    stacked = np.vstack([s.scores for s in systems])
    return _weighted_mean(stacked, w)


def fuse_ranks(
    ranks: Sequence[np.ndarray], weights, weight_mode: str = "inverse"
) -> np.ndarray:
    """Per-instance weighted mean of rank values; lower fused value is better.

    ``weight_mode`` selects the coefficient applied to each system's ranks:
    "inverse" uses 1/w_j, "direct" uses w_j. Either way the coefficients are
    normalized by their sum, so with equal weights both modes reduce to the
    plain average rank. Equal coefficients are replaced by ones so that the
    equal-weight case is computed bit-for-bit like the unweighted one.
    """
    if weight_mode not in RANK_WEIGHT_MODES:
        raise ValueError(
            f"weight_mode must be one of {RANK_WEIGHT_MODES}, got {weight_mode!r}"
        )
    if not ranks:
        raise ValueError("no rank functions to fuse")
    vectors = [np.asarray(r, dtype=float) for r in ranks]
    n = vectors[0].size
    for r in vectors:
        if r.ndim != 1 or r.size != n:
            raise ValueError(f"rank length mismatch: {r.size} vs expected {n}")
    stacked = np.vstack(vectors)
    w = _check_weights(weights, stacked.shape[0])
    coef = 1.0 / w if weight_mode == "inverse" else w
    if np.all(coef == coef[0]):
        coef = np.ones_like(coef)
    return _weighted_mean(stacked, coef)
