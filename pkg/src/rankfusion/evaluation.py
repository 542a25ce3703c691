"""Binary predictions, accuracy, exhaustive case enumeration, and leaderboards.

Two labeling rules are in play. Score-valued vectors (single systems and
score fusions) are thresholded at a fixed cutoff. Rank-valued vectors are
labeled top-P: the P instances with the smallest fused rank value become
positives, where P is the positive count of the ground truth (or an explicit
override).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .config import RunConfig
from .diversity import cd_matrix
from .fusion import (
    FUSION_TYPES,
    WEIGHTINGS,
    FusionCase,
    case_weights,
    fuse_ranks,
    fuse_scores,
)
from .scoring import ScoringSystem, derive_rank, rsc_curve

SINGLE = "single"


def _as_label_vector(labels, n: int | None = None) -> np.ndarray:
    arr = np.asarray(labels)
    if arr.ndim != 1:
        raise ValueError(f"labels must be one-dimensional, got shape {arr.shape}")
    if n is not None and arr.size != n:
        raise ValueError(f"label length mismatch: {arr.size} labels for {n} instances")
    values = np.unique(arr)
    if not np.all(np.isin(values, (0, 1))):
        raise ValueError(f"labels must be 0 or 1, found {values.tolist()}")
    return arr.astype(np.int64)


def labels_from_scores(values, threshold: float = 0.5) -> np.ndarray:
    """Threshold score-valued outputs into 0/1 labels.

    The boundary is inclusive: a value equal to the threshold maps to 1.
    Values must lie in [0, 1].
    """
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError(f"values must be a non-empty vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)) or arr.min() < 0.0 or arr.max() > 1.0:
        raise ValueError("score values must be finite and lie in [0, 1]")
    return (arr >= threshold).astype(np.int64)


def labels_from_ranks(values, positives: int) -> np.ndarray:
    """Label the ``positives`` best-ranked instances 1, everything else 0.

    Lower fused rank value means more trustworthy, so the P smallest values
    win; ties at the cutoff are broken by ascending instance index. Exactly
    ``positives`` labels are 1.
    """
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"values must be one-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("rank values must be finite")
    if not 0 <= positives <= arr.size:
        raise ValueError(f"positives must lie in [0, {arr.size}], got {positives}")
    labels = np.zeros(arr.size, dtype=np.int64)
    order = np.argsort(arr, kind="stable")
    labels[order[:positives]] = 1
    return labels


def accuracy(predictions, truth) -> float:
    """Fraction of positions where prediction and ground truth agree."""
    pred = _as_label_vector(predictions)
    true = _as_label_vector(truth)
    if pred.size != true.size:
        raise ValueError(f"length mismatch: {pred.size} predictions vs {true.size} labels")
    return int(np.count_nonzero(pred == true)) / pred.size


def enumerate_cases(system_ids: Sequence[str]) -> list[FusionCase]:
    """Every fusion case over the given systems, in deterministic order.

    Subsets of size 2..t are walked by size then lexicographically by id,
    and each subset is crossed with both fusion types and both weightings.
    For t systems that is (2^t - 1 - t) * 4 cases.
    """
    ids = sorted(system_ids)
    if len(set(ids)) != len(ids):
        raise ValueError(f"system ids must be distinct: {sorted(system_ids)}")
    if len(ids) < 2:
        raise ValueError(f"need at least two systems to enumerate fusions, got {len(ids)}")
    cases = []
    for k in range(2, len(ids) + 1):
        for combo in itertools.combinations(ids, k):
            for fusion_type in FUSION_TYPES:
                for weighting in WEIGHTINGS:
                    cases.append(FusionCase(combo, fusion_type, weighting))
    return cases


@dataclass(frozen=True)
class FusionResult:
    """One evaluated row: a single system or a fused case."""

    label: str
    fusion_type: str  # "single", "score", or "rank"
    weighting: str  # "" for singles, else "AC" or "WCDS"
    fused: np.ndarray
    predictions: np.ndarray
    accuracy: float


@dataclass(frozen=True)
class Leaderboard:
    """All evaluated rows, sorted by accuracy descending then by name."""

    rows: tuple[FusionResult, ...]

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def accuracy_of(self, label: str, fusion_type: str, weighting: str = "") -> float:
        for row in self.rows:
            if (row.label, row.fusion_type, row.weighting) == (label, fusion_type, weighting):
                return row.accuracy
        raise KeyError(f"no row ({label!r}, {fusion_type!r}, {weighting!r})")


def run_all(
    systems: Sequence[ScoringSystem], truth, config: RunConfig | None = None
) -> Leaderboard:
    """Evaluate every single system and every enumerated fusion case.

    Singles and score fusions are thresholded on score; rank fusions are
    labeled top-P by fused rank value. Rows are sorted by accuracy
    descending, ties broken by label, fusion type, then weighting, so
    rerunning on identical input reproduces the leaderboard exactly.
    """
    config = config or RunConfig()
    if len(systems) < 2:
        raise ValueError(f"need at least two systems, got {len(systems)}")
    ids = [s.id for s in systems]
    if len(set(ids)) != len(ids):
        raise ValueError(f"system ids must be distinct: {ids}")
    n = systems[0].n
    for s in systems:
        if s.n != n:
            raise ValueError(
                f"instance count mismatch: system {s.id!r} has {s.n}, expected {n}"
            )
    if n < 3:
        raise ValueError(f"need at least 3 instances for diversity weights, got {n}")
    truth = _as_label_vector(truth, n)

    positives = config.positives if config.positives is not None else int(truth.sum())
    if positives > n:
        raise ValueError(f"positives override {positives} exceeds instance count {n}")

    by_id = {s.id: s for s in systems}
    ranks = {s.id: derive_rank(s) for s in systems}
    matrix = cd_matrix([rsc_curve(s, ranks[s.id]) for s in systems])

    rows = []
    for s in systems:
        predictions = labels_from_scores(s.scores, config.threshold)
        rows.append(
            FusionResult(
                label=s.id,
                fusion_type=SINGLE,
                weighting="",
                fused=s.scores,
                predictions=predictions,
                accuracy=accuracy(predictions, truth),
            )
        )

    for case in enumerate_cases(ids):
        weights = case_weights(case, matrix, ids)
        if case.fusion_type == "score":
            fused = fuse_scores([by_id[sid] for sid in case.systems], weights)
            predictions = labels_from_scores(fused, config.threshold)
        else:
            fused = fuse_ranks(
                [ranks[sid] for sid in case.systems], weights, config.rank_weight_mode
            )
            predictions = labels_from_ranks(fused, positives)
        rows.append(
            FusionResult(
                label=case.label,
                fusion_type=case.fusion_type,
                weighting=case.weighting,
                fused=fused,
                predictions=predictions,
                accuracy=accuracy(predictions, truth),
            )
        )

    rows.sort(key=lambda r: (-r.accuracy, r.label, r.fusion_type, r.weighting))
    return Leaderboard(tuple(rows))
