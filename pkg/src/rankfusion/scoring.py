"""Scoring systems: unit-range score vectors, rank functions, and rank-score curves.

A scoring system is one model's view of the test set: a score per instance in
[0, 1], higher meaning more trustworthy. From the scores we derive a rank
function (a permutation assigning rank 1 to the highest score) and a
rank-score curve (the scores read off in rank order, i.e. sorted descending).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np


class DegenerateScoresWarning(UserWarning):
    """A score vector is constant, so its ordering carries no information."""


class RescaledScoresWarning(UserWarning):
    """Raw scores fell outside [0, 1] and were min-max rescaled."""


def _as_float_vector(values, name: str = "scores") -> np.ndarray:
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{name} must contain at least one value")
    bad = np.flatnonzero(~np.isfinite(arr))
    if bad.size:
        raise ValueError(f"{name}[{bad[0]}] is not finite: {arr[bad[0]]!r}")
    return arr


@dataclass(frozen=True)
class ScoringSystem:
    """One model's normalized scores over the shared set of test instances.

    `scores[d]` is the score of instance d, in [0, 1]. The array is copied
    and frozen at construction; instances are safe to share across threads.
    """

    id: str
    scores: np.ndarray

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("system id must be a non-empty string")
        arr = _as_float_vector(self.scores, f"scores of system {self.id!r}")
        if arr.min() < 0.0 or arr.max() > 1.0:
            raise ValueError(
                f"scores of system {self.id!r} must lie in [0, 1]; "
                f"range is [{arr.min()}, {arr.max()}]"
            )
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "scores", arr)

    @property
    def n(self) -> int:
        return int(self.scores.size)


def normalize_scores(raw) -> np.ndarray:
    """Min-max rescale a raw score vector onto [0, 1].

    A constant vector has no spread to rescale; it maps to all 0.5 and emits
    a DegenerateScoresWarning rather than failing, so one degenerate model
    does not abort a whole sweep.
    """
    arr = _as_float_vector(raw)
    lo = float(arr.min())
    hi = float(arr.max())
    if hi == lo:
        warnings.warn(
            f"constant score vector (all {lo}); normalized to 0.5 everywhere",
            DegenerateScoresWarning,
            stacklevel=2,
        )
        return np.full(arr.shape, 0.5)
    return (arr - lo) / (hi - lo)


def build_system(system_id: str, raw, normalize: bool = False) -> ScoringSystem:
    """Construct a ScoringSystem, rescaling onto [0, 1] only when needed.

    With ``normalize=False`` (the default) scores already inside [0, 1] pass
    through unchanged, since probability outputs need no further treatment;
    out-of-range scores are min-max rescaled with a RescaledScoresWarning.
    With ``normalize=True`` min-max rescaling is always applied.
    """
    arr = _as_float_vector(raw, f"scores of system {system_id!r}")
    if normalize:
        arr = normalize_scores(arr)
    elif arr.min() < 0.0 or arr.max() > 1.0:
        warnings.warn(
            f"scores of system {system_id!r} fall outside [0, 1]; "
            "min-max rescaling applied",
            RescaledScoresWarning,
            stacklevel=2,
        )
        arr = normalize_scores(arr)
    return ScoringSystem(system_id, arr)


def derive_rank(system: ScoringSystem) -> np.ndarray:
    """Rank instances 1..n by descending score.

    Returns an int64 array where ``ranks[d]`` is the rank of instance d and
    rank 1 marks the highest score. Ties are broken by ascending instance
    index, which makes the result a deterministic permutation of 1..n.
    """
    order = np.argsort(-system.scores, kind="stable")
    ranks = np.empty(system.n, dtype=np.int64)
    ranks[order] = np.arange(1, system.n + 1)
    return ranks


def rsc_curve(system: ScoringSystem, ranks: np.ndarray) -> np.ndarray:
    """Rank-score curve: ``values[i-1]`` is the score of the instance at rank i.

    Composing the score function with the inverse rank function reads the
    scores off in rank order, so the result is the score vector sorted
    descending and is non-increasing by construction.
    """
    ranks = np.asarray(ranks)
    if ranks.shape != system.scores.shape:
        raise ValueError(
            f"rank/score length mismatch for system {system.id!r}: "
            f"{ranks.size} ranks vs {system.n} scores"
        )
    if not np.array_equal(np.sort(ranks), np.arange(1, system.n + 1)):
        raise ValueError(
            f"ranks for system {system.id!r} must be a permutation of 1..{system.n}"
        )
    return system.scores[np.argsort(ranks, kind="stable")]
