"""Run configuration shared by the engine, file IO, service, and CLI."""

from __future__ import annotations

from dataclasses import dataclass

from .fusion import RANK_WEIGHT_MODES

OUTPUT_FORMATS = ("csv", "json")

DEFAULT_SELFCHECK_SEED = 42


@dataclass(frozen=True)
class RunConfig:
    """Knobs for one evaluation run.

    normalize
        Force min-max rescaling of every input system. When off, scores
        already in [0, 1] pass through unchanged.
    rank_weight_mode
        Coefficient form for weighted rank fusion: "inverse" (1/w, default)
        or "direct" (w).
    threshold
        Score cutoff for positive predictions; the boundary value itself
        maps to the positive class.
    positives
        Override for the positive count used to label rank fusions. Default
        is the ground-truth positive count of the evaluated split.
    output_format
        Serialization for emitted results: "csv" or "json".
    seed
        Seed for the selfcheck's randomly generated instance.
    """

    normalize: bool = False
    rank_weight_mode: str = "inverse"
    threshold: float = 0.5
    positives: int | None = None
    output_format: str = "csv"
    seed: int = DEFAULT_SELFCHECK_SEED

    def __post_init__(self) -> None:
        if self.rank_weight_mode not in RANK_WEIGHT_MODES:
            raise ValueError(
                f"rank_weight_mode must be one of {RANK_WEIGHT_MODES}, "
                f"got {self.rank_weight_mode!r}"
            )
        if not 0.0 <= self.threshold <= 1.0:
            raise ValueError(f"threshold must lie in [0, 1], got {self.threshold}")
        if self.positives is not None and self.positives < 0:
            raise ValueError(f"positives must be >= 0, got {self.positives}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(
                f"output_format must be one of {OUTPUT_FORMATS}, "
                f"got {self.output_format!r}"
            )
