"""Fusion analysis for multiple scoring systems.

Builds rank functions and rank-score curves per system, measures pairwise
cognitive diversity, fuses every subset of systems by weighted score or rank
averaging, and ranks all cases by accuracy. Ships as a FastAPI service with
a thin command-line client.
"""

__version__ = "0.1.0"

from .config import RunConfig
from .diversity import cd_matrix, cognitive_diversity, diversity_strength
from .evaluation import (
    FusionResult,
    Leaderboard,
    accuracy,
    enumerate_cases,
    labels_from_ranks,
    labels_from_scores,
    run_all,
)
from .fusion import FusionCase, case_weights, fuse_ranks, fuse_scores
from .scoring import (
    ScoringSystem,
    build_system,
    derive_rank,
    normalize_scores,
    rsc_curve,
)
from .tables import (
    emit_diversity_report,
    emit_leaderboard,
    emit_rsc,
    load_scores,
    parse_scores_csv,
)

__all__ = [
    "RunConfig",
    "ScoringSystem",
    "FusionCase",
    "FusionResult",
    "Leaderboard",
    "accuracy",
    "build_system",
    "case_weights",
    "cd_matrix",
    "cognitive_diversity",
    "derive_rank",
    "diversity_strength",
    "emit_diversity_report",
    "emit_leaderboard",
    "emit_rsc",
    "enumerate_cases",
    "fuse_ranks",
    "fuse_scores",
    "labels_from_ranks",
    "labels_from_scores",
    "load_scores",
    "normalize_scores",
    "parse_scores_csv",
    "rsc_curve",
    "run_all",
]
