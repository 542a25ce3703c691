"""Seeded self-verification of the engine against the plain-loop reference.

Generates a random instance (5 systems, 50 instances, half the labels
positive), runs the full leaderboard through the engine, and re-derives every
accuracy with the independent loop-based routines in ``reference``. Also
exercises the structural invariants the engine relies on. All checks are
deterministic for a given seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_SELFCHECK_SEED, RunConfig
from .diversity import cd_matrix
from .evaluation import enumerate_cases, labels_from_ranks, run_all
from .fusion import fuse_scores
from .reference import reference_leaderboard
from .scoring import ScoringSystem, build_system, derive_rank, rsc_curve
from .tables import emit_leaderboard

SYSTEM_ID_POOL = "ABCDEFGH"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class SelfCheckReport:
    seed: int
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def make_random_instance(seed: int, t: int = 5, n: int = 50, positives: int | None = None):
    """Seeded random experiment: t systems of n uniform scores, fixed-P labels."""
    if not 2 <= t <= len(SYSTEM_ID_POOL):
        raise ValueError(f"t must lie in [2, {len(SYSTEM_ID_POOL)}], got {t}")
    rng = np.random.default_rng(seed)
    ids = list(SYSTEM_ID_POOL[:t])
    scores = rng.random((t, n))
    p = n // 2 if positives is None else positives
    labels = np.zeros(n, dtype=np.int64)
    labels[rng.permutation(n)[:p]] = 1
    systems = [build_system(sid, row) for sid, row in zip(ids, scores)]
    return systems, labels


def run_selfcheck(seed: int | None = None, t: int = 5, n: int = 50) -> SelfCheckReport:
    seed = DEFAULT_SELFCHECK_SEED if seed is None else seed
    systems, labels = make_random_instance(seed, t=t, n=n)
    ids = [s.id for s in systems]
    truth = labels.tolist()
    vectors = [s.scores.tolist() for s in systems]
    checks: list[CheckResult] = []

    expected_cases = (2**t - 1 - t) * 4
    cases = enumerate_cases(ids)
    checks.append(
        CheckResult(
            "case-count",
            len(cases) == expected_cases,
            f"{len(cases)} cases, expected {expected_cases}",
        )
    )

    leaderboard = run_all(systems, labels)
    expected_rows = t + expected_cases
    checks.append(
        CheckResult(
            "row-count",
            len(leaderboard) == expected_rows,
            f"{len(leaderboard)} rows, expected {expected_rows}",
        )
    )

    for mode in ("inverse", "direct"):
        board = (
            leaderboard
            if mode == "inverse"
            else run_all(systems, labels, RunConfig(rank_weight_mode=mode))
        )
        expected = reference_leaderboard(ids, vectors, truth, rank_weight_mode=mode)
        mismatches = [
            f"{row.label}/{row.fusion_type}/{row.weighting}: "
            f"{row.accuracy} != {expected[(row.label, row.fusion_type, row.weighting)]}"
            for row in board
            if row.accuracy != expected[(row.label, row.fusion_type, row.weighting)]
        ]
        checks.append(
            CheckResult(
                f"matches-reference-{mode}",
                len(board) == len(expected) and not mismatches,
                "; ".join(mismatches[:5]) or f"all {len(expected)} accuracies equal",
            )
        )

    pair_mismatches = []
    for case in cases:
        if len(case.systems) != 2 or case.weighting != "AC":
            continue
        ac = leaderboard.accuracy_of(case.label, case.fusion_type, "AC")
        wcds = leaderboard.accuracy_of(case.label, case.fusion_type, "WCDS")
        if ac != wcds:
            pair_mismatches.append(f"{case.label}/{case.fusion_type}: {ac} vs {wcds}")
    checks.append(
        CheckResult(
            "two-system-weighting-equivalence",
            not pair_mismatches,
            "; ".join(pair_mismatches[:5]) or "AC == WCDS for every pair",
        )
    )

    rerun = run_all(systems, labels)
    checks.append(
        CheckResult(
            "deterministic-rerun",
            emit_leaderboard(rerun) == emit_leaderboard(leaderboard),
            "reruns serialize byte-identically",
        )
    )

    checks.append(_structural_invariants(systems, labels))
    return SelfCheckReport(seed=seed, checks=tuple(checks))


def _structural_invariants(systems: list[ScoringSystem], labels: np.ndarray) -> CheckResult:
    problems = []
    n = systems[0].n
    ranks = {s.id: derive_rank(s) for s in systems}
    curves = [rsc_curve(s, ranks[s.id]) for s in systems]

    for s, curve in zip(systems, curves):
        r = ranks[s.id]
        if sorted(r.tolist()) != list(range(1, n + 1)):
            problems.append(f"ranks of {s.id} are not a bijection onto 1..{n}")
        if np.any(np.diff(curve) > 0):
            problems.append(f"rank-score curve of {s.id} is not non-increasing")

    matrix = cd_matrix(curves)
    if not np.array_equal(matrix, matrix.T):
        problems.append("diversity matrix is not symmetric")
    if np.any(np.diag(matrix) != 0.0):
        problems.append("diversity matrix diagonal is not zero")
    if np.any(matrix < 0.0):
        problems.append("diversity matrix has negative entries")

    fused = fuse_scores(systems, np.arange(1, len(systems) + 1, dtype=float))
    stacked = np.vstack([s.scores for s in systems])
    if np.any(fused < stacked.min(axis=0)) or np.any(fused > stacked.max(axis=0)):
        problems.append("fused scores escape the inputs' convex envelope")

    p = int(labels.sum())
    rank_labels = labels_from_ranks(fused, p)
    if int(rank_labels.sum()) != p:
        problems.append(f"top-P labeling produced {int(rank_labels.sum())} positives, wanted {p}")

    return CheckResult(
        "structural-invariants", not problems, "; ".join(problems) or "all hold"
    )
