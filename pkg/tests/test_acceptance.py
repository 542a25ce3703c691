"""Acceptance suite: one test per release criterion, each printing PASS/FAIL.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines. Every comparison here is exact unless a tolerance is stated inline.
"""

import time

import numpy as np
from click.testing import CliRunner

from rankfusion.cli import cli
from rankfusion.diversity import cd_matrix
from rankfusion.evaluation import (
    enumerate_cases,
    labels_from_ranks,
    run_all,
)
from rankfusion.fusion import fuse_ranks, fuse_scores
from rankfusion.reference import reference_leaderboard
from rankfusion.scoring import build_system, derive_rank, rsc_curve
from rankfusion.selfcheck import make_random_instance

from .conftest import scores_csv_text

ACCEPTANCE_SEED = 42


def _report(name: str, passed: bool) -> bool:
    print(f"[{'PASS' if passed else 'FAIL'}] {name}")
    return passed


def test_oracle_equivalence_on_seeded_instance():
    systems, labels = make_random_instance(ACCEPTANCE_SEED, t=5, n=50, positives=25)
    assert int(labels.sum()) == 25

    start = time.perf_counter()
    board = run_all(systems, labels)
    elapsed = time.perf_counter() - start

    expected = reference_leaderboard(
        [s.id for s in systems],
        [s.scores.tolist() for s in systems],
        labels.tolist(),
    )
    same_size = len(board) == len(expected) == 109
    exact = all(
        row.accuracy == expected[(row.label, row.fusion_type, row.weighting)]
        for row in board
    )
    ok = _report(
        "oracle equivalence: 109-row leaderboard matches the naive reference "
        f"exactly (engine runtime {elapsed * 1000:.1f} ms)",
        same_size and exact and elapsed < 1.0,
    )
    assert ok


def test_case_and_row_counts():
    systems, labels = make_random_instance(ACCEPTANCE_SEED, t=5, n=50, positives=25)
    cases = enumerate_cases([s.id for s in systems])
    board = run_all(systems, labels)
    ok = _report(
        f"case count: enumerate yields {len(cases)} cases and the leaderboard "
        f"has {len(board)} rows",
        len(cases) == 104 and len(board) == 109,
    )
    assert ok


def test_two_model_weighting_equivalence():
    failures = []
    for seed in (ACCEPTANCE_SEED, 7, 19, 101):
        systems, labels = make_random_instance(seed, t=5, n=50, positives=25)
        board = run_all(systems, labels)
        for case in enumerate_cases([s.id for s in systems]):
            if len(case.systems) != 2 or case.weighting != "AC":
                continue
            ac = board.accuracy_of(case.label, case.fusion_type, "AC")
            wcds = board.accuracy_of(case.label, case.fusion_type, "WCDS")
            if ac != wcds:
                failures.append((seed, case.label, case.fusion_type))
    ok = _report(
        "2-model equivalence: WCDS accuracy equals AC accuracy exactly for "
        "every pair and both fusion types",
        not failures,
    )
    assert ok, failures


def test_invariant_suite_over_random_instances():
    rng = np.random.default_rng(987654321)
    instances = 1000
    problems: list[str] = []

    for trial in range(instances):
        n = int(rng.integers(3, 201))
        t = int(rng.integers(2, 7))
        systems = [
            build_system(chr(ord("A") + i), rng.random(n)) for i in range(t)
        ]
        ranks = [derive_rank(s) for s in systems]
        curves = [rsc_curve(s, r) for s, r in zip(systems, ranks)]

        for s, r in zip(systems, ranks):
            if sorted(r.tolist()) != list(range(1, n + 1)):
                problems.append(f"trial {trial}: ranks of {s.id} not a bijection")
        for s, curve in zip(systems, curves):
            if np.any(np.diff(curve) > 0):
                problems.append(f"trial {trial}: curve of {s.id} increases")

        matrix = cd_matrix(curves)
        if not np.array_equal(matrix, matrix.T):
            problems.append(f"trial {trial}: CD matrix asymmetric")
        if np.any(np.diag(matrix) != 0.0):
            problems.append(f"trial {trial}: CD diagonal nonzero")
        if np.any(matrix < 0.0):
            problems.append(f"trial {trial}: CD negative")

        weights = rng.random(t) + 0.05
        fused_scores = fuse_scores(systems, weights)
        stacked = np.vstack([s.scores for s in systems])
        if np.any(fused_scores < stacked.min(axis=0) - 1e-12) or np.any(
            fused_scores > stacked.max(axis=0) + 1e-12
        ):
            problems.append(f"trial {trial}: fused scores left the convex envelope")

        positives = int(rng.integers(0, n + 1))
        fused_ranks = fuse_ranks(ranks, weights)
        rank_labels = labels_from_ranks(fused_ranks, positives)
        if int(rank_labels.sum()) != positives:
            problems.append(f"trial {trial}: top-P emitted {int(rank_labels.sum())}")

        # strictly increasing transform of one system's scores: same ranks,
        # same rank-fusion predictions under fixed weights
        victim = int(rng.integers(0, t))
        transformed = systems[victim].scores ** 3
        new_system = build_system(systems[victim].id, transformed)
        new_ranks = list(ranks)
        new_ranks[victim] = derive_rank(new_system)
        if not np.array_equal(new_ranks[victim], ranks[victim]):
            problems.append(f"trial {trial}: monotone transform changed ranks")
        new_fused = fuse_ranks(new_ranks, weights)
        if not np.array_equal(
            labels_from_ranks(new_fused, positives), rank_labels
        ):
            problems.append(f"trial {trial}: rank-fusion predictions not invariant")

        if problems:
            break

    ok = _report(
        f"invariant suite: CD symmetry/diagonal/sign, curve monotonicity, rank "
        f"bijection, exact top-P count, transform invariance, convex bounds "
        f"over {instances} random instances with n in [3, 200]",
        not problems,
    )
    assert ok, problems[:5]


def test_cli_determinism_byte_identical(tmp_path):
    systems, labels = make_random_instance(ACCEPTANCE_SEED, t=5, n=50, positives=25)
    scores_path = tmp_path / "scores.csv"
    scores_path.write_text(scores_csv_text(systems, labels), encoding="utf-8")

    runner = CliRunner()
    outputs = []
    for name in ("first.csv", "second.csv"):
        out = tmp_path / name
        result = runner.invoke(cli, ["fuse", str(scores_path), "--out", str(out)])
        assert result.exit_code == 0, result.output
        outputs.append(out.read_bytes())

    ok = _report(
        "determinism: two CLI runs on the same scores file emit byte-identical "
        "leaderboards",
        outputs[0] == outputs[1] and len(outputs[0]) > 0,
    )
    assert ok
