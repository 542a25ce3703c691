"""Plain-loop reference implementation used to cross-check the engine.

Everything in this module is written the slow, obvious way on purpose:
Python lists, explicit loops, no numpy, and no code shared with the
optimized modules. The selfcheck endpoint and the test suite compare engine
output against these routines value by value; keep the two code paths
independent.
"""

from __future__ import annotations

import itertools
import math


def ref_ranks(scores: list[float]) -> list[int]:
    """Rank 1..n by descending score, ties broken by ascending index."""
    n = len(scores)
    order = sorted(range(n), key=lambda d: (-scores[d], d))
    ranks = [0] * n
    for position, d in enumerate(order):
        ranks[d] = position + 1
    return ranks


def ref_rsc(scores: list[float]) -> list[float]:
    """Rank-score curve: the scores sorted in descending order."""
    return sorted(scores, reverse=True)


def ref_cognitive_diversity(curve_a: list[float], curve_b: list[float]) -> float:
    n = len(curve_a)
    total = 0.0
    for i in range(n):
        total += (curve_a[i] - curve_b[i]) ** 2
    return math.sqrt(total / (n - 2))


def ref_diversity_strengths(
    curves: dict[str, list[float]], subset: tuple[str, ...]
) -> list[float]:
    """Within-subset diversity strength of each member, in subset order."""
    strengths = []
    for a in subset:
        total = 0.0
        for b in subset:
            if b != a:
                total += ref_cognitive_diversity(curves[a], curves[b])
        strengths.append(total / (len(subset) - 1))
    return strengths


def ref_fuse_scores(score_vectors: list[list[float]], weights: list[float]) -> list[float]:
    # Equal weights cancel out of the weighted mean, so compute that case as
    # the plain average. Otherwise value ties that are exact in real
    # arithmetic pick up one-ulp noise and the index tie-break downstream
    # stops being reachable.
    if all(w == weights[0] for w in weights):
        weights = [1.0] * len(weights)
    n = len(score_vectors[0])
    weight_sum = 0.0
    for w in weights:
        weight_sum += w
    fused = []
    for d in range(n):
        numerator = 0.0
        for w, scores in zip(weights, score_vectors):
            numerator += w * scores[d]
        fused.append(numerator / weight_sum)
    return fused


def ref_fuse_ranks(
    rank_vectors: list[list[int]], weights: list[float], weight_mode: str = "inverse"
) -> list[float]:
    if weight_mode == "inverse":
        coefficients = [1.0 / w for w in weights]
    else:
        coefficients = list(weights)
    if all(c == coefficients[0] for c in coefficients):
        coefficients = [1.0] * len(coefficients)
    n = len(rank_vectors[0])
    coefficient_sum = 0.0
    for c in coefficients:
        coefficient_sum += c
    fused = []
    for d in range(n):
        numerator = 0.0
        for c, ranks in zip(coefficients, rank_vectors):
            numerator += c * ranks[d]
        fused.append(numerator / coefficient_sum)
    return fused


def ref_labels_from_scores(values: list[float], threshold: float = 0.5) -> list[int]:
    return [1 if v >= threshold else 0 for v in values]


def ref_labels_from_ranks(values: list[float], positives: int) -> list[int]:
    n = len(values)
    order = sorted(range(n), key=lambda d: (values[d], d))
    winners = set(order[:positives])
    return [1 if d in winners else 0 for d in range(n)]


def ref_accuracy(predictions: list[int], truth: list[int]) -> float:
    matches = 0
    for p, t in zip(predictions, truth):
        if p == t:
            matches += 1
    return matches / len(truth)


def reference_leaderboard(
    ids: list[str],
    score_vectors: list[list[float]],
    truth: list[int],
    rank_weight_mode: str = "inverse",
    threshold: float = 0.5,
    positives: int | None = None,
) -> dict[tuple[str, str, str], float]:
    """Accuracy of every single system and every fusion case, key by row.

    Keys are (label, fusion_type, weighting) with fusion_type "single" and
    weighting "" for the base systems. Mirrors the engine's degenerate-weight
    fallback (all-zero diversity strengths become equal weights) so the two
    are comparable on any input.
    """
    scores = {sid: list(vec) for sid, vec in zip(ids, score_vectors)}
    ranks = {sid: ref_ranks(scores[sid]) for sid in ids}
    curves = {sid: ref_rsc(scores[sid]) for sid in ids}
    p = sum(truth) if positives is None else positives

    board: dict[tuple[str, str, str], float] = {}
    for sid in ids:
        predictions = ref_labels_from_scores(scores[sid], threshold)
        board[(sid, "single", "")] = ref_accuracy(predictions, truth)

    ordered = sorted(ids)
    for k in range(2, len(ordered) + 1):
        for subset in itertools.combinations(ordered, k):
            label = "".join(subset) if all(len(s) == 1 for s in subset) else "+".join(subset)
            for weighting in ("AC", "WCDS"):
                if weighting == "AC":
                    weights = [1.0] * k
                else:
                    weights = ref_diversity_strengths(curves, subset)
                    if any(w == 0.0 for w in weights):
                        weights = [1.0] * k

                fused_scores = ref_fuse_scores([scores[s] for s in subset], weights)
                score_predictions = ref_labels_from_scores(fused_scores, threshold)
                board[(label, "score", weighting)] = ref_accuracy(score_predictions, truth)

                fused_ranks = ref_fuse_ranks(
                    [ranks[s] for s in subset], weights, rank_weight_mode
                )
                rank_predictions = ref_labels_from_ranks(fused_ranks, p)
                board[(label, "rank", weighting)] = ref_accuracy(rank_predictions, truth)
    return board
