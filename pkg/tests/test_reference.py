"""The plain-loop oracle must itself reproduce the worked examples."""

import math

import pytest

from rankfusion.reference import (
    ref_accuracy,
    ref_cognitive_diversity,
    ref_diversity_strengths,
    ref_fuse_ranks,
    ref_fuse_scores,
    ref_labels_from_ranks,
    ref_labels_from_scores,
    ref_ranks,
    ref_rsc,
)


def test_ranks_and_curve():
    assert ref_ranks([0.9, 0.1, 0.5]) == [1, 3, 2]
    assert ref_ranks([0.5, 0.5, 0.5]) == [1, 2, 3]
    assert ref_ranks([0.3, 0.8, 0.8, 0.1]) == [3, 1, 2, 4]
    assert ref_rsc([0.4, 0.4, 0.8, 0.0]) == [0.8, 0.4, 0.4, 0.0]


def test_cognitive_diversity_example():
    value = ref_cognitive_diversity([0.9, 0.7, 0.4, 0.1, 0.0], [0.8, 0.8, 0.5, 0.3, 0.2])
    assert value == pytest.approx(math.sqrt(0.11 / 3), abs=1e-12)


def test_diversity_strengths():
    curves = {"A": [1.0, 0.4, 0.0], "B": [0.9, 0.5, 0.1], "C": [0.7, 0.6, 0.3]}
    strengths = ref_diversity_strengths(curves, ("A", "B"))
    assert strengths[0] == strengths[1] == ref_cognitive_diversity(curves["A"], curves["B"])


def test_fusion_and_labels():
    assert ref_fuse_scores([[0.4], [0.8]], [1.0, 1.0])[0] == pytest.approx(0.6, abs=1e-12)
    assert ref_fuse_scores([[0.9], [0.3], [0.6]], [1.0, 2.0, 3.0])[0] == pytest.approx(0.55)
    assert ref_fuse_ranks([[2], [5]], [0.25, 0.5])[0] == 3.0
    assert ref_labels_from_scores([0.49, 0.51, 0.50, 0.2]) == [0, 1, 1, 0]
    assert ref_labels_from_ranks([2.0, 2.0, 2.0, 5.0], 2) == [1, 1, 0, 0]
    assert ref_accuracy([1, 0, 1], [1, 1, 1]) == pytest.approx(2 / 3)
