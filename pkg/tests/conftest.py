import io

import numpy as np
import pytest

from rankfusion.scoring import ScoringSystem, build_system


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def make_systems(seed: int, t: int = 5, n: int = 50) -> list[ScoringSystem]:
    rng = np.random.default_rng(seed)
    ids = [chr(ord("A") + i) for i in range(t)]
    return [build_system(sid, row) for sid, row in zip(ids, rng.random((t, n)))]


def make_labels(seed: int, n: int, positives: int) -> np.ndarray:
    rng = np.random.default_rng(seed + 1)
    labels = np.zeros(n, dtype=np.int64)
    labels[rng.permutation(n)[:positives]] = 1
    return labels


def scores_csv_text(systems, labels) -> str:
    buffer = io.StringIO()
    ids = [s.id for s in systems]
    buffer.write("item_id,label," + ",".join(ids) + "\n")
    for d in range(len(labels)):
        cells = [f"d{d}", str(int(labels[d]))]
        cells.extend(repr(float(s.scores[d])) for s in systems)
        buffer.write(",".join(cells) + "\n")
    return buffer.getvalue()


@pytest.fixture
def demo_csv_text():
    systems = make_systems(7, t=3, n=12)
    labels = make_labels(7, n=12, positives=6)
    return scores_csv_text(systems, labels)
