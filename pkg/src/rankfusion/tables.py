"""Scores-table ingestion and result serialization.

The scores table is a UTF-8 CSV with header ``item_id,label,<sys1>,<sys2>,...``
and one row per instance: an item id, a ground-truth label in {0, 1}, and one
finite score per system. Lines starting with '#' are metadata comments and
are skipped. Row numbers in error messages refer to line numbers in the file.
"""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .evaluation import Leaderboard
from .scoring import ScoringSystem, build_system

REQUIRED_COLUMNS = ("item_id", "label")


def parse_scores_csv(text: str, normalize: bool = False):
    """Parse the scores-table contract from CSV text.

    Returns ``(systems, labels)`` with the systems in header order and labels
    as an int array. Malformed input raises ValueError naming the offending
    line and column.
    """
    header: list[str] | None = None
    header_line = 0
    item_ids: list[str] = []
    labels: list[int] = []
    columns: list[list[float]] = []

    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.startswith("#"):
            continue
        if header is None and not line.strip():
            continue
        row = next(csv.reader([line]), [])
        if header is None:
            header = [cell.strip() for cell in row]
            header_line = lineno
            _check_header(header)
            columns = [[] for _ in header[2:]]
            continue
        if len(row) != len(header):
            raise ValueError(
                f"row {lineno}: expected {len(header)} columns, found {len(row)}"
            )
        item_ids.append(row[0])
        labels.append(_parse_label(row[1], lineno))
        for position, cell in enumerate(row[2:]):
            columns[position].append(_parse_score(cell, lineno, header[2 + position]))

    if header is None:
        raise ValueError("no header row found; expected 'item_id,label,<system>,...'")
    if not labels:
        raise ValueError(f"no data rows after the header at line {header_line}")

    systems = [
        build_system(system_id, values, normalize=normalize)
        for system_id, values in zip(header[2:], columns)
    ]
    return systems, np.asarray(labels, dtype=np.int64)


def load_scores(path, normalize: bool = False):
    """Read and parse a scores-table CSV file. See ``parse_scores_csv``."""
    text = Path(path).read_text(encoding="utf-8-sig")
    return parse_scores_csv(text, normalize=normalize)


def _check_header(header: list[str]) -> None:
    if tuple(header[:2]) != REQUIRED_COLUMNS:
        raise ValueError(
            f"header must start with {','.join(REQUIRED_COLUMNS)}; got {header[:2]}"
        )
    system_ids = header[2:]
    if not system_ids:
        raise ValueError("header names no score columns after item_id,label")
    if any(not sid for sid in system_ids):
        raise ValueError("header has an empty system column name")
    if len(set(system_ids)) != len(system_ids):
        duplicates = sorted({s for s in system_ids if system_ids.count(s) > 1})
        raise ValueError(f"duplicate system columns in header: {duplicates}")


def _parse_label(cell: str, lineno: int) -> int:
    value = cell.strip()
    if value not in ("0", "1"):
        raise ValueError(f"row {lineno}: label must be 0 or 1, got {cell!r}")
    return int(value)


def _parse_score(cell: str, lineno: int, column: str) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise ValueError(
            f"row {lineno}, column {column!r}: score is not a number: {cell!r}"
        ) from None
    if not math.isfinite(value):
        raise ValueError(
            f"row {lineno}, column {column!r}: score is not finite: {cell!r}"
        )
    return value


def _csv_bytes(header: Sequence[str], rows) -> bytes:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().encode("utf-8")


def emit_leaderboard(leaderboard: Leaderboard, output_format: str = "csv") -> bytes:
    """Serialize leaderboard rows with accuracies at 4 decimal places."""
    if output_format == "csv":
        return _csv_bytes(
            ("case", "fusion_type", "weighting", "accuracy"),
            (
                (r.label, r.fusion_type, r.weighting, f"{r.accuracy:.4f}")
                for r in leaderboard
            ),
        )
    if output_format == "json":
        payload = [
            {
                "case": r.label,
                "fusion_type": r.fusion_type,
                "weighting": r.weighting,
                "accuracy": round(r.accuracy, 4),
            }
            for r in leaderboard
        ]
        return (json.dumps(payload, indent=2) + "\n").encode("utf-8")
    raise ValueError(f"unknown output format: {output_format!r}")


def emit_rsc(curves: Mapping[str, np.ndarray]) -> bytes:
    """Long-format CSV of rank-score curves: system, rank_position, score.

    Scores are printed with full round-trip precision so downstream plotting
    or re-parsing reproduces the exact values.
    """
    rows = []
    for system_id, curve in curves.items():
        for position, value in enumerate(np.asarray(curve, dtype=float), start=1):
            rows.append((system_id, position, repr(float(value))))
    return _csv_bytes(("system", "rank_position", "normalized_score"), rows)


def emit_diversity_report(
    system_ids: Sequence[str],
    matrix: np.ndarray,
    strengths: np.ndarray,
    output_format: str = "csv",
) -> bytes:
    """Pairwise diversity matrix plus per-system diversity strength."""
    matrix = np.asarray(matrix, dtype=float)
    strengths = np.asarray(strengths, dtype=float)
    if output_format == "csv":
        header = ("system", "diversity_strength", *system_ids)
        rows = (
            (
                sid,
                repr(float(strengths[i])),
                *(repr(float(matrix[i, j])) for j in range(len(system_ids))),
            )
            for i, sid in enumerate(system_ids)
        )
        return _csv_bytes(header, rows)
    if output_format == "json":
        payload = {
            "systems": list(system_ids),
            "diversity_strength": [float(v) for v in strengths],
            "cd_matrix": [[float(v) for v in row] for row in matrix],
        }
        return (json.dumps(payload, indent=2) + "\n").encode("utf-8")
    raise ValueError(f"unknown output format: {output_format!r}")
