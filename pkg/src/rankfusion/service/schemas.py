"""Pydantic request and response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class RunOptions(BaseModel):
    """Evaluation knobs accepted by the analysis endpoints."""

    normalize: bool = False
    rank_weight_mode: Literal["inverse", "direct"] = "inverse"
    threshold: float = Field(default=0.5, ge=0.0, le=1.0)
    positives: int | None = Field(default=None, ge=0)
    format: Literal["csv", "json"] = "csv"


class ScoresRequest(BaseModel):
    """A scores table as CSV text plus run options."""

    csv: str = Field(description="Scores table: header item_id,label,<system>,...")
    options: RunOptions = Field(default_factory=RunOptions)


class LeaderboardRow(BaseModel):
    case: str
    fusion_type: str
    weighting: str
    accuracy: float


class FuseResponse(BaseModel):
    rows: list[LeaderboardRow]
    content: str
    media_type: str
    warnings: list[str]


class DiversityResponse(BaseModel):
    systems: list[str]
    cd_matrix: list[list[float]]
    diversity_strength: list[float]
    content: str
    media_type: str
    warnings: list[str]


class RscResponse(BaseModel):
    systems: list[str]
    curves: dict[str, list[float]]
    content: str
    media_type: str
    warnings: list[str]


class SelfCheckRequest(BaseModel):
    seed: int | None = Field(default=None, ge=0)


class SelfCheckResult(BaseModel):
    name: str
    passed: bool
    detail: str


class SelfCheckResponse(BaseModel):
    seed: int
    passed: bool
    checks: list[SelfCheckResult]


class HealthResponse(BaseModel):
    status: str
    version: str
