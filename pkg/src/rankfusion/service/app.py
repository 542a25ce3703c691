"""FastAPI application exposing the fusion engine.

Endpoints accept a scores table as CSV text and return both structured
results and the rendered file content, so a thin client can write the bytes
straight to disk. Input contract violations map to HTTP 400; anything else
that escapes is a 500.
"""

from __future__ import annotations

import warnings
from contextlib import contextmanager

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..config import RunConfig
from ..diversity import cd_matrix, diversity_strength
from ..evaluation import run_all
from ..scoring import derive_rank, rsc_curve
from ..selfcheck import run_selfcheck
from ..tables import emit_diversity_report, emit_leaderboard, emit_rsc, parse_scores_csv
from .schemas import (
    DiversityResponse,
    FuseResponse,
    HealthResponse,
    LeaderboardRow,
    RscResponse,
    RunOptions,
    ScoresRequest,
    SelfCheckRequest,
    SelfCheckResponse,
    SelfCheckResult,
)

MEDIA_TYPES = {"csv": "text/csv", "json": "application/json"}


@contextmanager
def _collect_warnings(into: list[str]):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        yield
    into.extend(str(w.message) for w in caught)


def _run_config(options: RunOptions) -> RunConfig:
    return RunConfig(
        normalize=options.normalize,
        rank_weight_mode=options.rank_weight_mode,
        threshold=options.threshold,
        positives=options.positives,
        output_format=options.format,
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="rankfusion",
        version=__version__,
        description=(
            "Fusion analysis for multiple scoring systems: rank-score curves, "
            "cognitive diversity, and exhaustive score/rank ensemble leaderboards."
        ),
    )

    @app.exception_handler(ValueError)
    async def _contract_violation(request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/fuse", response_model=FuseResponse)
    def fuse(request: ScoresRequest) -> FuseResponse:
        """Evaluate all single systems and fusion cases; return the leaderboard."""
        collected: list[str] = []
        config = _run_config(request.options)
        with _collect_warnings(collected):
            systems, labels = parse_scores_csv(request.csv, normalize=config.normalize)
            leaderboard = run_all(systems, labels, config)
            content = emit_leaderboard(leaderboard, config.output_format)
        return FuseResponse(
            rows=[
                LeaderboardRow(
                    case=row.label,
                    fusion_type=row.fusion_type,
                    weighting=row.weighting,
                    accuracy=row.accuracy,
                )
                for row in leaderboard
            ],
            content=content.decode("utf-8"),
            media_type=MEDIA_TYPES[config.output_format],
            warnings=collected,
        )

    @app.post("/diversity", response_model=DiversityResponse)
    def diversity(request: ScoresRequest) -> DiversityResponse:
        """Pairwise cognitive diversity and per-system diversity strength."""
        collected: list[str] = []
        config = _run_config(request.options)
        with _collect_warnings(collected):
            systems, _ = parse_scores_csv(request.csv, normalize=config.normalize)
            curves = [rsc_curve(s, derive_rank(s)) for s in systems]
            matrix = cd_matrix(curves)
            strengths = diversity_strength(matrix, range(len(systems)))
            ids = [s.id for s in systems]
            content = emit_diversity_report(ids, matrix, strengths, config.output_format)
        return DiversityResponse(
            systems=ids,
            cd_matrix=[[float(v) for v in row] for row in matrix],
            diversity_strength=[float(v) for v in strengths],
            content=content.decode("utf-8"),
            media_type=MEDIA_TYPES[config.output_format],
            warnings=collected,
        )

    @app.post("/rsc", response_model=RscResponse)
    def rsc(request: ScoresRequest) -> RscResponse:
        """Rank-score curves of every system, as long-format plot data."""
        collected: list[str] = []
        config = _run_config(request.options)
        with _collect_warnings(collected):
            systems, _ = parse_scores_csv(request.csv, normalize=config.normalize)
            curves = {s.id: rsc_curve(s, derive_rank(s)) for s in systems}
            content = emit_rsc(curves)
        return RscResponse(
            systems=[s.id for s in systems],
            curves={sid: curve.tolist() for sid, curve in curves.items()},
            content=content.decode("utf-8"),
            media_type=MEDIA_TYPES["csv"],
            warnings=collected,
        )

    @app.post("/selfcheck", response_model=SelfCheckResponse)
    def selfcheck(request: SelfCheckRequest) -> SelfCheckResponse:
        """Cross-check the engine against the plain-loop reference oracle."""
        report = run_selfcheck(seed=request.seed)
        return SelfCheckResponse(
            seed=report.seed,
            passed=report.passed,
            checks=[
                SelfCheckResult(name=c.name, passed=c.passed, detail=c.detail)
                for c in report.checks
            ],
        )

    return app


app = create_app()
