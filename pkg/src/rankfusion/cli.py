"""Thin command-line client for the fusion service.

Every analysis command sends the scores file to the HTTP API and writes the
rendered response to a file or stdout. By default the requests run against
an in-process instance of the service (no server needed); ``--server`` points
them at a running deployment instead.

Exit codes: 0 success, 1 input contract violation, 2 internal failure.
"""

from __future__ import annotations

import asyncio
import sys
from pathlib import Path

import click
import httpx

from .service.app import app as _inprocess_app


@click.group()
@click.option(
    "--server",
    envvar="RANKFUSION_SERVER",
    default=None,
    metavar="URL",
    help="Base URL of a running service; default is an in-process instance.",
)
@click.version_option(package_name="rankfusion")
@click.pass_context
def cli(ctx: click.Context, server: str | None) -> None:
    """Fusion analysis of scoring systems: leaderboards, diversity, curves."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


async def _post_async(server: str | None, path: str, payload: dict) -> httpx.Response:
    if server:
        async with httpx.AsyncClient(base_url=server, timeout=120.0) as client:
            return await client.post(path, json=payload)
    transport = httpx.ASGITransport(app=_inprocess_app)
    async with httpx.AsyncClient(
        transport=transport, base_url="http://rankfusion.internal", timeout=120.0
    ) as client:
        return await client.post(path, json=payload)


def _post(server: str | None, path: str, payload: dict) -> dict:
    try:
        response = asyncio.run(_post_async(server, path, payload))
    except httpx.HTTPError as exc:
        click.echo(f"error: cannot reach service: {exc}", err=True)
        raise SystemExit(2)
    if response.status_code == 200:
        return response.json()
    detail = _error_detail(response)
    if response.status_code in (400, 422):
        click.echo(f"error: {detail}", err=True)
        raise SystemExit(1)
    click.echo(f"error: service returned {response.status_code}: {detail}", err=True)
    raise SystemExit(2)


def _error_detail(response: httpx.Response) -> str:
    try:
        detail = response.json().get("detail")
    except ValueError:
        return response.text
    if isinstance(detail, list):
        parts = []
        for item in detail:
            location = ".".join(str(p) for p in item.get("loc", ()))
            parts.append(f"{location}: {item.get('msg', '')}")
        return "; ".join(parts)
    return str(detail)


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8-sig")
    except OSError as exc:
        click.echo(f"error: cannot read {path}: {exc}", err=True)
        raise SystemExit(1)


def _deliver(payload: dict, out: Path | None) -> None:
    for message in payload.get("warnings", ()):
        click.echo(f"warning: {message}", err=True)
    data = payload["content"].encode("utf-8")
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        out.write_bytes(data)


_scores_argument = click.argument("scores", type=click.Path(path_type=Path))
_out_option = click.option(
    "--out", type=click.Path(dir_okay=False, path_type=Path), default=None,
    help="Output file; stdout when omitted.",
)
_format_option = click.option(
    "--format", "output_format", type=click.Choice(["csv", "json"]), default="csv",
    show_default=True, help="Serialization of the emitted result.",
)
_normalize_option = click.option(
    "--normalize", is_flag=True,
    help="Force min-max rescaling of every score column.",
)


@cli.command()
@_scores_argument
@_out_option
@_format_option
@click.option(
    "--rank-weight-mode", type=click.Choice(["inverse", "direct"]), default="inverse",
    show_default=True, help="Coefficient form for weighted rank fusion.",
)
@_normalize_option
@click.option(
    "--threshold", type=float, default=0.5, show_default=True,
    help="Score cutoff for positive predictions (boundary inclusive).",
)
@click.option(
    "--positives", type=int, default=None,
    help="Positive count for rank labeling; default is the ground-truth count.",
)
@click.pass_context
def fuse(
    ctx: click.Context,
    scores: Path,
    out: Path | None,
    output_format: str,
    rank_weight_mode: str,
    normalize: bool,
    threshold: float,
    positives: int | None,
) -> None:
    """Evaluate all single systems and fusion cases; emit the leaderboard."""
    payload = {
        "csv": _read_text(scores),
        "options": {
            "normalize": normalize,
            "rank_weight_mode": rank_weight_mode,
            "threshold": threshold,
            "positives": positives,
            "format": output_format,
        },
    }
    _deliver(_post(ctx.obj["server"], "/fuse", payload), out)


@cli.command()
@_scores_argument
@_out_option
@_format_option
@_normalize_option
@click.pass_context
def diversity(
    ctx: click.Context, scores: Path, out: Path | None, output_format: str, normalize: bool
) -> None:
    """Pairwise cognitive diversity and per-system diversity strength."""
    payload = {
        "csv": _read_text(scores),
        "options": {"normalize": normalize, "format": output_format},
    }
    _deliver(_post(ctx.obj["server"], "/diversity", payload), out)


@cli.command()
@_scores_argument
@_out_option
@_normalize_option
@click.pass_context
def rsc(ctx: click.Context, scores: Path, out: Path | None, normalize: bool) -> None:
    """Rank-score curves of every system as long-format CSV."""
    payload = {"csv": _read_text(scores), "options": {"normalize": normalize}}
    _deliver(_post(ctx.obj["server"], "/rsc", payload), out)


@cli.command()
@click.option("--seed", type=int, default=None, help="Seed for the random instance.")
@click.pass_context
def selfcheck(ctx: click.Context, seed: int | None) -> None:
    """Cross-check the engine against its plain-loop reference oracle."""
    payload = {"seed": seed} if seed is not None else {}
    result = _post(ctx.obj["server"], "/selfcheck", payload)
    click.echo(f"selfcheck seed={result['seed']}")
    for check in result["checks"]:
        status = "PASS" if check["passed"] else "FAIL"
        suffix = "" if check["passed"] else f": {check['detail']}"
        click.echo(f"{status} {check['name']}{suffix}")
    if not result["passed"]:
        raise SystemExit(2)


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host: str, port: int) -> None:
    """Run the HTTP service with uvicorn."""
    import uvicorn

    uvicorn.run("rankfusion.service.app:app", host=host, port=port)


def main(argv: list[str] | None = None) -> None:
    try:
        cli.main(args=argv, prog_name="rankfusion", standalone_mode=False)
    except click.exceptions.Exit as exc:
        raise SystemExit(exc.exit_code)
    except click.Abort:
        raise SystemExit(1)
    except click.ClickException as exc:
        exc.show()
        raise SystemExit(1)
    except SystemExit:
        raise
    except Exception as exc:
        click.echo(f"internal error: {exc}", err=True)
        raise SystemExit(2)


if __name__ == "__main__":
    main()
