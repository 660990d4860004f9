"""Command-line entry points: amrs ingest | score | evaluate | serve."""

from __future__ import annotations

import sys
from typing import Optional

import click

from .errors import AmrsError
from .pipeline import EVALUATION_MODES, run_evaluate, run_ingest, run_score


def _load(config_path: str, seed: Optional[int], tickers: Optional[str],
          threshold: Optional[float]):
    from .config import load_config
    ticker_tuple = tuple(t.strip() for t in tickers.split(",")) if tickers else None
    return load_config(config_path, seed=seed, tickers=ticker_tuple,
                       threshold=threshold)


config_option = click.option("--config", "config_path", required=True,
                             type=click.Path(exists=True, dir_okay=False),
                             help="Run configuration YAML.")
seed_option = click.option("--seed", type=int, default=None,
                           help="Override the configured seed.")
tickers_option = click.option("--tickers", type=str, default=None,
                              help="Comma-separated ticker subset.")
threshold_option = click.option("--threshold", type=float, default=None,
                                help="Override the operating threshold.")


@click.group()
def main() -> None:
    """Manipulation-risk scoring pipeline."""


@main.command()
@config_option
@seed_option
@tickers_option
@threshold_option
def ingest(config_path: str, seed: Optional[int], tickers: Optional[str],
           threshold: Optional[float]) -> None:
    """Load OHLCV files, generate the social corpus, persist raw stages."""
    try:
        config = _load(config_path, seed, tickers, threshold)
        counts = run_ingest(config)
    except AmrsError as exc:
        raise click.ClickException(str(exc)) from exc
    for ticker, info in counts.items():
        click.echo(f"{ticker}: {info['bars']} bars, {info['posts']} posts, "
                   f"{info['authors']} authors")


@main.command()
@config_option
@seed_option
@tickers_option
@threshold_option
def score(config_path: str, seed: Optional[int], tickers: Optional[str],
          threshold: Optional[float]) -> None:
    """Fuse social and market stages and compute scored windows."""
    try:
        config = _load(config_path, seed, tickers, threshold)
        summaries = run_score(config)
    except AmrsError as exc:
        raise click.ClickException(str(exc)) from exc
    for ticker, info in summaries.items():
        suspicious = info["suspicious"]
        shown = ", ".join(suspicious[:8]) + (" ..." if len(suspicious) > 8 else "")
        click.echo(f"{ticker}: {info['days']} days scored, max risk "
                   f"{info['max_risk']:.3f}, {len(suspicious)} suspicious"
                   + (f" [{shown}]" if suspicious else ""))


@main.command()
@click.argument("mode", type=click.Choice(EVALUATION_MODES))
@config_option
@seed_option
@tickers_option
@threshold_option
def evaluate(mode: str, config_path: str, seed: Optional[int],
             tickers: Optional[str], threshold: Optional[float]) -> None:
    """Run one evaluation mode and write its report CSVs."""
    try:
        config = _load(config_path, seed, tickers, threshold)
        paths, summary = run_evaluate(config, mode)
    except AmrsError as exc:
        raise click.ClickException(str(exc)) from exc
    click.echo(summary)
    for path in paths:
        click.echo(f"wrote {path}")


@main.command()
@config_option
@seed_option
@tickers_option
@threshold_option
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", type=str, default="127.0.0.1", show_default=True)
def serve(config_path: str, seed: Optional[int], tickers: Optional[str],
          threshold: Optional[float], port: int, host: str) -> None:
    """Serve scored data over the read-only JSON API."""
    from pathlib import Path

    import uvicorn

    from .api import create_app
    dist = Path.cwd() / "frontend" / "dist"
    try:
        config = _load(config_path, seed, tickers, threshold)
        app = create_app(config, frontend_dir=dist if dist.is_dir() else None)
    except AmrsError as exc:
        raise click.ClickException(str(exc)) from exc
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    sys.exit(main())
