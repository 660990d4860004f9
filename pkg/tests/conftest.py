"""Shared fixtures: one full demo pipeline run per session plus row factories."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date, datetime, time, timedelta, timezone
from pathlib import Path

import pytest

from amrs.config import RunConfig, load_config
from amrs.fixtures import write_demo_inputs
from amrs.ingest import load_ground_truth
from amrs.pipeline import run_ingest, run_score
from amrs.store import ColumnStore
from amrs.types import FusedWindow, GroundTruthLabel, PostRecord


@dataclass(frozen=True)
class DemoRun:
    root: Path
    config: RunConfig
    store: ColumnStore
    labels: tuple[GroundTruthLabel, ...]


@pytest.fixture(scope="session")
def demo_run(tmp_path_factory: pytest.TempPathFactory) -> DemoRun:
    """Seed-42 demo corpus, ingested and scored once for the whole session."""
    root = tmp_path_factory.mktemp("demo")
    config = load_config(write_demo_inputs(root, seed=42))
    run_ingest(config)
    run_score(config)
    return DemoRun(root=root, config=config,
                   store=ColumnStore(config.processed_root),
                   labels=tuple(load_ground_truth(config.ground_truth_path)))


def make_post(post_id: str, text: str, *, ticker: str = "XYZ",
              author_id: str = "author_1", day: date = date(2021, 3, 1),
              hour: int = 12, lexicon_sentiment: float | None = 0.0,
              aux_sentiment: float | None = None,
              subreddit: str = "wallstreetbets") -> PostRecord:
    return PostRecord(post_id=post_id, ticker=ticker,
                      timestamp=datetime.combine(day, time(hour, 0),
                                                 tzinfo=timezone.utc),
                      author_id=author_id, subreddit=subreddit, text=text,
                      lexicon_sentiment=lexicon_sentiment,
                      aux_sentiment=aux_sentiment)


def make_fused(ticker: str, day: date, *, social_volume: int = 0,
               avg_sentiment: float = 0.0, unique_authors: int = 0,
               avg_bot_score: float = 0.0, bot_heavy_post_ratio: float = 0.0,
               coordination_score: float = 0.0, close: float = 100.0,
               volume: int = 1_000_000, daily_return: float = 0.0,
               volume_zscore: float = 0.0) -> FusedWindow:
    return FusedWindow(
        ticker=ticker, date=day, social_volume=social_volume,
        avg_sentiment=avg_sentiment, unique_authors=unique_authors,
        avg_bot_score=avg_bot_score, bot_heavy_post_ratio=bot_heavy_post_ratio,
        coordination_score=coordination_score,
        open=close, high=close * 1.01, low=close * 0.99, close=close,
        adj_close=close, volume=volume, daily_return=daily_return,
        volume_mean=float(volume), volume_std=0.0, volume_zscore=volume_zscore,
        is_volume_anomaly=volume_zscore >= 2.0)


def fused_series(ticker: str, start: date, values: list[dict]) -> list[FusedWindow]:
    """Consecutive weekday rows built from per-day keyword overrides."""
    rows = []
    day = start
    for overrides in values:
        while day.weekday() >= 5:
            day += timedelta(days=1)
        rows.append(make_fused(ticker, day, **overrides))
        day += timedelta(days=1)
    return rows
