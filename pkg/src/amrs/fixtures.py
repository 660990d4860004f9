"""Deterministic demo inputs: synthetic OHLCV files, labels and a run config.

Eight tickers from October 2020 through June 2021 with three engineered
manipulation episodes (GME and BB in late January, AMC in early June), each
pairing a social campaign window with a later market spike, plus thirty
matched calm ticker-days labeled as negative controls. Everything derives
from one seed so the whole corpus is reproducible byte-for-byte.
"""

from __future__ import annotations

import zlib
from datetime import date, timedelta
from pathlib import Path

import numpy as np
import yaml

from .ingest import write_ground_truth_csv, write_ohlcv_csv
from .types import Confidence, GroundTruthLabel, LabelSource, ManipulationType, OhlcvBar

DEMO_START = date(2020, 10, 1)
DEMO_END = date(2021, 6, 30)
DEMO_TICKERS = ("AAPL", "AMC", "AMZN", "BB", "GME", "GOOGL", "MSFT", "TSLA")

# (start, end, volume multiplier, extra daily drift)
_MARKET_SPIKES: dict[str, tuple[tuple[str, str, float, float], ...]] = {
    "GME": (("2021-01-20", "2021-01-27", 6.0, 0.14),
            ("2021-01-28", "2021-02-04", 8.0, -0.12),
            ("2021-02-05", "2021-02-11", 3.0, -0.04)),
    "BB": (("2021-01-20", "2021-01-26", 4.0, 0.10),
           ("2021-01-27", "2021-01-29", 6.0, -0.08)),
    "AMC": (("2021-05-26", "2021-06-02", 6.0, 0.12),
            ("2021-06-03", "2021-06-08", 5.0, -0.08)),
}

_MARKET_PARAMS: dict[str, tuple[float, float, float]] = {
    # start price, daily volatility, base share volume
    "AAPL": (115.0, 0.015, 90_000_000),
    "AMC": (8.0, 0.030, 50_000_000),
    "AMZN": (3200.0, 0.017, 3_500_000),
    "BB": (7.0, 0.028, 25_000_000),
    "GME": (13.0, 0.032, 7_000_000),
    "GOOGL": (1450.0, 0.016, 1_500_000),
    "MSFT": (205.0, 0.014, 30_000_000),
    "TSLA": (420.0, 0.030, 50_000_000),
}

def _burst(start: str, end: str) -> dict:
    """Short organic hype flare: keeps the expanding percentiles honest so the
    January campaigns do not normalize against a pristine baseline."""
    return {"start": start, "end": end, "volume_multiplier": 2.8,
            "template_fraction": 0.50, "bot_author_fraction": 0.45,
            "sentiment_shift": 0.30}


_SCENARIOS: dict[str, dict] = {
    "AAPL": {"base_posts_per_day": 35},
    "AMZN": {"base_posts_per_day": 22},
    "GOOGL": {"base_posts_per_day": 18},
    "MSFT": {"base_posts_per_day": 20},
    "TSLA": {"base_posts_per_day": 40},
    "GME": {
        "base_posts_per_day": 30,
        "events": [
            _burst("2020-10-13", "2020-10-14"), _burst("2020-10-27", "2020-10-27"),
            _burst("2020-11-05", "2020-11-06"), _burst("2020-11-17", "2020-11-17"),
            _burst("2020-12-01", "2020-12-02"), _burst("2020-12-15", "2020-12-16"),
            _burst("2020-12-28", "2020-12-28"),
            # build-up: the campaign floods volume while bots/templates stay
            # near flare intensity, then tapers as the price action peaks
            {"start": "2021-01-04", "end": "2021-01-21", "volume_multiplier": 4.0,
             "template_fraction": 0.32, "bot_author_fraction": 0.28,
             "sentiment_shift": 0.25},
            {"start": "2021-01-22", "end": "2021-02-03", "volume_multiplier": 3.0,
             "template_fraction": 0.30, "bot_author_fraction": 0.26,
             "sentiment_shift": 0.18},
        ],
    },
    "BB": {
        "base_posts_per_day": 18,
        "events": [
            _burst("2020-10-20", "2020-10-21"), _burst("2020-11-11", "2020-11-12"),
            _burst("2020-12-08", "2020-12-09"), _burst("2020-12-29", "2020-12-29"),
            {"start": "2021-01-11", "end": "2021-01-22", "volume_multiplier": 4.0,
             "template_fraction": 0.35, "bot_author_fraction": 0.30,
             "sentiment_shift": 0.25},
            {"start": "2021-01-23", "end": "2021-02-01", "volume_multiplier": 2.5,
             "template_fraction": 0.25, "bot_author_fraction": 0.20,
             "sentiment_shift": 0.15},
        ],
    },
    "AMC": {
        "base_posts_per_day": 25,
        "events": [
            _burst("2020-11-10", "2020-11-11"), _burst("2020-12-10", "2020-12-11"),
            _burst("2021-01-26", "2021-01-27"), _burst("2021-03-09", "2021-03-10"),
            _burst("2021-04-13", "2021-04-14"),
            {"start": "2021-05-13", "end": "2021-05-28", "volume_multiplier": 4.5,
             "template_fraction": 0.35, "bot_author_fraction": 0.30,
             "sentiment_shift": 0.25},
            {"start": "2021-05-29", "end": "2021-06-08", "volume_multiplier": 2.5,
             "template_fraction": 0.25, "bot_author_fraction": 0.20,
             "sentiment_shift": 0.15},
        ],
    },
}

_POSITIVES = (
    ("GME", "2021-01-27", ManipulationType.COORDINATED_TRADING, Confidence.HIGH,
     LabelSource.COMMUNITY),
    ("BB", "2021-01-27", ManipulationType.PUMP_AND_DUMP, Confidence.MEDIUM,
     LabelSource.SEC),
    ("AMC", "2021-06-02", ManipulationType.COORDINATED_TRADING, Confidence.HIGH,
     LabelSource.COMMUNITY),
)

_NEGATIVES = (
    ("AAPL", "2020-12-08"), ("AAPL", "2021-02-16"), ("AAPL", "2021-04-20"),
    ("AAPL", "2021-06-15"),
    ("MSFT", "2020-12-15"), ("MSFT", "2021-02-10"), ("MSFT", "2021-04-14"),
    ("MSFT", "2021-05-19"),
    ("GOOGL", "2020-11-24"), ("GOOGL", "2021-01-20"), ("GOOGL", "2021-03-17"),
    ("GOOGL", "2021-05-12"),
    ("AMZN", "2020-12-02"), ("AMZN", "2021-02-24"), ("AMZN", "2021-04-07"),
    ("AMZN", "2021-06-09"),
    ("TSLA", "2020-11-18"), ("TSLA", "2021-01-06"), ("TSLA", "2021-03-10"),
    ("TSLA", "2021-05-26"),
    ("GME", "2020-11-10"), ("GME", "2020-12-09"), ("GME", "2021-04-21"),
    ("GME", "2021-05-25"),
    ("AMC", "2020-11-12"), ("AMC", "2020-12-16"), ("AMC", "2021-03-24"),
    ("BB", "2020-11-05"), ("BB", "2020-12-22"), ("BB", "2021-03-03"),
)


def weekdays(start: date, end: date) -> list[date]:
    days = []
    day = start
    while day <= end:
        if day.weekday() < 5:
            days.append(day)
        day += timedelta(days=1)
    return days


def _spike_for(ticker: str, day: date) -> tuple[float, float]:
    for start, end, mult, drift in _MARKET_SPIKES.get(ticker, ()):
        if date.fromisoformat(start) <= day <= date.fromisoformat(end):
            return mult, drift
    return 1.0, 0.0


def demo_market_bars(ticker: str, seed: int = 42,
                     start: date = DEMO_START, end: date = DEMO_END) -> list[OhlcvBar]:
    """Geometric price walk with engineered volume/price spikes per ticker."""
    start_price, vol, base_volume = _MARKET_PARAMS[ticker]
    rng = np.random.default_rng([seed, zlib.crc32(ticker.encode()), 7])
    bars: list[OhlcvBar] = []
    close = start_price
    for day in weekdays(start, end):
        mult, drift = _spike_for(ticker, day)
        prev_close = close
        close = prev_close * float(np.exp(drift + vol * rng.standard_normal()))
        open_ = prev_close * float(1.0 + 0.3 * vol * rng.standard_normal())
        span = abs(0.5 * vol * float(rng.standard_normal()))
        high = max(open_, close) * (1.0 + span)
        low = min(open_, close) * (1.0 - span)
        # sporadic flow spikes keep ordinary volume days from normalizing high
        noise = 1.0 if rng.random() >= 0.03 else float(rng.uniform(2.5, 4.0))
        volume = int(base_volume * mult * noise
                     * float(np.exp(0.25 * rng.standard_normal())))
        bar = OhlcvBar(ticker=ticker, date=day, open=open_, high=high, low=low,
                       close=close, adj_close=close, volume=volume)
        bar.validate()
        bars.append(bar)
    return bars


def demo_ground_truth() -> list[GroundTruthLabel]:
    labels = [GroundTruthLabel(ticker=t, date=date.fromisoformat(d), label=1,
                               manipulation_type=mtype, confidence=conf, source=src)
              for t, d, mtype, conf, src in _POSITIVES]
    labels += [GroundTruthLabel(ticker=t, date=date.fromisoformat(d), label=0,
                                manipulation_type=ManipulationType.NORMAL,
                                confidence=Confidence.HIGH,
                                source=LabelSource.SYNTHETIC_NEGATIVE)
               for t, d in _NEGATIVES]
    return sorted(labels, key=lambda l: (l.ticker, l.date))


def demo_config_dict(seed: int = 42) -> dict:
    return {
        "model_version": "amrs-demo-2.0",
        "seed": seed,
        "data_root": ".",
        "tickers": list(DEMO_TICKERS),
        "date_range": {"start": DEMO_START.isoformat(), "end": DEMO_END.isoformat()},
        "weights": {"vol": 0.25, "sent": 0.15, "bot": 0.20, "coord": 0.20, "mkt": 0.20},
        "thresholds": {"operating": 0.5, "alert": 0.55, "prospective": 0.5},
        "evaluation": {"ablation_ticker": "GME",
                       "ablation_start": "2021-01-04", "ablation_end": "2021-02-05",
                       "sensitivity_ticker": "GME", "lead_time_lookback": 45,
                       "sweep_thresholds": [0.2, 0.3, 0.4, 0.5, 0.6, 0.7]},
        "scenarios": _SCENARIOS,
    }


def write_demo_inputs(root: Path | str, seed: int = 42) -> Path:
    """Materialize raw inputs plus a ready-to-run config; returns the config path."""
    root = Path(root)
    for ticker in DEMO_TICKERS:
        write_ohlcv_csv(root / "raw" / "ohlcv" / f"{ticker}.csv",
                        demo_market_bars(ticker, seed))
    write_ground_truth_csv(root / "raw" / "ground_truth.csv", demo_ground_truth())
    config_path = root / "config.yaml"
    config_path.write_text(
        yaml.safe_dump(demo_config_dict(seed), sort_keys=True,
                       default_flow_style=False),
        encoding="utf-8")
    return config_path
