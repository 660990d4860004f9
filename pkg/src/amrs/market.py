"""Daily returns, trailing volume statistics and the volume-anomaly flag."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import NonPositivePrice
from .types import DailyMarketFeatures, OhlcvBar

VOLUME_ANOMALY_ZSCORE = 2.0


@dataclass(frozen=True, slots=True)
class RollingParams:
    window: int = 20        # trailing trading days, inclusive of day t
    min_periods: int = 5

    def __post_init__(self) -> None:
        if not 1 <= self.min_periods <= self.window:
            raise ValueError("need 1 <= min_periods <= window")


def compute_return(prev_close: float, close: float) -> float:
    if prev_close <= 0:
        raise NonPositivePrice(f"prev_close must be > 0, got {prev_close}")
    return (close - prev_close) / prev_close


def rolling_volume_stats(volumes: Sequence[float],
                         params: RollingParams = RollingParams(),
                         ) -> list[tuple[float, float, float]]:
    """Per-day (mean, std, zscore) over the trailing window ending at day t.

    Population std. Days with fewer than min_periods observations, or zero
    std, get zscore 0 so downstream normalization stays total.
    """
    out: list[tuple[float, float, float]] = []
    for t in range(len(volumes)):
        lo = max(0, t + 1 - params.window)
        window = volumes[lo:t + 1]
        n = len(window)
        mean = sum(window) / n
        std = math.sqrt(sum((v - mean) ** 2 for v in window) / n)
        if n < params.min_periods or std == 0.0:
            z = 0.0
        else:
            z = (volumes[t] - mean) / std
        out.append((mean, std, z))
    return out


def market_feature_table(bars: Sequence[OhlcvBar],
                         params: RollingParams = RollingParams(),
                         ) -> list[DailyMarketFeatures]:
    """One DailyMarketFeatures row per bar, in date order.

    The first day's return is 0 by convention; is_volume_anomaly is exactly
    volume_zscore >= 2.0.
    """
    if not bars:
        raise ValueError("bars must be non-empty")
    stats = rolling_volume_stats([b.volume for b in bars], params)
    rows: list[DailyMarketFeatures] = []
    prev_close: float | None = None
    for bar, (mean, std, z) in zip(bars, stats):
        ret = 0.0 if prev_close is None else compute_return(prev_close, bar.close)
        rows.append(DailyMarketFeatures(
            ticker=bar.ticker, date=bar.date,
            open=bar.open, high=bar.high, low=bar.low, close=bar.close,
            adj_close=bar.adj_close, volume=bar.volume,
            daily_return=ret, volume_mean=mean, volume_std=std,
            volume_zscore=z, is_volume_anomaly=z >= VOLUME_ANOMALY_ZSCORE,
        ))
        prev_close = bar.close
    return rows
