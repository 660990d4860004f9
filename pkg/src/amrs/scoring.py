"""AMRS computation: causal normalization, component fusion and suspicion tagging.

Each raw component series is normalized with expanding-window statistics so a
day's score depends only on history up to and including that day: values are
log1p-transformed, scaled by the running (min, 99th percentile) range and
clamped into [0, 1]. The weighted component sum is the risk score, mapped to
discrete levels; High days with at least one supporting feature anomaly are
tagged suspicious.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import InvalidWeights
from .types import FusedWindow, RiskLevel, ScoredWindow

COMPONENTS = ("vol", "sent", "bot", "coord", "mkt")


@dataclass(frozen=True, slots=True)
class WeightConfig:
    w_vol: float = 0.25
    w_sent: float = 0.15
    w_bot: float = 0.20
    w_coord: float = 0.20
    w_mkt: float = 0.20

    def __post_init__(self) -> None:
        weights = self.as_tuple()
        if any(w < 0 for w in weights):
            raise InvalidWeights("weights must be >= 0")
        if abs(sum(weights) - 1.0) > 1e-9:
            raise InvalidWeights(f"weights must sum to 1, got {sum(weights)!r}")

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.w_vol, self.w_sent, self.w_bot, self.w_coord, self.w_mkt)


@dataclass(frozen=True, slots=True)
class SuspicionParams:
    """Supporting-anomaly cutoffs for tagging High-risk days."""

    volume_zscore_cut: float = 2.0   # inclusive
    abs_return_cut: float = 0.05     # strict >
    coordination_cut: float = 0.5    # inclusive
    bot_ratio_cut: float = 0.3       # inclusive


@dataclass
class NormalizerState:
    """Expanding statistics of one log1p-transformed feature series.

    Retains the full transformed history (desk scale: at most a few thousand
    days per ticker) so the running 99th percentile is exact.
    """

    epsilon: float = 1e-9
    values: list[float] = field(default_factory=list)  # sorted log1p history

    @property
    def count(self) -> int:
        return len(self.values)

    @property
    def running_min(self) -> float:
        return self.values[0]

    @property
    def running_max(self) -> float:
        return self.values[-1]

    @property
    def running_p99(self) -> float:
        return float(np.percentile(np.asarray(self.values), 99.0))

    def update(self, raw: float) -> float:
        """Fold in the current day's raw value; returns the transformed value."""
        y = math.log1p(max(raw, 0.0))
        bisect.insort(self.values, y)
        return y


def normalize_expanding(raw: float, state: NormalizerState) -> float:
    """Score a raw value against a state already updated with it.

    clamp((log1p(raw) - min) / (p99 - min + eps), 0, 1); the first observation
    of a series scores 0.
    """
    if state.count == 0:
        raise ValueError("state must be updated with the current value first")
    y = math.log1p(max(raw, 0.0))
    score = (y - state.running_min) / (state.running_p99 - state.running_min + state.epsilon)
    return min(max(score, 0.0), 1.0)


def market_component(volume_zscore_norm: float, abs_return_norm: float) -> float:
    """Elementwise max of the two normalized market channels."""
    return max(volume_zscore_norm, abs_return_norm)


def amrs(s_vol: float, s_sent: float, s_bot: float, s_coord: float, s_mkt: float,
         weights: WeightConfig = WeightConfig()) -> float:
    """Weighted component sum clipped to [0, 1]."""
    score = (weights.w_vol * s_vol + weights.w_sent * s_sent + weights.w_bot * s_bot
             + weights.w_coord * s_coord + weights.w_mkt * s_mkt)
    return min(max(score, 0.0), 1.0)


def risk_level(score: float) -> RiskLevel:
    if score < 0.2:
        return RiskLevel.LOW
    if score < 0.5:
        return RiskLevel.MEDIUM
    return RiskLevel.HIGH


def tag_suspicious(level: RiskLevel, volume_zscore: float, daily_return: float,
                   coordination: float, bot_heavy_ratio: float,
                   params: SuspicionParams = SuspicionParams()) -> bool:
    """High risk plus at least one supporting feature anomaly."""
    if level is not RiskLevel.HIGH:
        return False
    return (volume_zscore >= params.volume_zscore_cut
            or abs(daily_return) > params.abs_return_cut
            or coordination >= params.coordination_cut
            or bot_heavy_ratio >= params.bot_ratio_cut)


class ComponentNormalizers:
    """One expanding normalizer per AMRS component, never shared across tickers."""

    def __init__(self, epsilon: float = 1e-9):
        self.states = {name: NormalizerState(epsilon=epsilon) for name in COMPONENTS}

    def observe(self, name: str, raw: float) -> float:
        state = self.states[name]
        state.update(raw)
        return normalize_expanding(raw, state)


def raw_components(row: FusedWindow) -> dict[str, float]:
    """Raw (pre-normalization) component inputs for one fused day."""
    return {
        "vol": float(row.social_volume),
        "sent": max(0.0, row.avg_sentiment),
        "bot": row.bot_heavy_post_ratio,
        "coord": row.coordination_score,
        # abs(return) bounds this below at 0 even on negative-zscore days.
        "mkt": max(row.volume_zscore, abs(row.daily_return)),
    }


def score_pipeline(fused: Sequence[FusedWindow],
                   weights: WeightConfig = WeightConfig(),
                   suspicion: SuspicionParams = SuspicionParams(),
                   epsilon: float = 1e-9) -> list[ScoredWindow]:
    """Single forward pass over date-ordered fused rows.

    Normalizer state is updated with each day before scoring it, so every
    output depends only on rows at or before it (prefix-stable, bit-exact).
    """
    for prev, cur in zip(fused, fused[1:]):
        if cur.date <= prev.date:
            raise ValueError("fused rows must be strictly increasing by date")
    normalizers = ComponentNormalizers(epsilon=epsilon)
    out: list[ScoredWindow] = []
    for row in fused:
        raw = raw_components(row)
        s = {name: normalizers.observe(name, raw[name]) for name in COMPONENTS}
        score = amrs(s["vol"], s["sent"], s["bot"], s["coord"], s["mkt"], weights)
        level = risk_level(score)
        suspicious = tag_suspicious(level, row.volume_zscore, row.daily_return,
                                    row.coordination_score, row.bot_heavy_post_ratio,
                                    suspicion)
        out.append(ScoredWindow(
            ticker=row.ticker, date=row.date,
            social_volume=row.social_volume, avg_sentiment=row.avg_sentiment,
            unique_authors=row.unique_authors, avg_bot_score=row.avg_bot_score,
            bot_heavy_post_ratio=row.bot_heavy_post_ratio,
            coordination_score=row.coordination_score,
            open=row.open, high=row.high, low=row.low, close=row.close,
            adj_close=row.adj_close, volume=row.volume,
            daily_return=row.daily_return, volume_mean=row.volume_mean,
            volume_std=row.volume_std, volume_zscore=row.volume_zscore,
            is_volume_anomaly=row.is_volume_anomaly,
            s_vol=s["vol"], s_sent=s["sent"], s_bot=s["bot"],
            s_coord=s["coord"], s_mkt=s["mkt"],
            risk_score=score, risk_level=level, is_suspicious=suspicious,
        ))
    return out
