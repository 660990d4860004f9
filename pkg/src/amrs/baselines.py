"""Rule-based baseline scorers over fused windows.

Four references the risk engine is compared against: a social-volume
threshold (VT), a negative-sentiment threshold (ST), their average (CR), and
a market-anomaly rule (MA) that averages causally normalized volatility,
volume spike and absolute return. All emit daily scores in [0, 1] and only
use history up to each day when run in the default expanding mode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .scoring import NormalizerState, normalize_expanding
from .types import FusedWindow


@dataclass(frozen=True, slots=True)
class BaselineParams:
    vt_p90_mode: str = "expanding"   # or "full"
    st_scale: float = 0.5
    baseline_threshold: float = 0.7
    volatility_window: int = 20

    def __post_init__(self) -> None:
        if self.vt_p90_mode not in ("expanding", "full"):
            raise ValueError("vt_p90_mode must be 'expanding' or 'full'")
        if not 0.0 < self.baseline_threshold < 1.0:
            raise ValueError("baseline_threshold must be in (0, 1)")
        if self.st_scale <= 0:
            raise ValueError("st_scale must be > 0")


def baseline_vt(fused: Sequence[FusedWindow],
                params: BaselineParams = BaselineParams()) -> list[float]:
    """min(1, volume / (2 * P90 of social volume)); P90 expanding by default."""
    volumes = [float(w.social_volume) for w in fused]
    out: list[float] = []
    for t, volume in enumerate(volumes):
        history = volumes[:t + 1] if params.vt_p90_mode == "expanding" else volumes
        p90 = float(np.percentile(np.asarray(history), 90.0))
        if p90 <= 0.0:
            out.append(1.0 if volume > 0 else 0.0)
        else:
            out.append(min(1.0, volume / (2.0 * p90)))
    return out


def baseline_st(fused: Sequence[FusedWindow],
                params: BaselineParams = BaselineParams()) -> list[float]:
    """Strongly negative mean sentiment, scaled so -st_scale saturates at 1."""
    return [min(1.0, max(0.0, -w.avg_sentiment) / params.st_scale) for w in fused]


def baseline_cr(fused: Sequence[FusedWindow],
                params: BaselineParams = BaselineParams()) -> list[float]:
    """Pointwise average of VT and ST."""
    vt = baseline_vt(fused, params)
    st = baseline_st(fused, params)
    return [(a + b) / 2.0 for a, b in zip(vt, st)]


def baseline_ma(fused: Sequence[FusedWindow],
                params: BaselineParams = BaselineParams()) -> list[float]:
    """Mean of normalized volatility, volume spike and |return|, clamped to [0, 1].

    Volatility is the trailing window std of returns; each channel runs through
    its own expanding log1p/(min, p99) normalizer so the rule stays causal.
    """
    returns = [w.daily_return for w in fused]
    states = {name: NormalizerState() for name in ("sigma", "dv", "ret")}
    out: list[float] = []
    for t, w in enumerate(fused):
        lo = max(0, t + 1 - params.volatility_window)
        window = returns[lo:t + 1]
        mean = sum(window) / len(window)
        sigma = math.sqrt(sum((r - mean) ** 2 for r in window) / len(window))
        raws = {"sigma": sigma, "dv": max(w.volume_zscore, 0.0),
                "ret": abs(w.daily_return)}
        normalized = {}
        for name, raw in raws.items():
            states[name].update(raw)
            normalized[name] = normalize_expanding(raw, states[name])
        score = (normalized["sigma"] + normalized["dv"] + normalized["ret"]) / 3.0
        out.append(min(1.0, max(0.0, score)))
    return out


BASELINES = {"vt": baseline_vt, "st": baseline_st, "cr": baseline_cr, "ma": baseline_ma}
