"""Core record types persisted by the pipeline.

Each dataclass corresponds to one stage row. Field names match the on-disk
column names except where Python reserves the word (``daily_return`` is
persisted as ``return`` via COLUMN_ALIASES, which the columnar store applies).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from datetime import date, datetime
from typing import Optional


class RiskLevel(str, enum.Enum):
    LOW = "Low"
    MEDIUM = "Medium"
    HIGH = "High"


class ManipulationType(str, enum.Enum):
    COORDINATED_TRADING = "coordinated_trading"
    PUMP_AND_DUMP = "pump_and_dump"
    NORMAL = "normal"


class Confidence(str, enum.Enum):
    HIGH = "high"
    MEDIUM = "medium"
    LOW = "low"


class LabelSource(str, enum.Enum):
    SEC = "sec"
    COMMUNITY = "community"
    SYNTHETIC_NEGATIVE = "synthetic_negative"


@dataclass(frozen=True, slots=True)
class OhlcvBar:
    ticker: str
    date: date
    open: float
    high: float
    low: float
    close: float
    adj_close: float
    volume: int

    def validate(self) -> None:
        if min(self.open, self.high, self.low, self.close, self.adj_close) <= 0:
            raise ValueError("prices must be positive")
        if not (self.low <= self.open <= self.high):
            raise ValueError("open outside [low, high]")
        if not (self.low <= self.close <= self.high):
            raise ValueError("close outside [low, high]")
        if self.volume < 0:
            raise ValueError("volume must be >= 0")


@dataclass(frozen=True, slots=True)
class PostRecord:
    post_id: str
    ticker: str
    timestamp: datetime
    author_id: str
    subreddit: str
    text: str
    lexicon_sentiment: Optional[float] = None
    aux_sentiment: Optional[float] = None


@dataclass(frozen=True, slots=True)
class AuthorStats:
    author_id: str
    total_posts: int
    active_days: int
    posts_per_active_day: float
    subreddit_diversity: int

    @classmethod
    def build(cls, author_id: str, total_posts: int, active_days: int,
              subreddit_diversity: int) -> "AuthorStats":
        if active_days < 1:
            raise ValueError("active_days must be >= 1")
        if subreddit_diversity < 1 or subreddit_diversity > total_posts:
            raise ValueError("subreddit_diversity must be in [1, total_posts]")
        return cls(author_id=author_id, total_posts=total_posts,
                   active_days=active_days,
                   posts_per_active_day=total_posts / active_days,
                   subreddit_diversity=subreddit_diversity)


@dataclass(frozen=True, slots=True)
class GroundTruthLabel:
    ticker: str
    date: date
    label: int
    manipulation_type: ManipulationType
    confidence: Confidence
    source: LabelSource


@dataclass(frozen=True, slots=True)
class DailySocialFeatures:
    ticker: str
    date: date
    social_volume: int
    unique_authors: int
    avg_sentiment: float
    avg_bot_score: float
    bot_heavy_post_ratio: float
    coordination_score: float


@dataclass(frozen=True, slots=True)
class DailyMarketFeatures:
    """Market row of the fused schema: raw bar plus derived features."""

    ticker: str
    date: date
    open: float
    high: float
    low: float
    close: float
    adj_close: float
    volume: int
    daily_return: float
    volume_mean: float
    volume_std: float
    volume_zscore: float
    is_volume_anomaly: bool

    COLUMN_ALIASES = {"daily_return": "return"}


@dataclass(frozen=True, slots=True)
class FusedWindow:
    """One ticker-day aligning social aggregates with market features."""

    ticker: str
    date: date
    social_volume: int
    avg_sentiment: float
    unique_authors: int
    avg_bot_score: float
    bot_heavy_post_ratio: float
    coordination_score: float
    open: float
    high: float
    low: float
    close: float
    adj_close: float
    volume: int
    daily_return: float
    volume_mean: float
    volume_std: float
    volume_zscore: float
    is_volume_anomaly: bool

    COLUMN_ALIASES = {"daily_return": "return"}


@dataclass(frozen=True, slots=True)
class ScoredWindow:
    """FusedWindow plus normalized components, AMRS and the suspicion flag."""

    ticker: str
    date: date
    social_volume: int
    avg_sentiment: float
    unique_authors: int
    avg_bot_score: float
    bot_heavy_post_ratio: float
    coordination_score: float
    open: float
    high: float
    low: float
    close: float
    adj_close: float
    volume: int
    daily_return: float
    volume_mean: float
    volume_std: float
    volume_zscore: float
    is_volume_anomaly: bool
    s_vol: float
    s_sent: float
    s_bot: float
    s_coord: float
    s_mkt: float
    risk_score: float
    risk_level: RiskLevel
    is_suspicious: bool

    COLUMN_ALIASES = {"daily_return": "return"}


@dataclass(frozen=True, slots=True)
class ForwardEvalRow:
    ticker: str
    date: date
    true_label: int
    predicted_label: int
    risk_score: float


@dataclass(frozen=True, slots=True)
class PredictionLogEntry:
    timestamp: datetime
    date: date
    ticker: str
    risk_score: float
    predicted_label: int
    model_version: str
    run_id: str
    extra: str = "{}"


@dataclass(frozen=True, slots=True)
class LeadTimeRecord:
    ticker: str
    event_id: str
    event_start_date: date
    first_alert_date: Optional[date]
    lead_time_days: Optional[int]
    detected_pre_event: bool
    max_risk_pre_event: float
