"""Alignment of social posts and market features onto one trading-day axis.

The market table defines the axis. Posts on non-trading days (weekends,
holidays) roll forward to the next trading day before aggregation; posts
after the last trading day have no home and are dropped. Trading days with
no posts get zero-filled social features.
"""

from __future__ import annotations

import bisect
from datetime import date
from typing import Mapping, Sequence

from .bots import BotParams
from .coordination import CoordinationParams
from .errors import TickerMismatch
from .sentiment import SentimentWeights
from .social import aggregate_social_day, zero_day
from .types import (AuthorStats, DailyMarketFeatures, DailySocialFeatures,
                    FusedWindow, PostRecord)


def assign_trading_days(posts: Sequence[PostRecord],
                        trading_days: Sequence[date]) -> dict[date, list[PostRecord]]:
    """Group posts by the first trading day at or after their post date."""
    if not trading_days:
        return {}
    grouped: dict[date, list[PostRecord]] = {}
    for post in posts:
        idx = bisect.bisect_left(trading_days, post.timestamp.date())
        if idx == len(trading_days):
            continue  # beyond the market horizon
        grouped.setdefault(trading_days[idx], []).append(post)
    return grouped


def build_social_table(ticker: str, posts: Sequence[PostRecord],
                       author_stats: Mapping[str, AuthorStats],
                       trading_days: Sequence[date],
                       sentiment_weights: SentimentWeights = SentimentWeights(),
                       bot_params: BotParams = BotParams(),
                       coord_params: CoordinationParams = CoordinationParams(),
                       ) -> list[DailySocialFeatures]:
    """Aggregate posts per assigned trading day; only days with posts are emitted."""
    grouped = assign_trading_days(posts, trading_days)
    return [aggregate_social_day(ticker, day, grouped[day], author_stats,
                                 sentiment_weights, bot_params, coord_params)
            for day in sorted(grouped)]


def fuse(social: Sequence[DailySocialFeatures],
         market: Sequence[DailyMarketFeatures]) -> list[FusedWindow]:
    """Left-join social aggregates onto the market axis; one row per trading day."""
    by_day: dict[date, DailySocialFeatures] = {}
    for row in social:
        if market and row.ticker != market[0].ticker:
            raise TickerMismatch(f"social rows are {row.ticker}, market is {market[0].ticker}")
        by_day[row.date] = row

    fused: list[FusedWindow] = []
    for m in market:
        s = by_day.get(m.date) or zero_day(m.ticker, m.date)
        fused.append(FusedWindow(
            ticker=m.ticker, date=m.date,
            social_volume=s.social_volume, avg_sentiment=s.avg_sentiment,
            unique_authors=s.unique_authors, avg_bot_score=s.avg_bot_score,
            bot_heavy_post_ratio=s.bot_heavy_post_ratio,
            coordination_score=s.coordination_score,
            open=m.open, high=m.high, low=m.low, close=m.close,
            adj_close=m.adj_close, volume=m.volume,
            daily_return=m.daily_return, volume_mean=m.volume_mean,
            volume_std=m.volume_std, volume_zscore=m.volume_zscore,
            is_volume_anomaly=m.is_volume_anomaly,
        ))
    return fused


def fuse_posts(ticker: str, posts: Sequence[PostRecord],
               author_stats: Mapping[str, AuthorStats],
               market: Sequence[DailyMarketFeatures],
               sentiment_weights: SentimentWeights = SentimentWeights(),
               bot_params: BotParams = BotParams(),
               coord_params: CoordinationParams = CoordinationParams(),
               ) -> list[FusedWindow]:
    """Posts + market features -> fused windows in one call."""
    trading_days = [m.date for m in market]
    social = build_social_table(ticker, posts, author_stats, trading_days,
                                sentiment_weights, bot_params, coord_params)
    return fuse(social, market)
