"""Per-ticker-day social aggregates."""

from __future__ import annotations

from dataclasses import replace
from datetime import date
from typing import Iterable, Mapping, Optional, Sequence

from .bots import BotParams, daily_bot_aggregates
from .coordination import CoordinationParams, coordination_score
from .sentiment import LexiconScorer, SentimentWeights, combined_sentiment
from .types import AuthorStats, DailySocialFeatures, PostRecord


def apply_lexicon_scores(posts: Iterable[PostRecord],
                         scorer: Optional[LexiconScorer] = None) -> list[PostRecord]:
    """Fill lexicon_sentiment on every post (idempotent for scored posts)."""
    scorer = scorer or LexiconScorer()
    return [p if p.lexicon_sentiment is not None
            else replace(p, lexicon_sentiment=scorer.score(p.text))
            for p in posts]


def zero_day(ticker: str, day: date) -> DailySocialFeatures:
    return DailySocialFeatures(ticker=ticker, date=day, social_volume=0,
                               unique_authors=0, avg_sentiment=0.0,
                               avg_bot_score=0.0, bot_heavy_post_ratio=0.0,
                               coordination_score=0.0)


def aggregate_social_day(ticker: str, day: date, posts: Sequence[PostRecord],
                         author_stats: Mapping[str, AuthorStats],
                         sentiment_weights: SentimentWeights = SentimentWeights(),
                         bot_params: BotParams = BotParams(),
                         coord_params: CoordinationParams = CoordinationParams(),
                         ) -> DailySocialFeatures:
    """Aggregate one ticker-day of posts into DailySocialFeatures.

    Posts must already carry lexicon_sentiment and belong to the given ticker
    and assigned trading day. An empty day is all zeros.
    """
    if not posts:
        return zero_day(ticker, day)
    for post in posts:
        if post.ticker != ticker:
            raise ValueError(f"post {post.post_id} has ticker {post.ticker}, expected {ticker}")
        if post.lexicon_sentiment is None:
            raise ValueError(f"post {post.post_id} has no lexicon sentiment; "
                             "run apply_lexicon_scores first")

    sentiments = [combined_sentiment(p.lexicon_sentiment, p.aux_sentiment, sentiment_weights)
                  for p in posts]
    avg_bot, bot_heavy = daily_bot_aggregates(posts, author_stats, bot_params)
    return DailySocialFeatures(
        ticker=ticker,
        date=day,
        social_volume=len(posts),
        unique_authors=len({p.author_id for p in posts}),
        avg_sentiment=sum(sentiments) / len(sentiments),
        avg_bot_score=avg_bot,
        bot_heavy_post_ratio=bot_heavy,
        coordination_score=coordination_score(posts, coord_params),
    )
