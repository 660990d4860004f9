"""Author bot-likeness heuristics and their per-day aggregates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import UnknownAuthor
from .types import AuthorStats, PostRecord


@dataclass(frozen=True, slots=True)
class BotParams:
    """Two-indicator weighted bot score: high posting rate, low subreddit spread."""

    w_frequency: float = 0.7
    w_diversity: float = 0.3
    frequency_threshold: float = 10.0   # posts per active day
    diversity_threshold: int = 3        # distinct subreddits
    flag_cutoff: float = 0.5            # strict > counts as bot-heavy

    def __post_init__(self) -> None:
        if abs(self.w_frequency + self.w_diversity - 1.0) > 1e-9:
            raise ValueError("bot weights must sum to 1")
        if self.frequency_threshold <= 0 or self.diversity_threshold <= 0:
            raise ValueError("thresholds must be positive")


def author_bot_score(stats: AuthorStats, params: BotParams = BotParams()) -> float:
    """Weighted sum of the frequency and low-diversity indicators.

    With default params the score is one of {0.0, 0.3, 0.7, 1.0}.
    """
    score = 0.0
    if stats.posts_per_active_day > params.frequency_threshold:
        score += params.w_frequency
    if stats.subreddit_diversity < params.diversity_threshold:
        score += params.w_diversity
    return score


def daily_bot_aggregates(posts: Iterable[PostRecord],
                         stats: Mapping[str, AuthorStats],
                         params: BotParams = BotParams()) -> tuple[float, float]:
    """Mean author bot score over posts, and the bot-heavy post fraction.

    A post counts as bot-heavy only when its author's score strictly exceeds
    flag_cutoff. A day with no posts yields (0.0, 0.0).
    """
    scores = []
    for post in posts:
        author = stats.get(post.author_id)
        if author is None:
            raise UnknownAuthor(post.author_id)
        scores.append(author_bot_score(author, params))
    if not scores:
        return 0.0, 0.0
    avg = sum(scores) / len(scores)
    heavy = sum(1 for s in scores if s > params.flag_cutoff) / len(scores)
    return avg, heavy
