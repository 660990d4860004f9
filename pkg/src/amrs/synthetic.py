"""Deterministic synthetic post corpora calibrated around event windows.

Daily post counts follow a Poisson process at a base rate, multiplied inside
event windows. A configurable fraction of event-window posts are instantiated
from a small near-duplicate template pool (one campaign message per day), and
a fraction come from synthetic authors whose behavioral stats exceed the bot
thresholds. Organic posts mix valence-bearing vocabulary so the lexicon-scored
mean sentiment shifts by roughly the configured amount inside windows.

Everything is driven by one seeded generator per (seed, ticker), so a config
reproduces its corpus bit-for-bit.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass, field
from datetime import date, datetime, time, timedelta, timezone
from typing import Sequence

import numpy as np

from .errors import InvalidConfig
from .types import AuthorStats, PostRecord

BACKGROUND_BOT_RATE = 0.03

TEMPLATES = (
    "{t} to the moon rocket rocket buy now before its too late",
    "load up on {t} diamond hands we squeeze the shorts to {x}",
    "everyone buy {t} right now this rocket is mooning target {x}",
    "{t} is the play apes together strong hold the line buy more",
    "shorts never closed {t} squeeze incoming buy and hold to {x}",
    "just yolo into {t} calls printing tendies guaranteed gains",
    "{t} gamma squeeze loading buy shares not options hold hold hold",
    "hedgies are scared of {t} buy the dip and hold we like the stock",
    "{t} moon mission boarding now next stop {x} not financial advice",
    "big whales accumulating {t} insane volume incoming get in before {x}",
)
PRICE_TARGETS = ("100", "200", "420", "500", "1000", "69")

POSITIVE_WORDS = ("moon", "rocket", "gains", "bullish", "buy", "calls", "profit",
                  "winner", "rally", "surge", "breakout", "golden", "strong", "love")
NEGATIVE_WORDS = ("dump", "crash", "bearish", "sell", "puts", "loss", "drop",
                  "tank", "bleed", "overvalued", "bagholder", "fear", "weak", "trash")
NEUTRAL_WORDS = (
    "shares", "market", "price", "chart", "volume", "earnings", "report",
    "trading", "position", "order", "broker", "ticker", "float", "catalyst",
    "news", "thread", "comment", "discussion", "macro", "fed", "rates",
    "sector", "index", "etf", "portfolio", "strategy", "analysis", "technical",
    "fundamental", "support", "resistance", "level", "trend", "the", "a", "my",
    "we", "this", "that", "it", "is", "are", "to", "of", "for", "on", "in",
    "at", "with", "and", "or", "but", "think", "today", "week", "going",
    "looks", "still", "just", "maybe",
)
SUBREDDITS = ("wallstreetbets", "stocks", "investing", "options", "pennystocks")
SUBREDDIT_WEIGHTS = (0.6, 0.15, 0.1, 0.1, 0.05)
SENTIMENT_WORD_DENSITY = 0.25


@dataclass(frozen=True, slots=True)
class EventWindow:
    start: date
    end: date
    volume_multiplier: float
    template_fraction: float
    bot_author_fraction: float
    sentiment_shift: float


@dataclass(frozen=True, slots=True)
class SyntheticScenarioConfig:
    ticker: str
    start: date
    end: date
    base_posts_per_day: float
    events: tuple[EventWindow, ...] = ()
    seed: int = 42

    def validate(self) -> None:
        if not self.ticker:
            raise InvalidConfig("ticker must be non-empty")
        if self.start > self.end:
            raise InvalidConfig("date_range start must be <= end")
        if self.base_posts_per_day <= 0:
            raise InvalidConfig("base_posts_per_day must be > 0")
        spans: list[tuple[date, date]] = []
        for event in self.events:
            if event.start > event.end:
                raise InvalidConfig("event start must be <= end")
            if event.start < self.start or event.end > self.end:
                raise InvalidConfig("event window outside date_range")
            if event.volume_multiplier < 1:
                raise InvalidConfig("volume_multiplier must be >= 1")
            for frac in (event.template_fraction, event.bot_author_fraction):
                if not 0.0 <= frac <= 1.0:
                    raise InvalidConfig("fractions must be in [0, 1]")
            if not -1.0 <= event.sentiment_shift <= 1.0:
                raise InvalidConfig("sentiment_shift must be in [-1, 1]")
            for lo, hi in spans:
                if event.start <= hi and lo <= event.end:
                    raise InvalidConfig("event windows must not overlap")
            spans.append((event.start, event.end))


@dataclass(frozen=True, slots=True)
class _AuthorPool:
    normal: tuple[AuthorStats, ...]
    bots: tuple[AuthorStats, ...]
    zipf_weights: np.ndarray = field(compare=False)


def _rng_for(config: SyntheticScenarioConfig) -> np.random.Generator:
    return np.random.default_rng([config.seed, zlib.crc32(config.ticker.encode())])


def _build_authors(config: SyntheticScenarioConfig,
                   rng: np.random.Generator) -> _AuthorPool:
    prefix = config.ticker.lower()
    n_normal = max(12, int(round(config.base_posts_per_day * 3)))
    normal: list[AuthorStats] = []
    for i in range(n_normal):
        kind = rng.random()
        active = int(rng.integers(10, 400))
        if kind < 0.70:            # regular account, no indicator fires
            ppd = rng.uniform(0.5, 6.0)
            diversity = int(rng.integers(3, 9))
        elif kind < 0.95:          # low-diversity casual: diversity flag only
            ppd = rng.uniform(0.2, 3.0)
            diversity = int(rng.integers(1, 3))
        else:                      # high-frequency power user: frequency flag only
            ppd = rng.uniform(11.0, 20.0)
            diversity = int(rng.integers(3, 11))
        total = max(diversity, int(round(ppd * active)), 1)
        normal.append(AuthorStats.build(f"{prefix}_user_{i:04d}", total, active, diversity))

    bots: list[AuthorStats] = []
    for i in range(30):
        active = int(rng.integers(3, 30))
        total = int(round(rng.uniform(11.5, 25.0) * active))
        diversity = int(rng.integers(1, 3))
        bots.append(AuthorStats.build(f"{prefix}_bot_{i:03d}", total, active, diversity))

    ranks = np.arange(1, n_normal + 1, dtype=float)
    weights = 1.0 / ranks ** 1.1
    return _AuthorPool(tuple(normal), tuple(bots), weights / weights.sum())


def _event_for(day: date, events: Sequence[EventWindow]) -> EventWindow | None:
    for event in events:
        if event.start <= day <= event.end:
            return event
    return None


def _organic_text(rng: np.random.Generator, ticker: str, positive_prob: float) -> str:
    length = int(rng.integers(8, 18))
    words = [ticker.lower()]
    for _ in range(length):
        if rng.random() < SENTIMENT_WORD_DENSITY:
            pool = POSITIVE_WORDS if rng.random() < positive_prob else NEGATIVE_WORDS
        else:
            pool = NEUTRAL_WORDS
        words.append(pool[int(rng.integers(0, len(pool)))])
    return " ".join(words)


def generate_synthetic_social(config: SyntheticScenarioConfig,
                              ) -> tuple[list[PostRecord], list[AuthorStats]]:
    """Generate (posts, author stats) for one scenario; bit-identical per config."""
    config.validate()
    rng = _rng_for(config)
    pool = _build_authors(config, rng)

    posts: list[PostRecord] = []
    day = config.start
    while day <= config.end:
        event = _event_for(day, config.events)
        lam = config.base_posts_per_day * (event.volume_multiplier if event else 1.0)
        count = int(rng.poisson(lam))
        # One campaign message (template and slot value) per day: copypasta
        # waves are near-identical, which is what the similarity detector keys on.
        day_template = TEMPLATES[int(rng.integers(0, len(TEMPLATES)))]
        day_target = PRICE_TARGETS[int(rng.integers(0, len(PRICE_TARGETS)))]
        positive_prob = 0.5 + (event.sentiment_shift if event else 0.0) / 2.0

        for i in range(count):
            is_template = event is not None and rng.random() < event.template_fraction
            bot_prob = event.bot_author_fraction if event else BACKGROUND_BOT_RATE
            is_bot = rng.random() < bot_prob

            if is_bot:
                author = pool.bots[int(rng.integers(0, len(pool.bots)))]
            else:
                author = pool.normal[int(rng.choice(len(pool.normal), p=pool.zipf_weights))]

            if is_template:
                text = day_template.format(t=config.ticker.lower(), x=day_target)
            else:
                text = _organic_text(rng, config.ticker, positive_prob)

            stamp = datetime.combine(
                day,
                time(int(rng.integers(0, 24)), int(rng.integers(0, 60)),
                     int(rng.integers(0, 60))),
                tzinfo=timezone.utc)
            subreddit = SUBREDDITS[int(rng.choice(len(SUBREDDITS), p=SUBREDDIT_WEIGHTS))]
            posts.append(PostRecord(
                post_id=f"{config.ticker}-{day.isoformat()}-{i:04d}",
                ticker=config.ticker, timestamp=stamp,
                author_id=author.author_id, subreddit=subreddit, text=text))
        day += timedelta(days=1)

    authors = sorted(pool.normal + pool.bots, key=lambda a: a.author_id)
    return posts, authors
