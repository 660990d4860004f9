"""Trading-day alignment and the fused row contract."""

from __future__ import annotations

from datetime import date

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amrs.errors import TickerMismatch
from amrs.fusion import assign_trading_days, build_social_table, fuse, fuse_posts
from amrs.market import market_feature_table
from amrs.social import aggregate_social_day, zero_day
from amrs.store import rows_to_payload
from amrs.types import AuthorStats, FusedWindow

from .conftest import make_post
from .test_market import bars_from_volumes

# the canonical fused-schema columns, as persisted
FUSED_COLUMNS = {
    "ticker", "date",
    "social_volume", "avg_sentiment", "unique_authors", "avg_bot_score",
    "bot_heavy_post_ratio", "coordination_score",
    "open", "high", "low", "close", "adj_close", "volume",
    "return", "volume_mean", "volume_std", "volume_zscore", "is_volume_anomaly",
}


def _stats(author_id: str = "author_1") -> dict[str, AuthorStats]:
    return {author_id: AuthorStats(author_id, 10, 10, 1.0, 5)}


def test_fused_column_set_matches_schema():
    payload = rows_to_payload([], FusedWindow)
    assert {col["name"] for col in payload["schema"]} == FUSED_COLUMNS


def test_left_join_zero_fills_post_free_days():
    market = market_feature_table(bars_from_volumes([100] * 5, start=date(2021, 3, 1)))
    trading_days = [m.date for m in market]
    posts = [make_post("a", "buy xyz", day=date(2021, 3, 1)),
             make_post("b", "sell xyz", day=date(2021, 3, 3)),
             make_post("c", "hold xyz", day=date(2021, 3, 3))]
    social = build_social_table("XYZ", posts, _stats(), trading_days)
    fused = fuse(social, market)
    assert len(fused) == 5
    by_day = {w.date: w for w in fused}
    assert by_day[date(2021, 3, 1)].social_volume == 1
    assert by_day[date(2021, 3, 3)].social_volume == 2
    for day in (date(2021, 3, 2), date(2021, 3, 4), date(2021, 3, 5)):
        row = by_day[day]
        assert row.social_volume == 0
        assert row.avg_sentiment == 0.0
        assert row.coordination_score == 0.0


def test_weekend_posts_roll_to_monday():
    market = market_feature_table(bars_from_volumes([100] * 10, start=date(2021, 3, 1)))
    trading_days = [m.date for m in market]
    saturday = make_post("sat", "buy xyz", day=date(2021, 3, 6))
    sunday = make_post("sun", "buy xyz more", day=date(2021, 3, 7))
    grouped = assign_trading_days([saturday, sunday], trading_days)
    assert set(grouped) == {date(2021, 3, 8)}  # following Monday
    fused = fuse_posts("XYZ", [saturday, sunday], _stats(), market)
    assert {w.date: w.social_volume for w in fused}[date(2021, 3, 8)] == 2


def test_posts_beyond_horizon_dropped():
    market = market_feature_table(bars_from_volumes([100] * 3, start=date(2021, 3, 1)))
    late = make_post("late", "buy xyz", day=date(2021, 5, 1))
    grouped = assign_trading_days([late], [m.date for m in market])
    assert grouped == {}


def test_ticker_mismatch_rejected():
    market = market_feature_table(bars_from_volumes([100] * 3, ticker="AAA",
                                                    start=date(2021, 3, 1)))
    social = [zero_day("BBB", date(2021, 3, 1))]
    with pytest.raises(TickerMismatch):
        fuse(social, market)


def test_aggregate_counts_match_fixture_day():
    posts = [make_post(f"p{i}", f"text {i}", author_id=f"author_{i % 4}")
             for i in range(10)]
    stats = {f"author_{i}": AuthorStats(f"author_{i}", 10, 10, 1.0, 5)
             for i in range(4)}
    day = aggregate_social_day("XYZ", date(2021, 3, 1), posts, stats)
    assert day.social_volume == 10
    assert day.unique_authors == 4


def test_aggregate_is_post_order_invariant():
    posts = [make_post("a", "buy gme now", author_id="u1", lexicon_sentiment=0.4),
             make_post("b", "buy gme now", author_id="u2", lexicon_sentiment=0.4),
             make_post("c", "sell it all", author_id="u1", lexicon_sentiment=-0.3),
             make_post("d", "what a chart", author_id="u3", lexicon_sentiment=0.0)]
    stats = {f"u{i}": AuthorStats(f"u{i}", 10 * i + 5, 10, i + 0.5, 1 + i)
             for i in (1, 2, 3)}
    forward = aggregate_social_day("XYZ", date(2021, 3, 1), posts, stats)
    backward = aggregate_social_day("XYZ", date(2021, 3, 1),
                                    list(reversed(posts)), stats)
    assert forward == backward


@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_aggregate_fields_respect_ranges(data):
    n_authors = data.draw(st.integers(1, 6))
    stats = {}
    for i in range(n_authors):
        total = data.draw(st.integers(1, 500))
        active = data.draw(st.integers(1, 100))
        diversity = data.draw(st.integers(1, min(10, total)))
        stats[f"u{i}"] = AuthorStats(f"u{i}", total, active, total / active,
                                     diversity)
    n_posts = data.draw(st.integers(0, 12))
    vocab = ["buy", "sell", "gme", "moon", "crash", "the", "chart"]
    posts = [make_post(f"p{i}",
                       " ".join(data.draw(st.lists(st.sampled_from(vocab),
                                                   min_size=1, max_size=6))),
                       author_id=f"u{data.draw(st.integers(0, n_authors - 1))}",
                       lexicon_sentiment=data.draw(st.floats(-1, 1)))
             for i in range(n_posts)]
    day = aggregate_social_day("XYZ", date(2021, 3, 1), posts, stats)
    assert day.social_volume == n_posts
    assert 0 <= day.unique_authors <= day.social_volume
    assert -1.0 <= day.avg_sentiment <= 1.0
    assert 0.0 <= day.avg_bot_score <= 1.0
    assert 0.0 <= day.bot_heavy_post_ratio <= 1.0
    assert 0.0 <= day.coordination_score <= 1.0
    if n_posts == 0:
        assert day == zero_day("XYZ", date(2021, 3, 1))
