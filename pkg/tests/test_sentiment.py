"""Lexicon scorer behavior and the two-scorer combination rule."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from amrs.errors import OutOfRangeInput
from amrs.sentiment import (LexiconScorer, SentimentWeights, combined_sentiment,
                            lexicon_sentiment, load_lexicon)


def test_empty_text_scores_zero():
    assert lexicon_sentiment("") == 0.0


def test_neutral_text_scores_zero():
    assert lexicon_sentiment("the chart has a number on it") == 0.0


def test_all_positive_words_positive():
    assert lexicon_sentiment("great amazing moon") > 0


def test_negation_flips_below_unnegated():
    # hand-computed: "good" -> 1.9 -> 1.9/2.9; "not good" -> -1.9 -> -1.9/2.9
    lexicon = load_lexicon()
    expected = lexicon["good"] / (1 + lexicon["good"])
    assert lexicon_sentiment("good") == pytest.approx(expected, abs=1e-12)
    assert lexicon_sentiment("not good") == pytest.approx(-expected, abs=1e-12)
    assert lexicon_sentiment("not good") < lexicon_sentiment("good")


def test_booster_amplifies():
    assert lexicon_sentiment("very good") > lexicon_sentiment("good")
    assert lexicon_sentiment("slightly good") < lexicon_sentiment("good")


def test_scores_bounded():
    assert -1.0 <= lexicon_sentiment("scam fraud bankrupt crash dump") <= 1.0
    assert -1.0 <= lexicon_sentiment("best great amazing moon rocket") <= 1.0


def test_custom_lexicon_override():
    scorer = LexiconScorer({"zork": 2.0})
    assert scorer.score("zork") == pytest.approx(2.0 / 3.0)
    assert scorer.score("moon") == 0.0


def test_combined_equal_inputs():
    assert combined_sentiment(0.5, 0.5) == pytest.approx(0.5, abs=1e-12)


def test_combined_fallback_without_aux():
    assert combined_sentiment(1.0, None) == 1.0


def test_combined_default_weights():
    assert combined_sentiment(0.0, 1.0) == pytest.approx(0.6, abs=1e-12)


def test_combined_out_of_range_rejected():
    with pytest.raises(OutOfRangeInput):
        combined_sentiment(1.5, 0.0)
    with pytest.raises(OutOfRangeInput):
        combined_sentiment(0.0, -1.01)


def test_weights_must_sum_to_one():
    with pytest.raises(ValueError):
        SentimentWeights(0.5, 0.6)


@given(lex1=st.floats(-1, 1), lex2=st.floats(-1, 1), aux=st.floats(-1, 1))
def test_combined_monotone_in_lexicon(lex1, lex2, aux):
    lo, hi = sorted((lex1, lex2))
    assert combined_sentiment(lo, aux) <= combined_sentiment(hi, aux)


@given(lex=st.floats(-1, 1), aux1=st.floats(-1, 1), aux2=st.floats(-1, 1))
def test_combined_monotone_in_aux(lex, aux1, aux2):
    lo, hi = sorted((aux1, aux2))
    assert combined_sentiment(lex, lo) <= combined_sentiment(lex, hi)


@given(text=st.text(max_size=200))
def test_lexicon_total_and_bounded(text):
    score = lexicon_sentiment(text)
    assert -1.0 <= score <= 1.0
