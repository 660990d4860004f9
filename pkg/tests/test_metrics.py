"""Ranking metrics against independent brute-force oracles."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amrs.metrics import (average_ranks, confusion_and_metrics, pr_auc, roc_auc,
                          spearman_rho)


def pairwise_roc_auc(scores, labels) -> float:
    """Oracle 1: explicit positive-negative pair counting, ties at 0.5."""
    pos = [s for s, l in zip(scores, labels) if l == 1]
    neg = [s for s, l in zip(scores, labels) if l == 0]
    if not pos or not neg:
        return 0.5
    total = 0.0
    for p in pos:
        for n in neg:
            total += 1.0 if p > n else (0.5 if p == n else 0.0)
    return total / (len(pos) * len(neg))


def trapezoid_roc_auc(scores, labels) -> float:
    """Oracle 2: sweep every threshold, integrate the ROC curve."""
    pos = sum(labels)
    neg = len(labels) - pos
    if pos == 0 or neg == 0:
        return 0.5
    thresholds = sorted(set(scores), reverse=True)
    points = [(0.0, 0.0)]
    for threshold in thresholds:
        tp = sum(1 for s, l in zip(scores, labels) if s >= threshold and l == 1)
        fp = sum(1 for s, l in zip(scores, labels) if s >= threshold and l == 0)
        points.append((fp / neg, tp / pos))
    area = 0.0
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        area += (x1 - x0) * (y0 + y1) / 2.0
    return area


def step_pr_auc(scores, labels) -> float:
    """Oracle: recount precision/recall from scratch at every threshold step."""
    pos = sum(labels)
    if pos == 0:
        return 0.0
    thresholds = sorted(set(scores), reverse=True)
    area = 0.0
    prev_recall = 0.0
    for threshold in thresholds:
        tp = sum(1 for s, l in zip(scores, labels) if s >= threshold and l == 1)
        fp = sum(1 for s, l in zip(scores, labels) if s >= threshold and l == 0)
        precision = tp / (tp + fp)
        recall = tp / pos
        area += (recall - prev_recall) * precision
        prev_recall = recall
    return area


def test_perfect_ranking():
    assert roc_auc([0.9, 0.1], [1, 0]) == 1.0
    assert pr_auc([0.9, 0.1], [1, 0]) == 1.0


def test_inverted_ranking():
    assert roc_auc([0.1, 0.9], [1, 0]) == 0.0


def test_ties_contribute_half():
    assert roc_auc([0.5, 0.5], [1, 0]) == 0.5


def test_single_class_conventions():
    assert roc_auc([0.3, 0.4], [0, 0]) == 0.5
    assert pr_auc([0.3, 0.4], [0, 0]) == 0.0


def test_average_ranks_with_ties():
    assert list(average_ranks([10.0, 20.0, 10.0])) == [1.5, 3.0, 1.5]


def test_confusion_counts_and_safe_ratios():
    report = confusion_and_metrics([0.9, 0.8, 0.3, 0.1], [1, 0, 1, 0], 0.5)
    assert (report.tp, report.fp, report.tn, report.fn) == (1, 1, 1, 1)
    assert report.precision == 0.5
    assert report.recall == 0.5
    assert report.f1 == 0.5
    empty = confusion_and_metrics([0.1, 0.2], [0, 1], 0.9)
    assert empty.precision == 0.0 and empty.recall == 0.0 and empty.f1 == 0.0


def test_threshold_is_inclusive():
    report = confusion_and_metrics([0.5], [1], 0.5)
    assert report.tp == 1


@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_roc_and_pr_match_oracles(data):
    n = data.draw(st.integers(min_value=2, max_value=50))
    # coarse grid forces plenty of score ties
    scores = data.draw(st.lists(
        st.sampled_from([0.0, 0.1, 0.25, 0.25, 0.5, 0.75, 0.9, 1.0]),
        min_size=n, max_size=n))
    labels = data.draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    assert roc_auc(scores, labels) == pytest.approx(pairwise_roc_auc(scores, labels), abs=1e-9)
    assert roc_auc(scores, labels) == pytest.approx(trapezoid_roc_auc(scores, labels), abs=1e-9)
    assert pr_auc(scores, labels) == pytest.approx(step_pr_auc(scores, labels), abs=1e-9)


def test_spearman_identity_and_conventions():
    assert spearman_rho([1, 2, 3], [1, 2, 3]) == pytest.approx(1.0)
    assert spearman_rho([1, 2, 3], [3, 2, 1]) == pytest.approx(-1.0)
    assert spearman_rho([5, 5, 5], [1, 2, 3]) == 1.0  # constant series convention


def test_spearman_matches_numpy_on_distinct_values():
    rng = np.random.default_rng(0)
    x = rng.permutation(20).astype(float)
    y = rng.permutation(20).astype(float)
    expected = float(np.corrcoef(np.argsort(np.argsort(x)),
                                 np.argsort(np.argsort(y)))[0, 1])
    assert spearman_rho(x, y) == pytest.approx(expected, abs=1e-12)
