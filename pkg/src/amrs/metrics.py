"""Classification and ranking metrics with explicit degenerate-case conventions.

ROC-AUC uses the rank statistic (ties contribute 0.5); PR-AUC is the
step-interpolated area (precision at each new recall level, thresholds at the
unique scores in descending order). Count-derived ratios define 0/0 as 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np


@dataclass(frozen=True, slots=True)
class MetricsReport:
    threshold: float
    tp: int
    fp: int
    tn: int
    fn: int
    precision: float
    recall: float
    f1: float
    roc_auc: float
    pr_auc: float


def average_ranks(values: Sequence[float]) -> np.ndarray:
    """1-based ranks with ties assigned their average rank."""
    arr = np.asarray(values, dtype=float)
    order = np.argsort(arr, kind="mergesort")
    ranks = np.empty(len(arr), dtype=float)
    i = 0
    while i < len(arr):
        j = i
        while j + 1 < len(arr) and arr[order[j + 1]] == arr[order[i]]:
            j += 1
        ranks[order[i:j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def roc_auc(scores: Sequence[float], labels: Sequence[int]) -> float:
    """Mann-Whitney AUC; a single-class input carries no ranking information (0.5)."""
    labels_arr = np.asarray(labels, dtype=int)
    n_pos = int(labels_arr.sum())
    n_neg = len(labels_arr) - n_pos
    if n_pos == 0 or n_neg == 0:
        return 0.5
    ranks = average_ranks(scores)
    rank_sum = float(ranks[labels_arr == 1].sum())
    return (rank_sum - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)


def pr_auc(scores: Sequence[float], labels: Sequence[int]) -> float:
    """Step-interpolated precision-recall area; no positives gives 0."""
    scores_arr = np.asarray(scores, dtype=float)
    labels_arr = np.asarray(labels, dtype=int)
    n_pos = int(labels_arr.sum())
    if n_pos == 0:
        return 0.0
    order = np.argsort(-scores_arr, kind="mergesort")
    sorted_scores = scores_arr[order]
    sorted_labels = labels_arr[order]

    area = 0.0
    prev_recall = 0.0
    tp = 0
    seen = 0
    i = 0
    n = len(sorted_scores)
    while i < n:
        j = i
        while j + 1 < n and sorted_scores[j + 1] == sorted_scores[i]:
            j += 1
        tp += int(sorted_labels[i:j + 1].sum())
        seen = j + 1
        precision = tp / seen
        recall = tp / n_pos
        area += (recall - prev_recall) * precision
        prev_recall = recall
        i = j + 1
    return area


def _safe_div(num: float, den: float) -> float:
    return num / den if den else 0.0


def confusion_and_metrics(scores: Sequence[float], labels: Sequence[int],
                          threshold: float) -> MetricsReport:
    """Counts at ``score >= threshold`` plus threshold-free ranking AUCs."""
    if len(scores) == 0:
        raise ValueError("need at least one row")
    tp = fp = tn = fn = 0
    for score, label in zip(scores, labels):
        predicted = score >= threshold
        if predicted and label == 1:
            tp += 1
        elif predicted and label == 0:
            fp += 1
        elif not predicted and label == 1:
            fn += 1
        else:
            tn += 1
    precision = _safe_div(tp, tp + fp)
    recall = _safe_div(tp, tp + fn)
    f1 = _safe_div(2 * precision * recall, precision + recall)
    return MetricsReport(threshold=threshold, tp=tp, fp=fp, tn=tn, fn=fn,
                         precision=precision, recall=recall, f1=f1,
                         roc_auc=roc_auc(scores, labels),
                         pr_auc=pr_auc(scores, labels))


def spearman_rho(x: Sequence[float], y: Sequence[float]) -> float:
    """Spearman rank correlation; a constant series has no ranking to disturb (1.0)."""
    if len(x) != len(y):
        raise ValueError("series must have equal length")
    if len(x) < 2:
        return 1.0
    rx = average_ranks(x)
    ry = average_ranks(y)
    sx = rx.std()
    sy = ry.std()
    if sx == 0.0 or sy == 0.0:
        return 1.0
    return float(((rx - rx.mean()) * (ry - ry.mean())).mean() / (sx * sy))
