"""Leakage-free evaluation: forward walk, threshold sweeps, log joins, lead time."""

from __future__ import annotations

from datetime import date
from typing import Mapping, Optional, Sequence

from .errors import InsufficientHistory, MissingCoverage
from .metrics import MetricsReport, confusion_and_metrics
from .scoring import SuspicionParams, WeightConfig, score_pipeline
from .types import (ForwardEvalRow, FusedWindow, GroundTruthLabel,
                    LeadTimeRecord, PredictionLogEntry, ScoredWindow)


def forward_walk(labels: Sequence[GroundTruthLabel],
                 fused_by_ticker: Mapping[str, Sequence[FusedWindow]],
                 threshold: float,
                 weights: WeightConfig = WeightConfig(),
                 suspicion: SuspicionParams = SuspicionParams(),
                 ) -> list[ForwardEvalRow]:
    """Score each labeled day on the data prefix ending at that day.

    Every labeled (ticker, date) needs a fused row; the prefix score is also
    compared against the full-series run so any accidental look-ahead in the
    scoring path fails loudly instead of leaking.
    """
    full_runs: dict[str, list[ScoredWindow]] = {}
    rows: list[ForwardEvalRow] = []
    for label in sorted(labels, key=lambda l: (l.ticker, l.date)):
        fused = fused_by_ticker.get(label.ticker)
        if not fused:
            raise MissingCoverage(label.ticker, label.date)
        prefix = [w for w in fused if w.date <= label.date]
        if not prefix or prefix[-1].date != label.date:
            raise MissingCoverage(label.ticker, label.date)
        scored = score_pipeline(prefix, weights, suspicion)
        score = scored[-1].risk_score

        if label.ticker not in full_runs:
            full_runs[label.ticker] = score_pipeline(list(fused), weights, suspicion)
        full_score = full_runs[label.ticker][len(prefix) - 1].risk_score
        if full_score != score:
            raise AssertionError(
                f"causality violation for {label.ticker} {label.date}: "
                f"prefix score {score!r} != full-series score {full_score!r}")

        rows.append(ForwardEvalRow(ticker=label.ticker, date=label.date,
                                   true_label=label.label,
                                   predicted_label=int(score >= threshold),
                                   risk_score=score))
    return rows


def metrics_for_rows(rows: Sequence[ForwardEvalRow], threshold: float) -> MetricsReport:
    return confusion_and_metrics([r.risk_score for r in rows],
                                 [r.true_label for r in rows], threshold)


def threshold_sweep(rows: Sequence[ForwardEvalRow],
                    thresholds: Sequence[float]) -> list[MetricsReport]:
    """One MetricsReport per threshold over the same evaluation rows."""
    for threshold in thresholds:
        if not 0.0 <= threshold <= 1.0:
            raise ValueError(f"threshold {threshold} outside [0, 1]")
    return [metrics_for_rows(rows, threshold) for threshold in thresholds]


def join_log_with_labels(entries: Sequence[PredictionLogEntry],
                         labels: Sequence[GroundTruthLabel]) -> list[ForwardEvalRow]:
    """Inner join on (ticker, date); the latest-timestamped entry wins."""
    latest: dict[tuple[str, date], PredictionLogEntry] = {}
    for entry in entries:
        key = (entry.ticker, entry.date)
        kept = latest.get(key)
        if kept is None or entry.timestamp >= kept.timestamp:
            latest[key] = entry
    rows: list[ForwardEvalRow] = []
    for label in sorted(labels, key=lambda l: (l.ticker, l.date)):
        entry = latest.get((label.ticker, label.date))
        if entry is None:
            continue
        rows.append(ForwardEvalRow(ticker=label.ticker, date=label.date,
                                   true_label=label.label,
                                   predicted_label=entry.predicted_label,
                                   risk_score=entry.risk_score))
    return rows


def lead_time(scored: Sequence[ScoredWindow], event_id: str, event_start: date,
              alert_threshold: float, lookback: int = 45) -> LeadTimeRecord:
    """Earliest pre-event alert within the trailing lookback window.

    The window is the ``lookback`` trading days strictly before event_start
    (series calendar). An alert on event_start itself never counts. Lead time
    is the trading-day distance from the first alert to the event.
    """
    if not scored:
        raise InsufficientHistory("empty scored series")
    dates = [w.date for w in scored]
    if event_start < dates[0] or event_start > dates[-1]:
        raise InsufficientHistory(
            f"event_start {event_start} outside scored range {dates[0]}..{dates[-1]}")
    event_idx = next(i for i, d in enumerate(dates) if d >= event_start)
    if event_idx < lookback:
        raise InsufficientHistory(
            f"only {event_idx} trading days precede {event_start}, need {lookback}")

    window = scored[event_idx - lookback:event_idx]
    ticker = scored[0].ticker
    first_alert: Optional[date] = None
    for w in window:
        if w.risk_score >= alert_threshold:
            first_alert = w.date
            break
    max_risk = max(w.risk_score for w in window)
    if first_alert is None:
        return LeadTimeRecord(ticker=ticker, event_id=event_id,
                              event_start_date=event_start, first_alert_date=None,
                              lead_time_days=None, detected_pre_event=False,
                              max_risk_pre_event=max_risk)
    alert_idx = dates.index(first_alert)
    return LeadTimeRecord(ticker=ticker, event_id=event_id,
                          event_start_date=event_start, first_alert_date=first_alert,
                          lead_time_days=event_idx - alert_idx,
                          detected_pre_event=True, max_risk_pre_event=max_risk)
