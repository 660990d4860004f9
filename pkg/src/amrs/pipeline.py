"""End-to-end pipeline stages behind the CLI: ingest, score, evaluate.

Each stage reads and writes through the columnar store so reruns with the
same config are byte-identical. Evaluation modes emit CSV reports under the
configured reports directory and return a printable summary.
"""

from __future__ import annotations

import csv
import warnings
from datetime import date
from pathlib import Path
from typing import Iterable, Sequence

from .config import RunConfig
from .errors import MissingStage
from .evaluation import (forward_walk, join_log_with_labels, lead_time,
                         metrics_for_rows, threshold_sweep)
from .baselines import BASELINES
from .fusion import fuse_posts
from .ingest import load_ground_truth, load_ohlcv
from .market import market_feature_table
from .metrics import MetricsReport
from .predlog import PredictionLog, end_of_trading_day
from .scoring import score_pipeline
from .sentiment import LexiconScorer, load_lexicon
from .social import apply_lexicon_scores
from .store import ColumnStore
from .studies import ablation_run, weight_sensitivity
from .synthetic import generate_synthetic_social
from .types import (AuthorStats, DailyMarketFeatures, ForwardEvalRow,
                    FusedWindow, GroundTruthLabel, PostRecord,
                    PredictionLogEntry, ScoredWindow)

EVALUATION_MODES = ("forward_walk", "prospective", "lead_time", "thresholds",
                    "baselines", "ablation", "weights")


def _store(config: RunConfig) -> ColumnStore:
    return ColumnStore(config.processed_root)


def _scorer(config: RunConfig) -> LexiconScorer:
    if config.lexicon_path is not None:
        return LexiconScorer(load_lexicon(config.lexicon_path))
    return LexiconScorer()


def run_ingest(config: RunConfig) -> dict[str, dict[str, int]]:
    """Load OHLCV, generate the social corpus, persist raw_social/market stages."""
    store = _store(config)
    scorer = _scorer(config)
    counts: dict[str, dict[str, int]] = {}
    for ticker in config.tickers:
        bars = load_ohlcv(config.ohlcv_dir / f"{ticker}.csv", ticker)
        market_rows = market_feature_table(bars, config.rolling)
        store.write("market", ticker, market_rows, DailyMarketFeatures)

        scenario = config.scenarios.get(ticker)
        if scenario is not None:
            posts, authors = generate_synthetic_social(scenario)
            posts = apply_lexicon_scores(posts, scorer)
        else:
            posts, authors = [], []
        store.write("raw_social", ticker, posts, PostRecord)
        store.write("raw_authors", ticker, authors, AuthorStats)
        counts[ticker] = {"bars": len(market_rows), "posts": len(posts),
                          "authors": len(authors)}
    return counts


def _read_market(store: ColumnStore, ticker: str) -> list[DailyMarketFeatures]:
    if not store.exists("market", ticker):
        raise MissingStage(f"market stage missing for {ticker}; run ingest first")
    return store.read("market", ticker, DailyMarketFeatures)


def run_score(config: RunConfig) -> dict[str, dict[str, object]]:
    """Fuse persisted stages and score each ticker; writes fused and scored."""
    store = _store(config)
    summaries: dict[str, dict[str, object]] = {}
    for ticker in config.tickers:
        market = _read_market(store, ticker)
        if not store.exists("raw_social", ticker):
            raise MissingStage(f"raw_social stage missing for {ticker}; run ingest first")
        posts = store.read("raw_social", ticker, PostRecord)
        authors = store.read("raw_authors", ticker, AuthorStats)
        stats = {a.author_id: a for a in authors}

        fused = fuse_posts(ticker, posts, stats, market,
                           config.sentiment_weights, config.bot_params,
                           config.coord_params)
        if not fused:
            warnings.warn(f"{ticker}: empty fused input, writing empty scored stage")
        store.write("fused", ticker, fused, FusedWindow)
        scored = score_pipeline(fused, config.weights, config.suspicion)
        store.write("scored", ticker, scored, ScoredWindow)
        suspicious = [w.date.isoformat() for w in scored if w.is_suspicious]
        summaries[ticker] = {"days": len(scored), "suspicious": suspicious,
                             "max_risk": max((w.risk_score for w in scored), default=0.0)}
    return summaries


def _load_fused(config: RunConfig) -> dict[str, list[FusedWindow]]:
    store = _store(config)
    fused: dict[str, list[FusedWindow]] = {}
    for ticker in config.tickers:
        if not store.exists("fused", ticker):
            raise MissingStage(f"fused stage missing for {ticker}; run score first")
        fused[ticker] = store.read("fused", ticker, FusedWindow)
    return fused


def _load_scored(config: RunConfig, ticker: str) -> list[ScoredWindow]:
    store = _store(config)
    if not store.exists("scored", ticker):
        raise MissingStage(f"scored stage missing for {ticker}; run score first")
    return store.read("scored", ticker, ScoredWindow)


def _labels(config: RunConfig) -> list[GroundTruthLabel]:
    return load_ground_truth(config.ground_truth_path)


def _write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence[object]]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(list(header))
        for row in rows:
            writer.writerow([_cell(value) for value in row])


def _cell(value: object) -> object:
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, date):
        return value.isoformat()
    if value is None:
        return ""
    return value


def _metrics_row(report: MetricsReport) -> list[object]:
    return [report.threshold, report.tp, report.fp, report.tn, report.fn,
            report.precision, report.recall, report.f1, report.roc_auc,
            report.pr_auc]

_METRICS_HEADER = ["threshold", "tp", "fp", "tn", "fn", "precision", "recall",
                   "f1", "roc_auc", "pr_auc"]


def _eval_rows_csv(path: Path, rows: Sequence[ForwardEvalRow]) -> None:
    _write_csv(path, ["ticker", "date", "true_label", "predicted_label", "risk_score"],
               ([r.ticker, r.date, r.true_label, r.predicted_label, r.risk_score]
                for r in rows))


def run_evaluate(config: RunConfig, mode: str) -> tuple[list[Path], str]:
    """Dispatch one evaluation mode; returns written report paths and a summary."""
    if mode not in EVALUATION_MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {EVALUATION_MODES}")
    reports = config.reports_dir
    if mode == "forward_walk":
        labels = _labels(config)
        rows = forward_walk(labels, _load_fused(config), config.thresholds.operating,
                            config.weights, config.suspicion)
        report = metrics_for_rows(rows, config.thresholds.operating)
        rows_path = reports / "forward_walk.csv"
        metrics_path = reports / "forward_walk_metrics.csv"
        _eval_rows_csv(rows_path, rows)
        _write_csv(metrics_path, _METRICS_HEADER, [_metrics_row(report)])
        summary = (f"forward walk: {len(rows)} labeled days at threshold "
                   f"{config.thresholds.operating}: TP={report.tp} FP={report.fp} "
                   f"TN={report.tn} FN={report.fn} ROC-AUC={report.roc_auc:.3f} "
                   f"PR-AUC={report.pr_auc:.3f}")
        return [rows_path, metrics_path], summary

    if mode == "prospective":
        labels = _labels(config)
        log = PredictionLog(config.prediction_log_path)
        run_id = f"{config.model_version}-seed{config.seed}"
        threshold = config.thresholds.prospective
        for label in sorted(labels, key=lambda l: (l.ticker, l.date)):
            scored = _load_scored(config, label.ticker)
            row = next((w for w in scored if w.date == label.date), None)
            if row is None:
                raise MissingStage(f"no scored row for {label.ticker} {label.date}")
            log.append(PredictionLogEntry(
                timestamp=end_of_trading_day(label.date), date=label.date,
                ticker=label.ticker, risk_score=row.risk_score,
                predicted_label=int(row.risk_score >= threshold),
                model_version=config.model_version, run_id=run_id,
                extra="{}"))
        rows = join_log_with_labels(log.read(), labels)
        report = metrics_for_rows(rows, threshold)
        rows_path = reports / "prospective.csv"
        metrics_path = reports / "prospective_metrics.csv"
        _eval_rows_csv(rows_path, rows)
        _write_csv(metrics_path, _METRICS_HEADER, [_metrics_row(report)])
        summary = (f"prospective log: {len(rows)} joined days at threshold {threshold}: "
                   f"TP={report.tp} FP={report.fp} TN={report.tn} FN={report.fn}")
        return [rows_path, metrics_path], summary

    if mode == "lead_time":
        labels = [l for l in _labels(config) if l.label == 1]
        records = []
        for label in sorted(labels, key=lambda l: (l.ticker, l.date)):
            scored = _load_scored(config, label.ticker)
            records.append(lead_time(scored, f"{label.ticker}-{label.date.isoformat()}",
                                     label.date, config.thresholds.alert,
                                     config.evaluation.lead_time_lookback))
        path = reports / "lead_time.csv"
        _write_csv(path, ["ticker", "event_id", "event_start_date", "first_alert_date",
                          "lead_time_days", "detected_pre_event", "max_risk_pre_event"],
                   ([r.ticker, r.event_id, r.event_start_date, r.first_alert_date,
                     r.lead_time_days, r.detected_pre_event, r.max_risk_pre_event]
                    for r in records))
        detected = sum(1 for r in records if r.detected_pre_event)
        summary = (f"lead time at alert threshold {config.thresholds.alert}: "
                   f"{detected}/{len(records)} events detected pre-event")
        return [path], summary

    if mode == "thresholds":
        labels = _labels(config)
        rows = forward_walk(labels, _load_fused(config), config.thresholds.operating,
                            config.weights, config.suspicion)
        sweep = threshold_sweep(rows, config.evaluation.sweep_thresholds)
        path = reports / "thresholds.csv"
        _write_csv(path, _METRICS_HEADER, (_metrics_row(r) for r in sweep))
        lines = [f"  tau={r.threshold:.2f}: TP={r.tp} FP={r.fp} recall={r.recall:.3f}"
                 for r in sweep]
        return [path], "threshold sweep:\n" + "\n".join(lines)

    if mode == "baselines":
        fused_by_ticker = _load_fused(config)
        path = reports / "baselines.csv"
        rows = []
        for ticker in config.tickers:
            fused = fused_by_ticker[ticker]
            series = {name: fn(fused, config.baseline_params)
                      for name, fn in BASELINES.items()}
            for i, window in enumerate(fused):
                rows.append([ticker, window.date, series["vt"][i], series["st"][i],
                             series["cr"][i], series["ma"][i]])
        _write_csv(path, ["ticker", "date", "vt", "st", "cr", "ma"], rows)
        return [path], f"baselines written for {len(config.tickers)} tickers"

    if mode == "ablation":
        ticker = config.evaluation.ablation_ticker
        fused = _load_fused(config)[ticker]
        lo = config.evaluation.ablation_start
        hi = config.evaluation.ablation_end
        if lo is not None:
            fused = [w for w in fused if w.date >= lo]
        if hi is not None:
            fused = [w for w in fused if w.date <= hi]
        results = ablation_run(fused, base=config.weights)
        path = reports / "ablation.csv"
        _write_csv(path, ["configuration", "mean_score", "std_score", "max_score",
                          "high_risk_days", "delta_pct"],
                   ([r.name, r.mean_score, r.std_score, r.max_score,
                     r.high_risk_days, r.delta_pct] for r in results))
        lines = [f"  {r.name}: mean={r.mean_score:.3f}"
                 + (f" ({r.delta_pct:+.1f}%)" if r.delta_pct is not None else "")
                 for r in results]
        return [path], f"ablation on {ticker}:\n" + "\n".join(lines)

    # mode == "weights"
    ticker = config.evaluation.sensitivity_ticker
    fused = _load_fused(config)[ticker]
    labels_by_date = {l.date: l.label for l in _labels(config) if l.ticker == ticker}
    results = weight_sensitivity(fused, config.weights, 0.20,
                                 config.evaluation.sensitivity_configs,
                                 config.seed, labels_by_date or None)
    path = reports / "weight_sensitivity.csv"
    _write_csv(path, ["configuration", "w_vol", "w_sent", "w_bot", "w_coord",
                      "w_mkt", "spearman_rho", "roc_auc"],
               ([r.name, *r.weights, r.spearman_rho, r.roc_auc] for r in results))
    min_rho = min(r.spearman_rho for r in results)
    return [path], (f"weight sensitivity on {ticker}: {len(results)} configs, "
                    f"min Spearman rho {min_rho:.4f}")
