"""Declarative run configuration: one YAML file, env/CLI overridable."""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from datetime import date
from pathlib import Path
from typing import Any, Optional

import yaml

from .baselines import BaselineParams
from .bots import BotParams
from .coordination import CoordinationParams
from .errors import InvalidConfig
from .market import RollingParams
from .scoring import SuspicionParams, WeightConfig
from .sentiment import SentimentWeights
from .synthetic import EventWindow, SyntheticScenarioConfig

ENV_DATA_ROOT = "AMRS_DATA_ROOT"


@dataclass(frozen=True, slots=True)
class Thresholds:
    operating: float = 0.5       # forward-walk / prospective predicted labels
    alert: float = 0.55          # lead-time early-warning threshold
    prospective: float = 0.5     # prospective-log predicted labels


@dataclass(frozen=True, slots=True)
class EvaluationSettings:
    sweep_thresholds: tuple[float, ...] = (0.2, 0.3, 0.4, 0.5, 0.6, 0.7)
    lead_time_lookback: int = 45
    ablation_ticker: str = "GME"
    # Ablations re-score a study window standalone (fresh normalizer state);
    # None means the full series.
    ablation_start: Optional[date] = None
    ablation_end: Optional[date] = None
    sensitivity_ticker: str = "GME"
    sensitivity_configs: int = 50


@dataclass(frozen=True, slots=True)
class RunConfig:
    tickers: tuple[str, ...]
    start: date
    end: date
    data_root: Path
    ohlcv_dir: Path
    ground_truth_path: Path
    prediction_log_path: Path
    reports_dir: Path
    seed: int = 42
    model_version: str = "amrs-0.1"
    weights: WeightConfig = WeightConfig()
    thresholds: Thresholds = Thresholds()
    suspicion: SuspicionParams = SuspicionParams()
    rolling: RollingParams = RollingParams()
    sentiment_weights: SentimentWeights = SentimentWeights()
    bot_params: BotParams = BotParams()
    coord_params: CoordinationParams = CoordinationParams()
    baseline_params: BaselineParams = BaselineParams()
    evaluation: EvaluationSettings = EvaluationSettings()
    lexicon_path: Optional[Path] = None
    scenarios: dict[str, SyntheticScenarioConfig] = field(default_factory=dict)

    @property
    def processed_root(self) -> Path:
        return self.data_root / "processed"

    def validate(self) -> None:
        if not self.tickers:
            raise InvalidConfig("tickers must be non-empty")
        if self.start > self.end:
            raise InvalidConfig("date_range start must be <= end")
        for ticker, scenario in self.scenarios.items():
            if ticker not in self.tickers:
                raise InvalidConfig(f"scenario for unknown ticker {ticker!r}")
            scenario.validate()


def _as_date(value: Any) -> date:
    if isinstance(value, date):
        return value
    return date.fromisoformat(str(value))


def _scenario(ticker: str, raw: dict[str, Any], default_range: tuple[date, date],
              seed: int) -> SyntheticScenarioConfig:
    events = tuple(
        EventWindow(start=_as_date(e["start"]), end=_as_date(e["end"]),
                    volume_multiplier=float(e.get("volume_multiplier", 1.0)),
                    template_fraction=float(e.get("template_fraction", 0.0)),
                    bot_author_fraction=float(e.get("bot_author_fraction", 0.0)),
                    sentiment_shift=float(e.get("sentiment_shift", 0.0)))
        for e in raw.get("events", ()))
    return SyntheticScenarioConfig(
        ticker=ticker,
        start=_as_date(raw["start"]) if "start" in raw else default_range[0],
        end=_as_date(raw["end"]) if "end" in raw else default_range[1],
        base_posts_per_day=float(raw["base_posts_per_day"]),
        events=events, seed=seed)


def load_config(path: Path | str, *, seed: Optional[int] = None,
                tickers: Optional[tuple[str, ...]] = None,
                threshold: Optional[float] = None) -> RunConfig:
    """Parse a YAML run config, applying env and CLI overrides."""
    path = Path(path)
    try:
        raw = yaml.safe_load(path.read_text(encoding="utf-8"))
    except (OSError, yaml.YAMLError) as exc:
        raise InvalidConfig(f"cannot load config {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise InvalidConfig(f"config {path} must be a mapping")

    try:
        base_dir = path.parent
        data_root = Path(os.environ.get(ENV_DATA_ROOT) or raw.get("data_root", "data"))
        if not data_root.is_absolute():
            data_root = base_dir / data_root

        def _path(key: str, default: str) -> Path:
            p = Path(raw.get("paths", {}).get(key, default))
            return p if p.is_absolute() else data_root / p

        run_seed = seed if seed is not None else int(raw.get("seed", 42))
        date_range = raw.get("date_range", {})
        start = _as_date(date_range["start"])
        end = _as_date(date_range["end"])

        weights_raw = raw.get("weights", {})
        weights = WeightConfig(
            w_vol=float(weights_raw.get("vol", 0.25)),
            w_sent=float(weights_raw.get("sent", 0.15)),
            w_bot=float(weights_raw.get("bot", 0.20)),
            w_coord=float(weights_raw.get("coord", 0.20)),
            w_mkt=float(weights_raw.get("mkt", 0.20)))

        thresholds_raw = raw.get("thresholds", {})
        thresholds = Thresholds(
            operating=float(thresholds_raw.get("operating", 0.5)),
            alert=float(thresholds_raw.get("alert", 0.55)),
            prospective=float(thresholds_raw.get("prospective", 0.5)))
        if threshold is not None:
            thresholds = replace(thresholds, operating=threshold)

        suspicion = SuspicionParams(
            volume_zscore_cut=float(thresholds_raw.get("volume_zscore", 2.0)),
            abs_return_cut=float(thresholds_raw.get("abs_return", 0.05)),
            coordination_cut=float(thresholds_raw.get("coordination", 0.5)),
            bot_ratio_cut=float(thresholds_raw.get("bot_ratio", 0.3)))

        rolling_raw = raw.get("rolling", {})
        rolling = RollingParams(window=int(rolling_raw.get("window", 20)),
                                min_periods=int(rolling_raw.get("min_periods", 5)))

        sentiment_raw = raw.get("sentiment", {})
        sentiment_weights = SentimentWeights(
            w_lexicon=float(sentiment_raw.get("w_lexicon", 0.4)),
            w_aux=float(sentiment_raw.get("w_aux", 0.6)))
        lexicon_path = sentiment_raw.get("lexicon_path")

        bots_raw = raw.get("bots", {})
        bot_params = BotParams(
            w_frequency=float(bots_raw.get("w_frequency", 0.7)),
            w_diversity=float(bots_raw.get("w_diversity", 0.3)),
            frequency_threshold=float(bots_raw.get("frequency_threshold", 10)),
            diversity_threshold=int(bots_raw.get("diversity_threshold", 3)),
            flag_cutoff=float(bots_raw.get("flag_cutoff", 0.5)))

        coord_raw = raw.get("coordination", {})
        coord_params = CoordinationParams(
            similarity_threshold=float(coord_raw.get("similarity_threshold", 0.8)),
            max_posts_sampled=int(coord_raw.get("max_posts_sampled", 200)),
            vocab_cap=int(coord_raw.get("vocab_cap", 1000)))

        eval_raw = raw.get("evaluation", {})
        baseline_raw = eval_raw.get("baseline", {})
        baseline_params = BaselineParams(
            vt_p90_mode=str(baseline_raw.get("vt_p90_mode", "expanding")),
            st_scale=float(baseline_raw.get("st_scale", 0.5)),
            baseline_threshold=float(baseline_raw.get("threshold", 0.7)))
        evaluation = EvaluationSettings(
            sweep_thresholds=tuple(float(t) for t in
                                   eval_raw.get("sweep_thresholds",
                                                (0.2, 0.3, 0.4, 0.5, 0.6, 0.7))),
            lead_time_lookback=int(eval_raw.get("lead_time_lookback", 45)),
            ablation_ticker=str(eval_raw.get("ablation_ticker", "GME")),
            ablation_start=_as_date(eval_raw["ablation_start"])
            if "ablation_start" in eval_raw else None,
            ablation_end=_as_date(eval_raw["ablation_end"])
            if "ablation_end" in eval_raw else None,
            sensitivity_ticker=str(eval_raw.get("sensitivity_ticker", "GME")),
            sensitivity_configs=int(eval_raw.get("sensitivity_configs", 50)))

        all_tickers = tuple(str(t) for t in raw.get("tickers", ()))
        selected = tickers if tickers else all_tickers
        scenarios = {ticker: _scenario(ticker, sc, (start, end), run_seed)
                     for ticker, sc in raw.get("scenarios", {}).items()
                     if ticker in selected}

        config = RunConfig(
            tickers=selected, start=start, end=end, data_root=data_root,
            ohlcv_dir=_path("ohlcv_dir", "raw/ohlcv"),
            ground_truth_path=_path("ground_truth", "raw/ground_truth.csv"),
            prediction_log_path=_path("prediction_log", "predictions.jsonl"),
            reports_dir=_path("reports_dir", "reports"),
            seed=run_seed, model_version=str(raw.get("model_version", "amrs-0.1")),
            weights=weights, thresholds=thresholds, suspicion=suspicion,
            rolling=rolling, sentiment_weights=sentiment_weights,
            bot_params=bot_params, coord_params=coord_params,
            baseline_params=baseline_params, evaluation=evaluation,
            lexicon_path=Path(lexicon_path) if lexicon_path else None,
            scenarios=scenarios)
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidConfig(f"config {path}: {exc}") from exc
    config.validate()
    return config
