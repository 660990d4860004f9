"""Component ablations and weight-sensitivity analysis over fused series."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import numpy as np

from .errors import UnknownComponent
from .metrics import roc_auc, spearman_rho
from .scoring import COMPONENTS, WeightConfig, score_pipeline
from .types import FusedWindow

HIGH_RISK_CUTOFF = 0.5

# Standard ablation set: leave-one-out plus category isolations.
DEFAULT_ABLATIONS: tuple[tuple[str, tuple[str, ...], str], ...] = (
    ("no_social_volume", ("vol",), "remove"),
    ("no_sentiment", ("sent",), "remove"),
    ("no_bot_detection", ("bot",), "remove"),
    ("no_coordination", ("coord",), "remove"),
    ("no_market_signals", ("mkt",), "remove"),
    ("social_only", ("vol", "sent"), "keep"),
    ("market_only", ("mkt",), "keep"),
    ("manipulation_only", ("bot", "coord"), "keep"),
)


@dataclass(frozen=True, slots=True)
class AblationSpec:
    name: str
    components: tuple[str, ...]
    mode: str  # "remove" zeroes listed weights; "keep" zeroes all others

    def __post_init__(self) -> None:
        if self.mode not in ("remove", "keep"):
            raise ValueError("mode must be 'remove' or 'keep'")
        for component in self.components:
            if component not in COMPONENTS:
                raise UnknownComponent(f"unknown component {self.components}")


@dataclass(frozen=True, slots=True)
class AblationResult:
    name: str
    mean_score: float
    std_score: float
    max_score: float
    high_risk_days: int
    delta_pct: Optional[float]  # vs the full model; None when full mean is 0


def _weights_dict(weights: WeightConfig) -> dict[str, float]:
    return dict(zip(COMPONENTS, weights.as_tuple()))


def _renormalized(raw: Mapping[str, float]) -> WeightConfig:
    total = sum(raw.values())
    if total <= 0:
        raise ValueError("at least one component weight must stay positive")
    return WeightConfig(*(raw[name] / total for name in COMPONENTS))


def ablated_weights(base: WeightConfig, spec: AblationSpec) -> WeightConfig:
    """Zero out the ablated components and renormalize the rest to sum 1."""
    weights = _weights_dict(base)
    if spec.mode == "remove":
        for name in spec.components:
            weights[name] = 0.0
    else:
        for name in COMPONENTS:
            if name not in spec.components:
                weights[name] = 0.0
    return _renormalized(weights)


def _summary(name: str, scores: Sequence[float],
             full_mean: Optional[float]) -> AblationResult:
    arr = np.asarray(scores, dtype=float)
    mean = float(arr.mean())
    if full_mean is None:
        delta = None
    elif full_mean == 0.0:
        delta = None
    else:
        delta = (mean - full_mean) / full_mean * 100.0
    return AblationResult(name=name, mean_score=mean, std_score=float(arr.std()),
                          max_score=float(arr.max()),
                          high_risk_days=int((arr >= HIGH_RISK_CUTOFF).sum()),
                          delta_pct=delta)


def ablation_run(fused: Sequence[FusedWindow],
                 specs: Sequence[AblationSpec] = tuple(AblationSpec(*s) for s in DEFAULT_ABLATIONS),
                 base: WeightConfig = WeightConfig()) -> list[AblationResult]:
    """Score the series under each ablated weighting; the full model leads."""
    full_scores = [w.risk_score for w in score_pipeline(list(fused), base)]
    full = _summary("full", full_scores, None)
    results = [full]
    for spec in specs:
        weights = ablated_weights(base, spec)
        scores = [w.risk_score for w in score_pipeline(list(fused), weights)]
        results.append(_summary(spec.name, scores, full.mean_score))
    return results


@dataclass(frozen=True, slots=True)
class SensitivityResult:
    name: str
    weights: tuple[float, float, float, float, float]
    spearman_rho: float
    roc_auc: Optional[float]


def perturbed_single(base: WeightConfig, component: str, fraction: float) -> WeightConfig:
    if component not in COMPONENTS:
        raise UnknownComponent(component)
    weights = _weights_dict(base)
    weights[component] *= 1.0 + fraction
    return _renormalized(weights)


def weight_sensitivity(fused: Sequence[FusedWindow],
                       base: WeightConfig = WeightConfig(),
                       perturbation: float = 0.20,
                       n_configs: int = 50,
                       seed: int = 42,
                       labels_by_date: Optional[Mapping] = None,
                       ) -> list[SensitivityResult]:
    """Rank stability of daily scores under weight perturbations.

    Each single weight is moved by +/-perturbation (renormalized), then random
    joint perturbations fill the grid up to n_configs. Spearman rho compares
    each perturbed daily score series against the base ranking; ROC-AUC is
    reported when date-keyed labels are supplied.
    """
    fused = list(fused)
    base_scores = [w.risk_score for w in score_pipeline(fused, base)]

    configs: list[tuple[str, WeightConfig]] = []
    for component in COMPONENTS:
        for sign in (+1.0, -1.0):
            name = f"{component}{'+' if sign > 0 else '-'}{perturbation:.0%}"
            configs.append((name, perturbed_single(base, component, sign * perturbation)))
    rng = np.random.default_rng(seed)
    while len(configs) < n_configs:
        factors = rng.uniform(1.0 - perturbation, 1.0 + perturbation, size=len(COMPONENTS))
        raw = {name: weight * factor for (name, weight), factor
               in zip(_weights_dict(base).items(), factors)}
        configs.append((f"random_{len(configs):02d}", _renormalized(raw)))

    label_pairs = None
    if labels_by_date is not None:
        label_pairs = [(i, int(labels_by_date[w.date]))
                       for i, w in enumerate(fused) if w.date in labels_by_date]

    results = []
    for name, weights in configs:
        scores = [w.risk_score for w in score_pipeline(fused, weights)]
        auc = None
        if label_pairs:
            auc = roc_auc([scores[i] for i, _ in label_pairs],
                          [label for _, label in label_pairs])
        results.append(SensitivityResult(name=name, weights=weights.as_tuple(),
                                         spearman_rho=spearman_rho(base_scores, scores),
                                         roc_auc=auc))
    return results
