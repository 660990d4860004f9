"""Ablations and weight-sensitivity analysis."""

from __future__ import annotations

from datetime import date

import pytest

from amrs.errors import UnknownComponent
from amrs.scoring import WeightConfig
from amrs.studies import (AblationSpec, ablated_weights, ablation_run,
                          perturbed_single, weight_sensitivity)

from .conftest import fused_series


def _active_series(n: int = 40):
    values = [dict(social_volume=20 + (i * 13) % 17,
                   avg_sentiment=0.1 + 0.02 * (i % 5),
                   bot_heavy_post_ratio=0.05 + 0.01 * (i % 7),
                   coordination_score=0.02 + 0.01 * (i % 3),
                   volume_zscore=float((i * 7) % 5) - 1.0,
                   daily_return=0.01 * ((i % 9) - 4))
              for i in range(n)]
    return fused_series("XYZ", date(2021, 1, 4), values)


def test_remove_renormalizes_to_unit_sum():
    weights = ablated_weights(WeightConfig(), AblationSpec("no_coord", ("coord",), "remove"))
    assert weights.w_coord == 0.0
    assert sum(weights.as_tuple()) == pytest.approx(1.0, abs=1e-12)
    assert weights.w_vol == pytest.approx(0.25 / 0.80, abs=1e-12)


def test_keep_only_isolates_components():
    weights = ablated_weights(WeightConfig(), AblationSpec("mkt_only", ("mkt",), "keep"))
    assert weights.w_mkt == 1.0
    assert weights.w_vol == weights.w_sent == weights.w_bot == weights.w_coord == 0.0


def test_unknown_component_rejected():
    with pytest.raises(UnknownComponent):
        AblationSpec("bad", ("volume",), "remove")
    with pytest.raises(UnknownComponent):
        perturbed_single(WeightConfig(), "nope", 0.2)


def test_keep_only_component_that_is_constant_zero_scores_zero():
    # coordination is identically zero here, so "coordination only" is all-zero
    values = [dict(social_volume=20 + i % 5, coordination_score=0.0)
              for i in range(30)]
    rows = fused_series("XYZ", date(2021, 1, 4), values)
    results = ablation_run(rows, [AblationSpec("coord_only", ("coord",), "keep")])
    by_name = {r.name: r for r in results}
    assert by_name["coord_only"].mean_score == 0.0
    assert by_name["coord_only"].max_score == 0.0
    assert by_name["coord_only"].delta_pct == pytest.approx(-100.0)


def test_market_only_on_calm_market_all_zero():
    # constant price and volume: zscore 0 and return 0 every day
    rows = fused_series("XYZ", date(2021, 1, 4), [dict() for _ in range(40)])
    results = ablation_run(rows, [AblationSpec("market_only", ("mkt",), "keep")])
    market_only = next(r for r in results if r.name == "market_only")
    assert market_only.mean_score == 0.0
    assert market_only.max_score == 0.0
    assert market_only.high_risk_days == 0


def test_full_model_is_baseline_row():
    results = ablation_run(_active_series(), [])
    assert results[0].name == "full"
    assert results[0].delta_pct is None


def test_delta_pct_sign_matches_mean_shift():
    rows = _active_series()
    results = ablation_run(rows, [AblationSpec("no_vol", ("vol",), "remove")])
    full, no_vol = results
    expected = (no_vol.mean_score - full.mean_score) / full.mean_score * 100.0
    assert no_vol.delta_pct == pytest.approx(expected, abs=1e-9)


def test_sensitivity_zero_perturbation_is_identity():
    rows = _active_series(30)
    results = weight_sensitivity(rows, perturbation=0.0, n_configs=12, seed=1)
    assert all(r.spearman_rho == pytest.approx(1.0, abs=1e-12) for r in results)


def test_sensitivity_constant_scores_convention():
    rows = fused_series("XYZ", date(2021, 1, 4), [dict() for _ in range(10)])
    results = weight_sensitivity(rows, n_configs=10, seed=1)
    assert all(r.spearman_rho == 1.0 for r in results)


def test_sensitivity_grid_size_and_unit_sums():
    rows = _active_series(25)
    results = weight_sensitivity(rows, n_configs=50, seed=42)
    assert len(results) == 50
    for r in results:
        assert sum(r.weights) == pytest.approx(1.0, abs=1e-9)
    assert sum(1 for r in results if r.name.startswith("random_")) == 40


def test_sensitivity_deterministic_for_seed():
    rows = _active_series(25)
    first = weight_sensitivity(rows, n_configs=20, seed=7)
    second = weight_sensitivity(rows, n_configs=20, seed=7)
    assert first == second


def test_sensitivity_reports_auc_with_labels():
    rows = _active_series(30)
    labels = {rows[5].date: 0, rows[20].date: 1}
    results = weight_sensitivity(rows, n_configs=12, seed=3, labels_by_date=labels)
    assert all(r.roc_auc is not None for r in results)
