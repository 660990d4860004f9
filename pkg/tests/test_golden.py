"""Frozen-fixture golden values: scoring changes must be deliberate.

Regenerate with `python -m tests.make_golden` after an intentional change and
review the diff. Comparisons are exact: the pipeline is deterministic.
"""

from __future__ import annotations

import json
from datetime import date
from pathlib import Path


from .conftest import DemoRun
from .make_golden import JAN_END, JAN_START

GOLDEN_DIR = Path(__file__).parent / "golden"


def _load(name: str):
    return json.loads((GOLDEN_DIR / name).read_text())


def test_gme_january_scores_match_golden(demo_run: DemoRun):
    from amrs.types import ScoredWindow
    golden = _load("gme_scored_jan.json")
    scored = demo_run.store.read("scored", "GME", ScoredWindow)
    observed = {w.date.isoformat(): [w.risk_score, w.s_vol, w.s_sent, w.s_bot,
                                     w.s_coord, w.s_mkt]
                for w in scored if JAN_START <= w.date <= JAN_END}
    assert observed == golden


def test_gme_january_calibration_targets(demo_run: DemoRun):
    golden = _load("gme_scored_jan.json")
    risks = {day: values[0] for day, values in golden.items()}
    peak = max(risks.values())
    assert 0.4 <= peak <= 0.75
    event = date(2021, 1, 27).isoformat()
    pre_event_alerts = sum(1 for day, risk in risks.items()
                           if day < event and risk > 0.55)
    assert pre_event_alerts >= 3


def test_event_day_social_signature(demo_run: DemoRun):
    # a campaign flare day must show dense near-duplicates and bot-heavy flow
    from amrs.types import FusedWindow
    fused = demo_run.store.read("fused", "GME", FusedWindow)
    flare = next(w for w in fused if w.date == date(2020, 12, 15))
    assert flare.coordination_score >= 0.2
    assert flare.bot_heavy_post_ratio >= 0.3


def test_forward_walk_rows_match_golden(demo_run: DemoRun):
    from amrs.evaluation import forward_walk
    from amrs.types import FusedWindow
    golden = _load("forward_walk.json")
    fused = {t: demo_run.store.read("fused", t, FusedWindow)
             for t in demo_run.config.tickers}
    rows = forward_walk(list(demo_run.labels), fused, 0.5,
                        demo_run.config.weights, demo_run.config.suspicion)
    observed = [[r.ticker, r.date.isoformat(), r.true_label, r.predicted_label,
                 r.risk_score] for r in rows]
    assert observed == golden


def test_threshold_sweep_matches_golden(demo_run: DemoRun):
    from amrs.evaluation import forward_walk, threshold_sweep
    from amrs.types import FusedWindow
    golden = _load("threshold_sweep.json")
    fused = {t: demo_run.store.read("fused", t, FusedWindow)
             for t in demo_run.config.tickers}
    rows = forward_walk(list(demo_run.labels), fused, 0.5,
                        demo_run.config.weights, demo_run.config.suspicion)
    observed = [{"threshold": r.threshold, "tp": r.tp, "fp": r.fp, "tn": r.tn,
                 "fn": r.fn, "precision": r.precision, "recall": r.recall,
                 "f1": r.f1}
                for r in threshold_sweep(rows, [0.2, 0.3, 0.4, 0.5, 0.6, 0.7])]
    assert observed == golden


def test_ablation_matches_golden(demo_run: DemoRun):
    from amrs.studies import ablation_run
    from amrs.types import FusedWindow
    golden = _load("ablation_jan.json")
    fused = demo_run.store.read("fused", "GME", FusedWindow)
    window = [w for w in fused
              if demo_run.config.evaluation.ablation_start <= w.date
              <= demo_run.config.evaluation.ablation_end]
    observed = [{"name": r.name, "mean": r.mean_score, "std": r.std_score,
                 "max": r.max_score, "high_risk_days": r.high_risk_days,
                 "delta_pct": r.delta_pct} for r in ablation_run(window)]
    assert observed == golden


def test_weight_sensitivity_matches_golden(demo_run: DemoRun):
    from amrs.studies import weight_sensitivity
    from amrs.types import FusedWindow
    golden = _load("weight_sensitivity_rho.json")
    fused = demo_run.store.read("fused", "GME", FusedWindow)
    results = weight_sensitivity(fused, demo_run.config.weights, 0.20, 50, 42)
    assert {r.name: r.spearman_rho for r in results} == golden
    # rank stability on the frozen fixture: every perturbed config stays close
    assert min(golden.values()) > 0.9


def test_lead_time_matches_golden(demo_run: DemoRun):
    from amrs.evaluation import lead_time
    from amrs.types import ScoredWindow
    golden = _load("lead_time.json")
    observed = []
    events = [l for l in demo_run.labels if l.label == 1]
    for label in sorted(events, key=lambda l: (l.ticker, l.date)):
        scored = demo_run.store.read("scored", label.ticker, ScoredWindow)
        record = lead_time(scored, f"{label.ticker}-{label.date.isoformat()}",
                           label.date, demo_run.config.thresholds.alert,
                           demo_run.config.evaluation.lead_time_lookback)
        observed.append({"ticker": record.ticker,
                         "event_start": record.event_start_date.isoformat(),
                         "first_alert": record.first_alert_date.isoformat()
                         if record.first_alert_date else None,
                         "lead_time_days": record.lead_time_days,
                         "detected_pre_event": record.detected_pre_event,
                         "max_risk_pre_event": record.max_risk_pre_event})
    assert observed == golden
