"""Leakage-free evaluation against the 33 labeled ticker-days.

Each labeled day is scored on the data prefix ending at that day (and checked
against the full-series run, which must agree bit-for-bit). The threshold
sweep shows the precision/recall trade-off across operating points.
"""

from amrs.evaluation import forward_walk, metrics_for_rows, threshold_sweep
from amrs.ingest import load_ground_truth
from amrs.store import ColumnStore
from amrs.types import FusedWindow
from workspace import demo_config

config = demo_config()
store = ColumnStore(config.processed_root)
labels = load_ground_truth(config.ground_truth_path)
fused = {t: store.read("fused", t, FusedWindow) for t in config.tickers}

rows = forward_walk(labels, fused, threshold=0.5, weights=config.weights,
                    suspicion=config.suspicion)
report = metrics_for_rows(rows, 0.5)

print(f"forward walk over {len(rows)} labeled ticker-days at threshold 0.5")
print(f"  TP={report.tp} FP={report.fp} TN={report.tn} FN={report.fn}")
print(f"  precision={report.precision:.3f} recall={report.recall:.3f} "
      f"f1={report.f1:.3f}")
print(f"  ROC-AUC={report.roc_auc:.3f} PR-AUC={report.pr_auc:.3f}")

print("\nlabeled days ranked by risk score:")
for row in sorted(rows, key=lambda r: -r.risk_score)[:8]:
    tag = "EVENT " if row.true_label else "normal"
    print(f"  {tag} {row.ticker:6s} {row.date}  {row.risk_score:.3f}")

print("\nthreshold sweep:")
print("  tau   TP  FP  TN  FN  precision recall f1")
for r in threshold_sweep(rows, config.evaluation.sweep_thresholds):
    print(f"  {r.threshold:.2f}  {r.tp:2d}  {r.fp:2d}  {r.tn:2d}  {r.fn:2d}"
          f"  {r.precision:9.3f} {r.recall:6.3f} {r.f1:5.3f}")
print("\nalert counts shrink monotonically as the threshold rises; ranking "
      "metrics (AUCs) are threshold-free.")
