"""Market feature derivation: returns, trailing volume stats, anomaly flag.

Uses the demo GME bars; the late-January volume explosion shows up as
volume_zscore >= 2 days.
"""

from amrs.fixtures import demo_market_bars
from amrs.market import market_feature_table

bars = demo_market_bars("GME", seed=42)
rows = market_feature_table(bars)

print(f"{len(rows)} trading days of GME market features")
print("\nfirst days (warm-up: zscore 0 until 5 observations):")
for row in rows[:6]:
    print(f"  {row.date}  close={row.close:7.2f} ret={row.daily_return:+.3f} "
          f"vol={row.volume:>10,} z={row.volume_zscore:+.2f}")

anomalies = [r for r in rows if r.is_volume_anomaly]
print(f"\n{len(anomalies)} volume-anomaly days (zscore >= 2.0); the January "
      "squeeze window dominates:")
for row in anomalies[:12]:
    print(f"  {row.date}  ret={row.daily_return:+.3f} vol={row.volume:>11,} "
          f"z={row.volume_zscore:+.2f}")

jan_run = [r for r in rows if r.date.isoformat().startswith("2021-01-2")]
print("\nlate January price action:")
for row in jan_run:
    print(f"  {row.date}  close={row.close:8.2f} ret={row.daily_return:+.3f} "
          f"anomaly={'yes' if row.is_volume_anomaly else 'no'}")
