"""Score the fused windows and walk the GME risk timeline.

The campaign's volume/coordination/bot build-up pushes the risk score above
the 0.55 alert line weeks before the market spike peaks; the suspicious flag
fires only on High days with a supporting feature anomaly.
"""

from datetime import date

from amrs.store import ColumnStore
from amrs.types import ScoredWindow
from workspace import demo_config

config = demo_config()
store = ColumnStore(config.processed_root)
scored = store.read("scored", "GME", ScoredWindow)

print(f"GME: {len(scored)} scored days")
suspicious = [w for w in scored if w.is_suspicious]
print(f"suspicious windows: {len(suspicious)}")

print("\nJanuary 2021 timeline (* = risk >= 0.55, ! = suspicious):")
for w in scored:
    if not (date(2021, 1, 1) <= w.date <= date(2021, 2, 5)):
        continue
    bar = "#" * int(round(w.risk_score * 40))
    mark = "!" if w.is_suspicious else ("*" if w.risk_score >= 0.55 else " ")
    print(f"  {w.date} {mark} {w.risk_score:.3f} {bar}")

print("\ncomponent breakdown at the labeled event day (2021-01-27):")
event = next(w for w in scored if w.date == date(2021, 1, 27))
for name, value in [("social volume", event.s_vol), ("sentiment", event.s_sent),
                    ("bot activity", event.s_bot), ("coordination", event.s_coord),
                    ("market anomaly", event.s_mkt)]:
    print(f"  {name:15s} {value:.3f} {'#' * int(round(value * 30))}")
print(f"  -> AMRS {event.risk_score:.3f} ({event.risk_level.value})"
      f"{', suspicious' if event.is_suspicious else ''}")

print("\ntop-10 days by risk across all tickers:")
rows = []
for ticker in config.tickers:
    rows.extend(store.read("scored", ticker, ScoredWindow))
for w in sorted(rows, key=lambda w: -w.risk_score)[:10]:
    print(f"  {w.ticker:6s} {w.date}  {w.risk_score:.3f} ({w.risk_level.value})")
