"""Build the demo workspace: synthetic OHLCV files, labels, run config.

Eight tickers from October 2020 through June 2021. Three of them carry an
engineered manipulation episode (GME and BB peaking in late January, AMC in
early June); the ground-truth table labels those three event days plus thirty
calm control days. Everything is derived from seed 42, so rebuilding the
workspace always produces byte-identical files.
"""

from workspace import ROOT, demo_config

config = demo_config(scored=False)

print(f"workspace root: {ROOT}")
print(f"tickers: {', '.join(config.tickers)}")
print(f"date range: {config.start} .. {config.end}")

print("\nraw inputs:")
for path in sorted((ROOT / "raw").rglob("*.csv")):
    print(f"  {path.relative_to(ROOT)}  ({path.stat().st_size:,} bytes)")

print("\nscenario summary:")
for ticker, scenario in sorted(config.scenarios.items()):
    events = len(scenario.events)
    print(f"  {ticker:6s} base {scenario.base_posts_per_day:5.1f} posts/day, "
          f"{events} event window(s)")

print("\nnext: python 01_social_features.py")
