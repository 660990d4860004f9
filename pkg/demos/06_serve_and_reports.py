"""Generate every evaluation report, then show how to serve the API.

The HTTP layer is read-only: it serves persisted stage values and report
files verbatim, so analyst threshold exploration happens entirely client-side.
"""

from amrs.pipeline import EVALUATION_MODES, run_evaluate
from workspace import ROOT, demo_config

config = demo_config()

for mode in EVALUATION_MODES:
    paths, summary = run_evaluate(config, mode)
    print(f"--- {mode} ---")
    print(summary)
    for path in paths:
        print(f"  wrote {path.relative_to(ROOT)}")
    print()

print("serve the dashboard API with:")
print(f"  amrs serve --config {ROOT / 'config.yaml'} --port 8000")
print("then try:")
print("  curl http://127.0.0.1:8000/api/tickers")
print("  curl 'http://127.0.0.1:8000/api/windows?ticker=GME&min_level=High'")
print("  curl http://127.0.0.1:8000/api/windows/GME/2021-01-27")
print("  curl http://127.0.0.1:8000/api/posts/GME/2021-01-27")
print("  curl http://127.0.0.1:8000/api/leadtime/GME")
