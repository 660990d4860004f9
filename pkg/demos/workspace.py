"""Shared helper: materialize and run the demo workspace once, then reuse it."""

from __future__ import annotations

from pathlib import Path

from amrs.config import RunConfig, load_config
from amrs.fixtures import write_demo_inputs
from amrs.pipeline import run_ingest, run_score

ROOT = Path(__file__).parent / "demo_workspace"


def demo_config(scored: bool = True) -> RunConfig:
    """Build (or reuse) the seed-42 demo workspace next to the demo scripts."""
    config_path = ROOT / "config.yaml"
    if not config_path.exists():
        print(f"building demo inputs under {ROOT} ...")
        write_demo_inputs(ROOT, seed=42)
    config = load_config(config_path)
    if scored and not (config.processed_root / "scored" / "GME.json").exists():
        print("ingesting and scoring the demo corpus (takes ~10 s) ...")
        run_ingest(config)
        run_score(config)
    return config
