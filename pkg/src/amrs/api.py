"""Read-only JSON API over the scored datasets.

Serves the persisted stage values verbatim; nothing is rescored here.
Threshold exploration happens client-side against the continuous scores.
"""

from __future__ import annotations

import csv
from datetime import date
from pathlib import Path
from typing import Any, Optional

from fastapi import FastAPI, HTTPException, Query
from fastapi.staticfiles import StaticFiles

from .config import RunConfig
from .fusion import assign_trading_days
from .pipeline import EVALUATION_MODES
from .store import ColumnStore, rows_to_payload
from .types import PostRecord, RiskLevel, ScoredWindow

_LEVEL_ORDER = {RiskLevel.LOW: 0, RiskLevel.MEDIUM: 1, RiskLevel.HIGH: 2}

_REPORT_FILES = {
    "forward_walk": "forward_walk.csv",
    "prospective": "prospective.csv",
    "lead_time": "lead_time.csv",
    "thresholds": "thresholds.csv",
    "baselines": "baselines.csv",
    "ablation": "ablation.csv",
    "weights": "weight_sensitivity.csv",
}


def _rows_as_dicts(rows, row_type) -> list[dict[str, Any]]:
    payload = rows_to_payload(rows, row_type)
    columns = payload["columns"]
    names = [col["name"] for col in payload["schema"]]
    return [{name: columns[name][i] for name in names}
            for i in range(payload["row_count"])]


def _parse_date(value: str, param: str) -> date:
    try:
        return date.fromisoformat(value)
    except ValueError as exc:
        raise HTTPException(status_code=400,
                            detail=f"malformed date for {param!r}: {value!r}") from exc


def create_app(config: RunConfig, frontend_dir: Optional[Path] = None) -> FastAPI:
    app = FastAPI(title="amrs", version="0.1.0")
    store = ColumnStore(config.processed_root)

    def _scored(ticker: str) -> list[ScoredWindow]:
        if ticker not in config.tickers:
            raise HTTPException(status_code=404, detail=f"unknown ticker {ticker!r}")
        if not store.exists("scored", ticker):
            raise HTTPException(status_code=503,
                                detail=f"{ticker} not yet scored; run the pipeline")
        return store.read("scored", ticker, ScoredWindow)

    @app.get("/api/tickers")
    def tickers() -> dict[str, Any]:
        return {"tickers": sorted(config.tickers),
                "scored": store.tickers("scored")}

    @app.get("/api/config")
    def api_config() -> dict[str, Any]:
        return {
            "model_version": config.model_version,
            "weights": {"vol": config.weights.w_vol, "sent": config.weights.w_sent,
                        "bot": config.weights.w_bot, "coord": config.weights.w_coord,
                        "mkt": config.weights.w_mkt},
            "thresholds": {"operating": config.thresholds.operating,
                           "alert": config.thresholds.alert},
            "suspicion": {"volume_zscore": config.suspicion.volume_zscore_cut,
                          "abs_return": config.suspicion.abs_return_cut,
                          "coordination": config.suspicion.coordination_cut,
                          "bot_ratio": config.suspicion.bot_ratio_cut},
        }

    @app.get("/api/windows")
    def windows(ticker: str = Query(...),
                from_date: Optional[str] = Query(None, alias="from"),
                to_date: Optional[str] = Query(None, alias="to"),
                min_level: Optional[str] = Query(None),
                min_score: Optional[float] = Query(None)) -> dict[str, Any]:
        rows = _scored(ticker)
        if from_date is not None:
            lo = _parse_date(from_date, "from")
            rows = [r for r in rows if r.date >= lo]
        if to_date is not None:
            hi = _parse_date(to_date, "to")
            rows = [r for r in rows if r.date <= hi]
        if min_level is not None:
            try:
                level = RiskLevel(min_level)
            except ValueError as exc:
                raise HTTPException(status_code=400,
                                    detail=f"unknown risk level {min_level!r}") from exc
            rows = [r for r in rows if _LEVEL_ORDER[r.risk_level] >= _LEVEL_ORDER[level]]
        if min_score is not None:
            rows = [r for r in rows if r.risk_score >= min_score]
        rows = sorted(rows, key=lambda r: r.date)
        return {"ticker": ticker, "count": len(rows),
                "windows": _rows_as_dicts(rows, ScoredWindow)}

    @app.get("/api/windows/{ticker}/{day}")
    def window_detail(ticker: str, day: str) -> dict[str, Any]:
        target = _parse_date(day, "date")
        rows = _scored(ticker)
        row = next((r for r in rows if r.date == target), None)
        if row is None:
            raise HTTPException(status_code=404,
                                detail=f"no scored window for {ticker} on {day}")
        return {"window": _rows_as_dicts([row], ScoredWindow)[0],
                "config": api_config()}

    @app.get("/api/posts/{ticker}/{day}")
    def posts(ticker: str, day: str) -> dict[str, Any]:
        target = _parse_date(day, "date")
        scored = _scored(ticker)
        if not store.exists("raw_social", ticker):
            raise HTTPException(status_code=503,
                                detail=f"{ticker} has no social stage")
        all_posts = store.read("raw_social", ticker, PostRecord)
        grouped = assign_trading_days(all_posts, [r.date for r in scored])
        day_posts = sorted(grouped.get(target, []), key=lambda p: (p.timestamp, p.post_id))
        return {"ticker": ticker, "date": day, "count": len(day_posts),
                "posts": _rows_as_dicts(day_posts, PostRecord)}

    @app.get("/api/leadtime/{ticker}")
    def leadtime(ticker: str) -> dict[str, Any]:
        if ticker not in config.tickers:
            raise HTTPException(status_code=404, detail=f"unknown ticker {ticker!r}")
        rows = _read_report(config.reports_dir / _REPORT_FILES["lead_time"])
        rows = [r for r in rows if r.get("ticker") == ticker]
        return {"ticker": ticker, "records": rows}

    @app.get("/api/evaluation/{mode}")
    def evaluation(mode: str) -> dict[str, Any]:
        if mode not in EVALUATION_MODES:
            raise HTTPException(status_code=404, detail=f"unknown mode {mode!r}")
        rows = _read_report(config.reports_dir / _REPORT_FILES[mode])
        return {"mode": mode, "rows": rows}

    def _read_report(path: Path) -> list[dict[str, str]]:
        if not path.is_file():
            raise HTTPException(status_code=503,
                                detail=f"report {path.name} not generated yet; "
                                       "run amrs evaluate")
        with path.open(newline="", encoding="utf-8") as handle:
            return list(csv.DictReader(handle))

    if frontend_dir is not None and frontend_dir.is_dir():
        app.mount("/", StaticFiles(directory=frontend_dir, html=True), name="dashboard")
    return app
