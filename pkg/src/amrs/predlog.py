"""Append-only JSON-lines prediction log.

One JSON object per line with fields timestamp, date, ticker, risk_score,
predicted_label, model_version, run_id, extra. Entries may only be logged at
or after the end of the scored trading day (21:00 UTC, the regular US close),
and ``extra`` must itself be valid JSON. Single writer, many readers.
"""

from __future__ import annotations

import json
import os
from datetime import date, datetime, time, timezone
from pathlib import Path

from .errors import StorageFailure
from .types import PredictionLogEntry

TRADING_DAY_END_UTC = time(21, 0)

_FIELDS = ("timestamp", "date", "ticker", "risk_score", "predicted_label",
           "model_version", "run_id", "extra")


def end_of_trading_day(day: date) -> datetime:
    return datetime.combine(day, TRADING_DAY_END_UTC, tzinfo=timezone.utc)


def validate_entry(entry: PredictionLogEntry) -> None:
    if entry.timestamp.tzinfo is None:
        raise ValueError("timestamp must be timezone-aware UTC")
    if entry.timestamp < end_of_trading_day(entry.date):
        raise ValueError(f"premature log entry: {entry.timestamp.isoformat()} is "
                         f"before end of trading day {entry.date.isoformat()}")
    if entry.predicted_label not in (0, 1):
        raise ValueError("predicted_label must be 0 or 1")
    if not 0.0 <= entry.risk_score <= 1.0:
        raise ValueError("risk_score must be in [0, 1]")
    try:
        json.loads(entry.extra)
    except (TypeError, json.JSONDecodeError) as exc:
        raise ValueError(f"extra must be valid JSON: {exc}") from exc


class PredictionLog:
    def __init__(self, path: Path | str):
        self.path = Path(path)

    def append(self, entry: PredictionLogEntry) -> None:
        validate_entry(entry)
        record = {
            "timestamp": entry.timestamp.astimezone(timezone.utc).isoformat(),
            "date": entry.date.isoformat(),
            "ticker": entry.ticker,
            "risk_score": entry.risk_score,
            "predicted_label": entry.predicted_label,
            "model_version": entry.model_version,
            "run_id": entry.run_id,
            "extra": entry.extra,
        }
        line = json.dumps(record, sort_keys=True)
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as handle:
                handle.write(line + "\n")
                handle.flush()
                os.fsync(handle.fileno())
        except OSError as exc:
            raise StorageFailure(str(exc)) from exc

    def read(self) -> list[PredictionLogEntry]:
        if not self.path.exists():
            return []
        entries: list[PredictionLogEntry] = []
        with self.path.open(encoding="utf-8") as handle:
            for lineno, line in enumerate(handle):
                line = line.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                    entries.append(PredictionLogEntry(
                        timestamp=datetime.fromisoformat(record["timestamp"]),
                        date=date.fromisoformat(record["date"]),
                        ticker=record["ticker"],
                        risk_score=float(record["risk_score"]),
                        predicted_label=int(record["predicted_label"]),
                        model_version=record["model_version"],
                        run_id=record["run_id"],
                        extra=record["extra"],
                    ))
                except (KeyError, ValueError, json.JSONDecodeError) as exc:
                    raise StorageFailure(f"{self.path}:{lineno + 1}: {exc}") from exc
        return entries


def log_prediction(log: PredictionLog, entry: PredictionLogEntry) -> None:
    log.append(entry)


def read_log(path: Path | str) -> list[PredictionLogEntry]:
    return PredictionLog(path).read()
