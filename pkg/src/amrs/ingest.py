"""CSV loaders for raw market bars and the ground-truth label table."""

from __future__ import annotations

import csv
from datetime import date
from pathlib import Path
from typing import Sequence

from .errors import (DuplicateDate, LabelTypeConflict, MissingColumn,
                     NonMonotonicDates, NonNumericField, SchemaMismatch,
                     StorageFailure)
from .types import Confidence, GroundTruthLabel, LabelSource, ManipulationType, OhlcvBar

OHLCV_COLUMNS = ("date", "open", "high", "low", "close", "volume")
GROUND_TRUTH_COLUMNS = ("ticker", "date", "label", "manipulation_type",
                        "confidence", "source")


def load_ohlcv(path: Path | str, ticker: str) -> list[OhlcvBar]:
    """Load one ticker's daily bars from CSV, sorted-ascending enforced.

    Expects columns date,open,high,low,close,adj_close,volume (ISO dates).
    adj_close may be missing or empty: close is copied. Rows failing numeric
    parsing or the bar invariants raise NonNumericField with the row index
    (0-based data row).
    """
    path = Path(path)
    if not path.is_file():
        raise StorageFailure(f"OHLCV file not found: {path}")
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        header = reader.fieldnames or []
        for column in OHLCV_COLUMNS:
            if column not in header:
                raise MissingColumn(column, str(path))
        has_adj = "adj_close" in header

        bars: list[OhlcvBar] = []
        seen: set[date] = set()
        last: date | None = None
        for i, record in enumerate(reader):
            try:
                day = date.fromisoformat(record["date"].strip())
            except (ValueError, AttributeError) as exc:
                raise NonNumericField(i, f"bad date {record.get('date')!r}") from exc
            try:
                open_, high = float(record["open"]), float(record["high"])
                low, close = float(record["low"]), float(record["close"])
                adj_raw = record.get("adj_close", "") if has_adj else ""
                adj = float(adj_raw) if adj_raw not in ("", None) else close
                volume = int(float(record["volume"]))
            except (TypeError, ValueError) as exc:
                raise NonNumericField(i, f"non-numeric field: {exc}") from exc

            bar = OhlcvBar(ticker=ticker, date=day, open=open_, high=high,
                           low=low, close=close, adj_close=adj, volume=volume)
            try:
                bar.validate()
            except ValueError as exc:
                raise NonNumericField(i, str(exc)) from exc

            if day in seen:
                raise DuplicateDate(i)
            if last is not None and day < last:
                raise NonMonotonicDates(i)
            seen.add(day)
            last = day
            bars.append(bar)
    return bars


def load_ground_truth(path: Path | str) -> list[GroundTruthLabel]:
    """Load the labeled ticker-day table; (ticker, date) unique, label consistent."""
    path = Path(path)
    if not path.is_file():
        raise StorageFailure(f"ground-truth file not found: {path}")
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        header = reader.fieldnames or []
        missing = [c for c in GROUND_TRUTH_COLUMNS if c not in header]
        if missing:
            raise SchemaMismatch(f"{path}: missing column(s) {missing}")

        labels: list[GroundTruthLabel] = []
        seen: set[tuple[str, date]] = set()
        for i, record in enumerate(reader):
            try:
                row = GroundTruthLabel(
                    ticker=record["ticker"].strip(),
                    date=date.fromisoformat(record["date"].strip()),
                    label=int(record["label"]),
                    manipulation_type=ManipulationType(record["manipulation_type"].strip()),
                    confidence=Confidence(record["confidence"].strip()),
                    source=LabelSource(record["source"].strip()),
                )
            except (ValueError, AttributeError, KeyError) as exc:
                raise SchemaMismatch(f"{path} row {i}: {exc}") from exc
            if row.label not in (0, 1):
                raise SchemaMismatch(f"{path} row {i}: label must be 0 or 1")
            positive_type = row.manipulation_type is not ManipulationType.NORMAL
            if (row.label == 1) != positive_type:
                raise LabelTypeConflict(
                    i, f"label={row.label} conflicts with type={row.manipulation_type.value}")
            key = (row.ticker, row.date)
            if key in seen:
                raise SchemaMismatch(f"{path} row {i}: duplicate (ticker, date) {key}")
            seen.add(key)
            labels.append(row)
    return labels


def write_ohlcv_csv(path: Path | str, bars: Sequence[OhlcvBar]) -> None:
    """Write bars in the canonical OHLCV CSV layout."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["date", "open", "high", "low", "close", "adj_close", "volume"])
        for bar in bars:
            writer.writerow([bar.date.isoformat(), repr(bar.open), repr(bar.high),
                             repr(bar.low), repr(bar.close), repr(bar.adj_close),
                             bar.volume])


def write_ground_truth_csv(path: Path | str, labels: Sequence[GroundTruthLabel]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(list(GROUND_TRUTH_COLUMNS))
        for row in labels:
            writer.writerow([row.ticker, row.date.isoformat(), row.label,
                             row.manipulation_type.value, row.confidence.value,
                             row.source.value])
