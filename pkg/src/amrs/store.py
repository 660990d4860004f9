"""Self-describing columnar persistence for pipeline stages.

One file per (stage, ticker) under <root>/<stage>/<TICKER>.json holding the
schema and the data stored column-by-column. JSON keeps the files
byte-deterministic for a given row sequence, which the end-to-end
reproducibility guarantees rely on. Readers tolerate unknown extra columns
(warn and ignore) but refuse files missing a required column or carrying a
different type for a known one.
"""

from __future__ import annotations

import dataclasses
import json
import warnings
from datetime import date, datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Any, Sequence, Type, TypeVar, Union, get_args, get_origin

from .errors import CorruptFile, SchemaEvolutionMismatch, StorageFailure

FORMAT = "amrs-columnar/1"
STAGES = ("raw_social", "raw_authors", "market", "fused", "scored")

T = TypeVar("T")

_TYPE_TAGS: dict[type, str] = {
    str: "str", int: "int", float: "float", bool: "bool",
    date: "date", datetime: "datetime",
}


def _unwrap_optional(tp: Any) -> tuple[Any, bool]:
    if get_origin(tp) is Union:
        args = [a for a in get_args(tp) if a is not type(None)]
        if len(args) == 1:
            return args[0], True
    return tp, False


def _field_types(row_type: Type[T]) -> dict[str, tuple[Any, bool]]:
    import typing
    hints = typing.get_type_hints(row_type)
    return {f.name: _unwrap_optional(hints[f.name])
            for f in dataclasses.fields(row_type)}


def _type_tag(tp: Any) -> str:
    if isinstance(tp, type) and issubclass(tp, Enum):
        return "str"
    tag = _TYPE_TAGS.get(tp)
    if tag is None:
        raise SchemaEvolutionMismatch(f"unsupported field type {tp!r}")
    return tag


def _encode(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, datetime):
        return value.astimezone(timezone.utc).isoformat()
    if isinstance(value, date):
        return value.isoformat()
    return value


def _decode(value: Any, tp: Any, optional: bool) -> Any:
    if value is None:
        if optional:
            return None
        raise SchemaEvolutionMismatch("null in non-optional column")
    if isinstance(tp, type) and issubclass(tp, Enum):
        return tp(value)
    if tp is datetime:
        return datetime.fromisoformat(value)
    if tp is date:
        return date.fromisoformat(value)
    if tp is float:
        return float(value)
    if tp is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise SchemaEvolutionMismatch(f"expected int, got {value!r}")
        return value
    if tp is bool:
        if not isinstance(value, bool):
            raise SchemaEvolutionMismatch(f"expected bool, got {value!r}")
        return value
    return value


def _aliases(row_type: Type[T]) -> dict[str, str]:
    return getattr(row_type, "COLUMN_ALIASES", {})


def rows_to_payload(rows: Sequence[T], row_type: Type[T]) -> dict[str, Any]:
    aliases = _aliases(row_type)
    types = _field_types(row_type)
    schema = [{"name": aliases.get(name, name), "type": _type_tag(tp),
               "nullable": optional}
              for name, (tp, optional) in types.items()]
    columns = {aliases.get(name, name): [_encode(getattr(r, name)) for r in rows]
               for name in types}
    return {"format": FORMAT, "row_type": row_type.__name__,
            "row_count": len(rows), "schema": schema, "columns": columns}


def payload_to_rows(payload: dict[str, Any], row_type: Type[T]) -> list[T]:
    if payload.get("format") != FORMAT:
        raise CorruptFile(f"unexpected format marker {payload.get('format')!r}")
    aliases = _aliases(row_type)
    types = _field_types(row_type)
    file_schema = {col["name"]: col for col in payload["schema"]}
    columns = payload["columns"]
    n = payload["row_count"]

    expected = {aliases.get(name, name) for name in types}
    unknown = set(file_schema) - expected
    if unknown:
        warnings.warn(f"ignoring unknown column(s) {sorted(unknown)} in "
                      f"{payload.get('row_type', '?')} file", stacklevel=2)

    decoded: dict[str, list[Any]] = {}
    for name, (tp, optional) in types.items():
        col_name = aliases.get(name, name)
        if col_name not in file_schema:
            raise SchemaEvolutionMismatch(f"file lacks required column {col_name!r}")
        if file_schema[col_name]["type"] != _type_tag(tp):
            raise SchemaEvolutionMismatch(
                f"column {col_name!r} has type {file_schema[col_name]['type']!r}, "
                f"expected {_type_tag(tp)!r}")
        values = columns[col_name]
        if len(values) != n:
            raise CorruptFile(f"column {col_name!r} has {len(values)} values, expected {n}")
        decoded[name] = [_decode(v, tp, optional) for v in values]

    return [row_type(**{name: decoded[name][i] for name in types}) for i in range(n)]


class ColumnStore:
    """File-per-(stage, ticker) dataset store rooted at one directory."""

    def __init__(self, root: Path | str):
        self.root = Path(root)

    def path(self, stage: str, ticker: str) -> Path:
        if stage not in STAGES:
            raise ValueError(f"unknown stage {stage!r}; expected one of {STAGES}")
        return self.root / stage / f"{ticker}.json"

    def exists(self, stage: str, ticker: str) -> bool:
        return self.path(stage, ticker).is_file()

    def tickers(self, stage: str) -> list[str]:
        stage_dir = self.root / stage
        if not stage_dir.is_dir():
            return []
        return sorted(p.stem for p in stage_dir.glob("*.json"))

    def write(self, stage: str, ticker: str, rows: Sequence[T], row_type: Type[T]) -> Path:
        path = self.path(stage, ticker)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            payload = rows_to_payload(rows, row_type)
            text = json.dumps(payload, separators=(",", ":"), sort_keys=True)
            path.write_text(text + "\n", encoding="utf-8")
        except OSError as exc:
            raise StorageFailure(str(exc)) from exc
        return path

    def read(self, stage: str, ticker: str, row_type: Type[T]) -> list[T]:
        path = self.path(stage, ticker)
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError as exc:
            raise StorageFailure(f"no {stage} dataset for {ticker}: {path}") from exc
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CorruptFile(f"{path}: {exc}") from exc
        if not isinstance(payload, dict):
            raise CorruptFile(f"{path}: not a columnar payload")
        try:
            return payload_to_rows(payload, row_type)
        except (KeyError, TypeError, ValueError) as exc:
            raise CorruptFile(f"{path}: {exc}") from exc


def write_dataset(root: Path | str, stage: str, ticker: str,
                  rows: Sequence[T], row_type: Type[T]) -> Path:
    return ColumnStore(root).write(stage, ticker, rows, row_type)


def read_dataset(root: Path | str, stage: str, ticker: str,
                 row_type: Type[T]) -> list[T]:
    return ColumnStore(root).read(stage, ticker, row_type)
