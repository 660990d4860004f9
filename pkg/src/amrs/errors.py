"""Exception hierarchy shared across the package.

Every error raised on a contract boundary derives from AmrsError so callers
can catch one base class; loaders additionally attach row/file context.
"""

from __future__ import annotations


class AmrsError(Exception):
    """Base class for all package-specific errors."""


# --- ingestion ---------------------------------------------------------------

class MissingColumn(AmrsError):
    def __init__(self, column: str, path: str = ""):
        self.column = column
        self.path = path
        super().__init__(f"missing required column {column!r}" + (f" in {path}" if path else ""))


class NonNumericField(AmrsError):
    """A row failed field parsing or a per-row price/volume invariant."""

    def __init__(self, row: int, message: str):
        self.row = row
        super().__init__(f"row {row}: {message}")


class NonMonotonicDates(AmrsError):
    def __init__(self, row: int, message: str = "dates must be strictly increasing"):
        self.row = row
        super().__init__(f"row {row}: {message}")


class DuplicateDate(AmrsError):
    def __init__(self, row: int, message: str = "duplicate (ticker, date)"):
        self.row = row
        super().__init__(f"row {row}: {message}")


class SchemaMismatch(AmrsError):
    pass


class LabelTypeConflict(AmrsError):
    def __init__(self, row: int, message: str):
        self.row = row
        super().__init__(f"row {row}: {message}")


class InvalidConfig(AmrsError):
    pass


# --- columnar store ----------------------------------------------------------

class SchemaEvolutionMismatch(AmrsError):
    pass


class CorruptFile(AmrsError):
    pass


class StorageFailure(AmrsError):
    pass


# --- features ----------------------------------------------------------------

class UnknownAuthor(AmrsError):
    def __init__(self, author_id: str):
        self.author_id = author_id
        super().__init__(f"no author stats for {author_id!r}")


class OutOfRangeInput(AmrsError):
    pass


class NonPositivePrice(AmrsError):
    pass


# --- fusion / scoring --------------------------------------------------------

class TickerMismatch(AmrsError):
    pass


class InvalidWeights(AmrsError):
    pass


# --- evaluation --------------------------------------------------------------

class MissingCoverage(AmrsError):
    def __init__(self, ticker: str, date):
        self.ticker = ticker
        self.date = date
        super().__init__(f"no market coverage for {ticker} on {date}")


class InsufficientHistory(AmrsError):
    pass


class UnknownComponent(AmrsError):
    pass


class MissingStage(AmrsError):
    pass
