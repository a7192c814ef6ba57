"""Exception hierarchy for BookCross."""
from typing import Optional


class BookCrossError(Exception):
    """Base class for all BookCross errors."""


class ParseError(BookCrossError, ValueError):
    """Malformed edge-list input."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class ArgumentError(BookCrossError, ValueError):
    """An operation was called with arguments violating its preconditions."""


class ContractError(BookCrossError, RuntimeError):
    """Incremental state does not describe the layout it was passed with."""


class SearchSizeError(BookCrossError):
    """An exact search would exceed its configured cap or budget."""

    def __init__(self, message: str, size: int, limit: int, block: Optional[int] = None):
        self.size = size
        self.limit = limit
        self.block = block
        if block is not None:
            message = f"block {block}: {message}"
        super().__init__(message)


class BudgetExceededError(SearchSizeError):
    """The explored-configuration budget ran out before the search finished."""


class InvariantError(BookCrossError, AssertionError):
    """An internal invariant failed."""


class KernelBoundError(InvariantError):
    """A kernel exceeded its proven size bound."""
