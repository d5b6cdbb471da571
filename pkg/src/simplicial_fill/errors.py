"""Exception types raised across the package."""

from __future__ import annotations


class ChainError(ValueError):
    """Malformed chain, or an operation applied to incompatible chains."""


class NotACycleError(ChainError):
    """A cycle was required but the chain has nonzero boundary."""


class ChainParseError(ChainError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


class NotAHypertreeError(ValueError):
    pass


class FillError(RuntimeError):
    """The fill engine could not produce a filling with the requested properties."""


class VerificationError(RuntimeError):
    """A produced certificate failed its independent re-check. Always a bug."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search ran out of its node or time budget."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
