"""Error hierarchy shared by every package.

Infeasibility is never an exception: searches return ``None`` / ``False``.
Exceptions signal malformed input, violated hypotheses, exhausted budgets,
or bugs (a step the underlying theorem guarantees has failed).
"""

from typing import Any, Optional


class InversionError(Exception):
    """Base class for all toolkit errors."""


class GraphFormatError(InversionError, ValueError):
    """Malformed text input (graph, orientation, labeling, sequence, realisation)."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(InversionError, ValueError):
    """An operation was applied outside its hypotheses."""

    def __init__(self, message: str, hypothesis: Optional[str] = None):
        self.hypothesis = hypothesis
        if hypothesis:
            message = f"{message} (requires: {hypothesis})"
        super().__init__(message)


class GraphMismatchError(PreconditionError):
    """Two objects reference different graphs."""


class DimensionCapError(PreconditionError):
    """Requested dimension exceeds the 64-bit word cap."""


class SizeGuardError(PreconditionError):
    """An enumeration or oracle guard was exceeded."""

    def __init__(self, message: str, limit: int, actual: int):
        self.limit = limit
        self.actual = actual
        super().__init__(f"{message}: {actual} > {limit}", hypothesis="size guard, override with --force")


class BudgetExhausted(InversionError):
    """The wall-clock budget ran out before a decision was reached."""

    def __init__(self, message: str = "budget exhausted", elapsed: Optional[float] = None):
        self.elapsed = elapsed
        super().__init__(message)


class InvariantViolation(InversionError, RuntimeError):
    """A proof-guaranteed step failed. Always a bug; carries the instance."""

    def __init__(self, message: str, instance: Any = None):
        self.instance = instance
        super().__init__(message)


class DischargingContradiction(InvariantViolation):
    """No reducible configuration found below the density threshold."""
