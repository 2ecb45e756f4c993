"""Settings and the shared error hierarchy."""

from utils.errors import (
    BudgetExhausted,
    DimensionCapError,
    DischargingContradiction,
    GraphFormatError,
    GraphMismatchError,
    InvariantViolation,
    InversionError,
    PreconditionError,
    SizeGuardError,
)
from utils.settings import Settings, extended_checks_enabled

__all__ = [
    "BudgetExhausted",
    "DimensionCapError",
    "DischargingContradiction",
    "GraphFormatError",
    "GraphMismatchError",
    "InvariantViolation",
    "InversionError",
    "PreconditionError",
    "SizeGuardError",
    "Settings",
    "extended_checks_enabled",
]
