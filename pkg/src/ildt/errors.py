"""Exception hierarchy. Every domain failure derives from :class:`ILDTError`."""

from __future__ import annotations


class ILDTError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidGraphError(ILDTError, ValueError):
    pass


class GrowthOverflowError(ILDTError):
    """A requested generation would exceed the configured arc cap."""


class BudgetExceededError(ILDTError):
    """A brute-force routine was asked to work beyond its size or time budget."""


class ConvergenceError(ILDTError):
    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


class PreconditionError(ILDTError, ValueError):
    pass


class ConstructionError(ILDTError):
    """The Hamiltonian construction hit a state that should be unreachable."""


class UndefinedLimitError(ILDTError, ZeroDivisionError):
    pass


class GraphParseError(ILDTError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")
        self.line = line
