"""Exception types raised across the package."""


class FrsError(Exception):
    """Base class for all package errors."""


class DivisionByZero(FrsError, ZeroDivisionError):
    pass


class NotPrime(FrsError, ValueError):
    pass


class OrderTooSmall(FrsError, ValueError):
    pass


class DegreeTooHigh(FrsError, ValueError):
    pass


class ShapeMismatch(FrsError, ValueError):
    pass


class TooManyErrors(FrsError, ValueError):
    pass


class BadParams(FrsError, ValueError):
    pass


class BadEpsilon(BadParams):
    pass


class AmbientMismatch(FrsError, ValueError):
    pass


class BudgetExceeded(FrsError, RuntimeError):
    pass


class ParamsInfeasible(FrsError, ValueError):
    pass


class DegenerateSystem(FrsError, RuntimeError):
    pass


class DimensionTooSmall(FrsError, ValueError):
    pass


class ConfigError(FrsError, ValueError):
    """Experiment configuration problem; carries the offending line/field."""

    def __init__(self, message, *, line=None, field=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.line = line
        self.field = field
