"""Exception types raised by the library.

Every error derives from :class:`WeierstrassError` so callers (the CLI in
particular) can catch the family in one place.
"""

from __future__ import annotations


class WeierstrassError(Exception):
    """Base class for all library errors."""


class InvalidInput(WeierstrassError, ValueError):
    """Arguments violate a precondition."""


class NonPrimeP(InvalidInput):
    pass


class GcdViolation(InvalidInput):
    pass


class EmptyData(InvalidInput):
    pass


class ParameterTooLarge(InvalidInput):
    pass


class IndexOutOfRange(InvalidInput, IndexError):
    pass


class UnsupportedPlace(InvalidInput):
    pass


class DegreeNotOne(InvalidInput):
    pass


class NonPositive(InvalidInput):
    pass


class DuplicatePlace(InvalidInput):
    pass


class TooFewPlaces(InvalidInput):
    pass


class TooManyPlaces(InvalidInput):
    pass


class FieldTooSmall(InvalidInput):
    pass


class BudgetExceeded(WeierstrassError):
    pass


class NotInGamma(InvalidInput):
    pass


class EmptyInput(InvalidInput):
    pass


class UndefinedQuantity(InvalidInput):
    """E.g. the Frobenius number of a genus-zero semigroup."""


class OracleInconsistency(WeierstrassError, RuntimeError):
    """An internal cross-check failed (should never happen on valid input)."""


# finite fields / polynomials

class DivisionByZeroPoly(WeierstrassError, ZeroDivisionError):
    pass


class FieldMismatch(InvalidInput):
    pass


class ConstantPolynomial(InvalidInput):
    pass


class AlphaZero(InvalidInput):
    pass


class ValidationFailure(WeierstrassError):
    """Raised in strict mode when a concrete specification fails a check."""

    def __init__(self, report, message: str | None = None):
        self.report = report
        failed = [c.name for c in report.checks if not c.passed]
        super().__init__(message or "validation failed: " + ", ".join(failed))


# spec files

class SpecSyntaxError(WeierstrassError, ValueError):
    def __init__(self, msg: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{msg} (line {line}, column {column})")


class SchemaError(WeierstrassError, ValueError):
    def __init__(self, field: str, detail: str = ""):
        self.field = field
        super().__init__(f"{field}: {detail}" if detail else field)
