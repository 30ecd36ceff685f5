"""Exception hierarchy shared by every module.

Each error carries a stable ``code`` string and the CLI exit status it maps to.
"""


class FocalisError(Exception):
    """Base class. ``code`` is stable and appears in CLI result documents."""

    code = "ERROR"
    exit_code = 3

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code

    @property
    def message(self):
        return self.args[0] if self.args else ""


class ParseError(FocalisError):
    """Malformed job file or expression. Carries 1-based line/column when known."""

    code = "PARSE_ERROR"
    exit_code = 2

    def __init__(self, message, code=None, line=None, column=None):
        where = ""
        if line is not None and column is not None:
            where = f" (line {line}, column {column})"
        elif column is not None:
            where = f" (column {column})"
        super().__init__(message + where, code)
        self.line = line
        self.column = column


class PreconditionError(FocalisError):
    code = "PRECONDITION"
    exit_code = 3


class DegenerateError(PreconditionError):
    code = "DEGENERATE_PARAMETRIZATION"


class UnsupportedError(PreconditionError):
    code = "UNSUPPORTED"


class RetryExhaustedError(FocalisError):
    code = "RETRY_EXHAUSTED"
    exit_code = 3


class ConsistencyError(FocalisError):
    """An internal cross-check failed; never silently swallowed."""

    code = "INTERNAL_CONSISTENCY"
    exit_code = 4


class AlgebraError(ArithmeticError, FocalisError):
    code = "ALGEBRA"
    exit_code = 3


class NotDivisibleError(AlgebraError):
    code = "NOT_DIVISIBLE"


class ExactZeroDivisionError(ZeroDivisionError, FocalisError):
    code = "DIVISION_BY_ZERO"
    exit_code = 3
