"""Exception types shared across the package.

The CLI maps these onto exit codes: DomainError and GraphFormatError
become exit 2 (input error), BudgetExceeded becomes exit 3 (refusal).
"""


class DomainError(ValueError):
    """A parameter or precondition is outside the supported domain."""


class GraphFormatError(ValueError):
    """An edge-list file is malformed; carries the offending line number."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed the configured budget.

    Enumerations refuse rather than silently sampling; the message states
    the required budget.
    """
