"""Exception hierarchy shared by every package in the toolkit."""


class Wl1Error(Exception):
    """Base class for all toolkit errors."""


class DomainError(Wl1Error):
    """Raised when inputs fall outside the mathematical domain of an operation."""

    def __init__(self, message, term=None):
        super().__init__(message)
        self.term = term


class ArgumentError(DomainError, ValueError):
    """Raised for infeasible cardinalities, mismatched lengths and similar bad arguments."""


class SizingError(DomainError):
    """Raised when requested dimensions are non-positive or too large to allocate."""


class DegeneracyError(DomainError):
    """Raised when a matrix is rank deficient for the requested operation."""


class DegenerateRecoveryError(DegeneracyError):
    """Raised when zero weights leave the set of minimizers unbounded."""


class CapacityError(DomainError):
    """Raised when an exact computation exceeds its configured budget."""


class RecoveryInfeasibleError(DomainError):
    """Raised when the measurements are not in the range of the matrix."""


class IterationLimitError(Wl1Error):
    """Raised when the simplex method exceeds its iteration limit."""

    def __init__(self, message, iterations=0):
        super().__init__(message)
        self.iterations = iterations


class ParseError(Wl1Error):
    """Raised for malformed input files; carries the path and 1-based line number."""

    def __init__(self, path, line, message):
        super().__init__(f"{path}:{line}: {message}")
        self.path = str(path)
        self.line = line
