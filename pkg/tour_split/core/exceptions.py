"""
Custom exceptions for the library and CLI.
Every error raised on purpose inherits from SplitException so the CLI can map
it to a stable error code and process exit status.
"""
from typing import Any, Optional

# Process exit statuses of the command-line interface
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_MISMATCH = 4
EXIT_NO_FEASIBLE_SPLIT = 5


class SplitException(Exception):
    """
    Base exception for all library errors.
    Carries a machine-readable code and the CLI exit status.
    """

    def __init__(
        self,
        exit_code: int,
        code: str,
        message: str,
        details: Optional[Any] = None,
    ):
        self.exit_code = exit_code
        self.code = code
        self.message = message
        self.details = details
        super().__init__(self.message)


class UsageException(SplitException):
    """Bad command line or unsupported variant/algorithm pair"""

    def __init__(self, message: str = "Usage error", code: str = "USAGE_ERROR"):
        super().__init__(EXIT_USAGE, code, message)


class InvalidConfigException(SplitException):
    """A parameter outside its documented range"""

    def __init__(self, message: str = "Invalid configuration", details: Optional[Any] = None):
        super().__init__(EXIT_USAGE, "INVALID_CONFIG", message, details)


class InvalidIntervalException(SplitException):
    """Route interval (i, j] with i >= j or out of range"""

    def __init__(self, i: int, j: int, n: int):
        super().__init__(
            EXIT_USAGE,
            "INVALID_INTERVAL",
            f"Invalid route interval ({i}, {j}] for n={n}",
            {"i": i, "j": j, "n": n},
        )


class OracleCapException(SplitException):
    """Oracle asked to solve an instance above its size cap"""

    def __init__(self, n: int, cap: int):
        super().__init__(
            EXIT_USAGE,
            "ORACLE_CAP_EXCEEDED",
            f"Oracle refuses n={n}; the configured cap is {cap}",
            {"n": n, "cap": cap},
        )


class InsufficientDataException(SplitException):
    """Not enough measurements to fit a scaling exponent"""

    def __init__(self, message: str = "Insufficient data"):
        super().__init__(EXIT_USAGE, "INSUFFICIENT_DATA", message)


class ParseException(SplitException):
    """Malformed input file"""

    def __init__(
        self,
        message: str,
        path: Optional[str] = None,
        line: Optional[int] = None,
        field: Optional[str] = None,
    ):
        self.path = path
        self.line = line
        self.field = field
        where = ", ".join(
            part
            for part in (
                path,
                f"line {line}" if line is not None else None,
                f"field '{field}'" if field else None,
            )
            if part
        )
        super().__init__(
            EXIT_PARSE,
            "PARSE_ERROR",
            f"{where}: {message}" if where else message,
            {"path": path, "line": line, "field": field},
        )


class ValidationFailedException(SplitException):
    """An instance failed triangle or singleton validation"""

    def __init__(self, message: str = "Validation failed", details: Optional[Any] = None):
        super().__init__(EXIT_VALIDATION, "VALIDATION_FAILED", message, details)


class InvalidInstanceException(SplitException):
    """Negative value, inverted window or inconsistent array lengths"""

    def __init__(self, message: str = "Invalid instance", details: Optional[Any] = None):
        super().__init__(EXIT_VALIDATION, "INVALID_INSTANCE", message, details)


class InvalidTourException(SplitException):
    """Tour is not a permutation of 1..n"""

    def __init__(self, message: str = "Invalid tour", details: Optional[Any] = None):
        super().__init__(EXIT_VALIDATION, "INVALID_TOUR", message, details)


class CorrectnessMismatchException(SplitException):
    """Two algorithms disagree on the optimal cost"""

    def __init__(self, message: str = "Correctness mismatch", details: Optional[Any] = None):
        super().__init__(EXIT_MISMATCH, "CORRECTNESS_MISMATCH", message, details)


class CorruptResultException(SplitException):
    """Predecessor chain that does not walk back to 0"""

    def __init__(self, message: str = "Corrupt predecessor chain", details: Optional[Any] = None):
        super().__init__(EXIT_MISMATCH, "CORRUPT_RESULT", message, details)


class ContractViolationException(SplitException):
    """Internal data-structure misuse; always an algorithm bug"""

    def __init__(self, message: str = "Contract violation"):
        super().__init__(EXIT_MISMATCH, "CONTRACT_VIOLATION", message)


class NoFeasibleSplitException(SplitException):
    """No admissible partition of the tour exists"""

    def __init__(self, message: str = "No feasible split", details: Optional[Any] = None):
        super().__init__(EXIT_NO_FEASIBLE_SPLIT, "NO_FEASIBLE_SPLIT", message, details)
