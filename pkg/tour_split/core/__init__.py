"""Core module exports."""
from tour_split.core.config import settings, get_settings
from tour_split.core.exceptions import (
    SplitException,
    UsageException,
    InvalidConfigException,
    InvalidIntervalException,
    OracleCapException,
    InsufficientDataException,
    ParseException,
    ValidationFailedException,
    InvalidInstanceException,
    InvalidTourException,
    CorrectnessMismatchException,
    CorruptResultException,
    ContractViolationException,
    NoFeasibleSplitException,
)

__all__ = [
    # Config
    "settings",
    "get_settings",
    # Exceptions
    "SplitException",
    "UsageException",
    "InvalidConfigException",
    "InvalidIntervalException",
    "OracleCapException",
    "InsufficientDataException",
    "ParseException",
    "ValidationFailedException",
    "InvalidInstanceException",
    "InvalidTourException",
    "CorrectnessMismatchException",
    "CorruptResultException",
    "ContractViolationException",
    "NoFeasibleSplitException",
]
