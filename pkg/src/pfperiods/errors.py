"""Exception hierarchy and CLI exit codes."""

from __future__ import annotations


class PFPeriodsError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class ConfigError(PFPeriodsError):
    """Invalid run configuration; message names the offending field."""

    exit_code = 2


class RecognitionError(PFPeriodsError):
    """A constant could not be recognized at the requested confidence."""

    exit_code = 3

    def __init__(self, message: str, index=None):
        super().__init__(message)
        self.index = index


class RankOneError(PFPeriodsError):
    """The monodromy deviation matrix failed the rank-1 diagnostic."""

    exit_code = 4


class PrecisionError(PFPeriodsError):
    """Requested precision cannot be met (reports what is required)."""

    exit_code = 5

    def __init__(self, message: str, required_terms=None):
        super().__init__(message)
        self.required_terms = required_terms


class SeriesEngineError(PFPeriodsError):
    """An exact-series consistency identity failed; the engine is broken."""

    exit_code = 6


class CacheError(PFPeriodsError):
    """Series cache file is corrupt (header, row count, checksum, parse)."""

    exit_code = 7


class PathError(PFPeriodsError):
    """Analytic-continuation path violates clearance constraints."""

    exit_code = 8
