"""
Exception hierarchy for onticlab.

Every error carries an ErrorCode and the process exit code the CLI maps it to:
configuration-class failures exit with 1, failures raised while computing
exit with 2.
"""
from typing import Iterable, Optional

from onticlab.sdk.common.enums import ErrorCode, ExitCode


class OnticLabError(Exception):
    """Base class for all onticlab errors."""

    code: ErrorCode = ErrorCode.NUMERICAL
    exit_code: ExitCode = ExitCode.NUMERICAL_FAILURE

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def get_error_msg(self) -> str:
        """Return a user-facing message including the error code."""
        return f"{self.message} [{self.code.value}]"


class NumericalError(OnticLabError):
    """A numerical routine failed or produced non-finite values."""
    code = ErrorCode.NUMERICAL


class DomainError(OnticLabError, ValueError):
    """An operation received values outside its mathematical domain."""
    code = ErrorCode.DOMAIN


class DimensionMismatchError(DomainError):
    code = ErrorCode.DIMENSION_MISMATCH


class DimensionCapError(DomainError):
    code = ErrorCode.DIMENSION_CAP


class NonHermitianError(DomainError):
    code = ErrorCode.NON_HERMITIAN


class NormalizationError(DomainError):
    code = ErrorCode.NORMALIZATION


class GridMismatchError(DomainError):
    code = ErrorCode.GRID_MISMATCH


class ProfileMismatchError(DomainError):
    code = ErrorCode.PROFILE_MISMATCH


class SpaceMismatchError(DomainError):
    code = ErrorCode.SPACE_MISMATCH


class ImpossibleObservationError(DomainError):
    """A Bayesian update conditioned on an event of zero probability."""
    code = ErrorCode.IMPOSSIBLE_OBSERVATION


class AssignmentModeError(DomainError):
    code = ErrorCode.ASSIGNMENT_MODE


class DisjointnessError(DomainError):
    code = ErrorCode.DISJOINTNESS


class MissingEntriesError(DomainError):
    """A conditional probability table lacks entries an audit requires."""
    code = ErrorCode.MISSING_ENTRIES

    def __init__(self, missing: Iterable[str]):
        self.missing = sorted(missing)
        super().__init__("missing table entries: " + ", ".join(self.missing))


class ConfigError(OnticLabError):
    """Base class for configuration-class failures (exit code 1)."""
    exit_code = ExitCode.CONFIG_ERROR


class ConfigParseError(ConfigError):
    code = ErrorCode.CONFIG_PARSE

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class ConfigValueError(ConfigError, ValueError):
    code = ErrorCode.CONFIG_VALUE

    def __init__(self, key: str, message: str):
        self.key = key
        super().__init__(message)


class UnknownExperimentError(ConfigError):
    code = ErrorCode.UNKNOWN_EXPERIMENT


class UnwritablePathError(ConfigError):
    code = ErrorCode.UNWRITABLE_PATH
