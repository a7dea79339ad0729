from onticlab.sdk.common.enums.experimentEnums import (
    AssignmentMode,
    ErrorCode,
    ExitCode,
    ExperimentName,
    OutputFormat,
    SmearKind,
)

__all__ = ['AssignmentMode', 'ErrorCode', 'ExitCode', 'ExperimentName', 'OutputFormat', 'SmearKind']
