from enum import Enum, IntEnum


class ExperimentName(Enum):
    """
    Enum representing the experiments the runner can dispatch.
    """
    BORN_CHECK = "born-check"
    THEOREM1 = "theorem1"
    HIDDEN_ROUNDTRIP = "hidden-roundtrip"
    THEOREM2 = "theorem2"
    SHARPEN_SWEEP = "sharpen-sweep"
    FS_LAW = "fs-law"
    SCREEN_REVEAL = "screen-reveal"

    @classmethod
    def from_name(cls, name: str) -> "ExperimentName":
        """
        Resolve an experiment from its command-line name.

        :param name: e.g. ``"born-check"``; underscores are accepted for dashes
        :return: The corresponding ExperimentName
        :raises ValueError: If the name is not registered
        """
        normalized = name.strip().lower().replace("_", "-")
        for member in cls:
            if member.value == normalized:
                return member
        raise ValueError(f"unknown experiment '{name}'")


class OutputFormat(Enum):
    """Enum representing report file formats."""
    CSV = "csv"
    JSON = "json"


class SmearKind(Enum):
    """Enum representing the within-cell amplitude profiles."""
    UNIFORM = "uniform"
    GAUSSIAN = "gaussian"


class AssignmentMode(Enum):
    """Enum representing how the detection state is assigned ontic labels."""
    PSI_COMPLETE = "psi_complete"
    EPISTEMIC = "epistemic"


class ErrorCode(Enum):
    """
    Enum representing the distinct failure classes reported by the runner.
    """
    CONFIG_PARSE = "config_parse"
    CONFIG_VALUE = "config_value"
    UNKNOWN_EXPERIMENT = "unknown_experiment"
    UNWRITABLE_PATH = "unwritable_path"
    DIMENSION_MISMATCH = "dimension_mismatch"
    DIMENSION_CAP = "dimension_cap"
    NON_HERMITIAN = "non_hermitian"
    NORMALIZATION = "normalization"
    GRID_MISMATCH = "grid_mismatch"
    PROFILE_MISMATCH = "profile_mismatch"
    SPACE_MISMATCH = "space_mismatch"
    IMPOSSIBLE_OBSERVATION = "impossible_observation"
    ASSIGNMENT_MODE = "assignment_mode"
    DISJOINTNESS = "disjointness"
    MISSING_ENTRIES = "missing_entries"
    DOMAIN = "domain"
    NUMERICAL = "numerical"


class ExitCode(IntEnum):
    """Process exit codes of the onticlab command."""
    OK = 0
    CONFIG_ERROR = 1
    NUMERICAL_FAILURE = 2
