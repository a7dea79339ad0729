"""
Experiment configuration and the flat ``key=value`` file format it is read from.

Every key is optional. Unknown keys, duplicated keys and lines without ``=``
are parse errors carrying the 1-based line number; values of the wrong type
or out of range are value errors naming the key.
"""
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

from pydantic import BaseModel, ConfigDict, ValidationError, ValidationInfo, field_validator

from onticlab.sdk.common.enums import ExperimentName, OutputFormat, SmearKind
from onticlab.sdk.common.exceptions import ConfigParseError, ConfigValueError, UnknownExperimentError
from onticlab.sdk.common.utils.log import get_logger
from onticlab.sdk.common.utils.stringUtil import format_number, split_assignment
from onticlab.sdk.quantum.dynamics import MAX_EXACT_DIM

logger = get_logger(__name__)

MAX_SEED = 2 ** 64 - 1


class ExperimentConfig(BaseModel):
    """
    Attributes:
        experiment: Experiment to dispatch
        grid_theta, grid_phi: Nominal sphere-grid resolution
        oversample: Sub-cells per nominal cell along each axis
        dt, hbar: Evolution step and reduced Planck constant
        qdim: Quantum dimension for the hidden-state experiments
        smear_m: Hidden sub-levels per quantum direction
        seed: Seed of the random state pairs, 64-bit unsigned
        pairs: Number of random (φ, ψ) pairs
        identical_pairs: Draw φ = ψ instead of independent states
        dt_steps: Rows of the dt sweeps, dt, dt/10, ...
        profile, profile_width: Within-cell amplitude profile
        workers: Threads used for the quadratures
        output_path: Report path, ``results/<experiment>.<format>`` by default
        format: Report format
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    experiment: ExperimentName = ExperimentName.BORN_CHECK
    grid_theta: int = 200
    grid_phi: int = 400
    oversample: int = 4
    dt: float = 0.01
    hbar: float = 1.0
    qdim: int = 2
    smear_m: int = 4
    seed: int = 20240601
    pairs: int = 50
    identical_pairs: bool = False
    dt_steps: int = 3
    profile: SmearKind = SmearKind.UNIFORM
    profile_width: float = 1.0
    workers: int = 1
    output_path: Optional[str] = None
    format: OutputFormat = OutputFormat.CSV

    @field_validator("experiment", mode="before")
    @classmethod
    def _resolve_experiment(cls, value: Any) -> ExperimentName:
        if isinstance(value, ExperimentName):
            return value
        return ExperimentName.from_name(str(value))

    @field_validator("grid_theta", "grid_phi", "oversample", "dt", "hbar", "smear_m", "pairs",
                     "dt_steps", "profile_width", "workers")
    @classmethod
    def _positive(cls, value, info: ValidationInfo):
        if value <= 0:
            raise ValueError(f"{info.field_name} must be positive")
        return value

    @field_validator("qdim")
    @classmethod
    def _dimension(cls, value: int) -> int:
        if not 2 <= value <= MAX_EXACT_DIM:
            raise ValueError(f"qdim must be between 2 and {MAX_EXACT_DIM}")
        return value

    @field_validator("seed")
    @classmethod
    def _seed_range(cls, value: int) -> int:
        if not 0 <= value <= MAX_SEED:
            raise ValueError("seed must be a 64-bit unsigned integer")
        return value

    @field_validator("output_path")
    @classmethod
    def _non_empty_path(cls, value: Optional[str]) -> Optional[str]:
        if value is not None and not value.strip():
            raise ValueError("output_path must not be empty")
        return value

    @property
    def resolved_output_path(self) -> Path:
        if self.output_path:
            return Path(self.output_path)
        return Path("results") / f"{self.experiment.value}.{self.format.value}"

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any]) -> "ExperimentConfig":
        """
        Validate raw values into a config.

        :raises UnknownExperimentError: If ``experiment`` names no experiment
        :raises ConfigValueError: On the first invalid key
        """
        if "experiment" in values and not isinstance(values["experiment"], ExperimentName):
            try:
                ExperimentName.from_name(str(values["experiment"]))
            except ValueError as e:
                raise UnknownExperimentError(str(e)) from e
        try:
            return cls(**values)
        except ValidationError as e:
            error = e.errors()[0]
            key = str(error["loc"][0]) if error["loc"] else "config"
            if error["type"] == "extra_forbidden":
                raise ConfigValueError(key, f"unknown key '{key}'") from e
            cause = error.get("ctx", {}).get("error")
            message = str(cause) if cause is not None else f"{key}: {error['msg']}"
            raise ConfigValueError(key, message) from e

    def with_overrides(self, **overrides: Any) -> "ExperimentConfig":
        """Re-validated copy with the non-None overrides applied."""
        values = self.model_dump()
        values.update({key: value for key, value in overrides.items() if value is not None})
        return self.from_mapping(values)

    def echo(self) -> Dict[str, str]:
        """Key-ordered textual form of every setting, for report metadata."""
        rendered = {}
        for key in type(self).model_fields:
            value = getattr(self, key)
            if key == "output_path":
                value = self.resolved_output_path.as_posix()
            elif hasattr(value, "value"):
                value = value.value
            rendered[key] = format_number(value)
        return rendered


def parse_config_text(text: str) -> ExperimentConfig:
    """
    Parse the contents of a ``key=value`` config file.

    :raises ConfigParseError: With the line number of the offending line
    """
    known = set(ExperimentConfig.model_fields)
    values: Dict[str, str] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        try:
            pair = split_assignment(line)
        except ValueError as e:
            raise ConfigParseError(str(e), line=number) from e
        if pair is None:
            continue
        key, value = pair
        if key not in known:
            raise ConfigParseError(f"unknown key '{key}'", line=number)
        if key in values:
            raise ConfigParseError(f"duplicate key '{key}'", line=number)
        values[key] = value
    return ExperimentConfig.from_mapping(values)


def parse_config(path: Union[str, Path]) -> ExperimentConfig:
    """
    Read an experiment config file.

    :param path: Path of the ``key=value`` file
    :return: The validated config
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigParseError(f"cannot read config file {path}: {e.strerror}") from e
    config = parse_config_text(text)
    logger.debug(f"Parsed {path}: experiment={config.experiment.value}")
    return config
