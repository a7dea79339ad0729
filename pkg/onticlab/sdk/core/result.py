import csv
import io
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Sequence, Union

import numpy as np

from onticlab.sdk.common import __version__
from onticlab.sdk.common.enums import OutputFormat
from onticlab.sdk.common.exceptions import DomainError, UnwritablePathError
from onticlab.sdk.common.utils.log import get_logger
from onticlab.sdk.common.utils.stringUtil import format_number, json_number

logger = get_logger(__name__)


@dataclass
class ExperimentReport:
    """
    Represents the rows produced by one experiment run.

    Attributes:
        experiment: Name of the experiment
        columns: Column names, fixed per experiment
        rows: Data rows, one cell per column
        metadata: Versions, config echo and timestamp; written ahead of the data
    """
    experiment: str
    columns: List[str]
    rows: List[List[Any]] = field(default_factory=list)
    metadata: Dict[str, str] = field(default_factory=dict)

    def add_row(self, *cells: Any) -> None:
        if len(cells) != len(self.columns):
            raise DomainError(f"{self.experiment} row has {len(cells)} cells, expected {len(self.columns)}")
        self.rows.append(list(cells))

    def column(self, name: str) -> List[Any]:
        index = self.columns.index(name)
        return [row[index] for row in self.rows]

    def stamp(self, config_echo: Dict[str, str]) -> None:
        """Fill the metadata header."""
        self.metadata = {
            "onticlab_version": __version__,
            "numpy_version": np.__version__,
            "experiment": self.experiment,
            **{f"config.{key}": value for key, value in config_echo.items()},
            "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        }

    def data_csv(self) -> str:
        """Header row plus data rows; the region compared across runs."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([format_number(cell) for cell in row])
        return buffer.getvalue()

    def to_csv(self) -> str:
        header = "".join(f"# {key}={value}\n" for key, value in self.metadata.items())
        return header + self.data_csv()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "metadata": dict(self.metadata),
            "columns": list(self.columns),
            "rows": [[json_number(cell) for cell in row] for row in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def render(self, output_format: OutputFormat) -> str:
        return self.to_json() if output_format is OutputFormat.JSON else self.to_csv()

    def write(self, path: Union[str, Path], output_format: OutputFormat = OutputFormat.CSV) -> Path:
        """
        Write the report, creating parent directories.

        :raises UnwritablePathError: If the path cannot be written
        """
        target = Path(path)
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            with open(target, "w", encoding="utf-8", newline="") as file:
                file.write(self.render(output_format))
        except OSError as e:
            raise UnwritablePathError(f"cannot write report to {target}: {e.strerror or e}") from e
        logger.info(f"Wrote {len(self.rows)} {self.experiment} rows to {target}")
        return target


def data_region(text: str) -> str:
    """
    Strip the metadata header from a written CSV report.

    :param text: Full CSV report
    :return: The header row and data rows
    """
    lines: Sequence[str] = text.splitlines(keepends=True)
    return "".join(line for line in lines if not line.startswith("#"))
