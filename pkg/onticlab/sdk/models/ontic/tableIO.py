"""
CSV export and import of tabulated models.

Columns ``theta,phi,weight,mu,xi`` with a header row, UTF-8, '.' decimals,
LF line endings and shortest round-trip float text.
"""
import csv
from pathlib import Path
from typing import Tuple, Union

import numpy as np

from onticlab.sdk.common.exceptions import ConfigParseError, UnwritablePathError
from onticlab.sdk.common.utils.log import get_logger
from onticlab.sdk.models.ontic.onticGrid import SPHERE_MEASURE, OnticGrid, require_same_grid
from onticlab.sdk.models.ontic.tables import EpistemicDistribution, ResponseFunction

logger = get_logger(__name__)

TABLE_COLUMNS = ("theta", "phi", "weight", "mu", "xi")


def export_table(path: Union[str, Path], mu: EpistemicDistribution, xi: ResponseFunction) -> Path:
    """
    Write μ and ξ with their grid to CSV.

    :return: The written path
    """
    require_same_grid(xi.grid, mu.grid)
    target = Path(path)
    grid = mu.grid
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(TABLE_COLUMNS)
            for (theta, phi), weight, m, x in zip(grid.points.tolist(), grid.weights.tolist(),
                                                  mu.values.tolist(), xi.values.tolist()):
                writer.writerow((repr(theta), repr(phi), repr(weight), repr(m), repr(x)))
    except OSError as e:
        raise UnwritablePathError(f"cannot write table to {target}: {e}") from e

    logger.info(f"Exported {grid.count} table rows to {target}")
    return target


def import_table(path: Union[str, Path], total_measure: float = SPHERE_MEASURE,
                 enforce_normalization: bool = True) -> Tuple[OnticGrid, EpistemicDistribution, ResponseFunction]:
    """
    Read a table written by ``export_table`` and rebuild grid, μ and ξ.

    :param enforce_normalization: Reject a μ column whose quadrature is not 1
    :raises ConfigParseError: On a wrong header or a malformed row (1-based line)
    """
    source = Path(path)
    with open(source, "r", encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header is None or tuple(h.strip() for h in header) != TABLE_COLUMNS:
            raise ConfigParseError(f"expected header {','.join(TABLE_COLUMNS)}", line=1)
        rows = []
        for line_number, row in enumerate(reader, start=2):
            if len(row) != len(TABLE_COLUMNS):
                raise ConfigParseError(f"expected {len(TABLE_COLUMNS)} columns, got {len(row)}", line=line_number)
            try:
                rows.append([float(cell) for cell in row])
            except ValueError as e:
                raise ConfigParseError(f"non-numeric cell: {e}", line=line_number) from e

    data = np.asarray(rows, dtype=np.float64).reshape(-1, len(TABLE_COLUMNS))
    grid = OnticGrid(points=data[:, 0:2], weights=data[:, 2], total_measure=total_measure)
    mu = EpistemicDistribution(data[:, 3], grid, enforce_normalization=enforce_normalization)
    xi = ResponseFunction(data[:, 4], grid)
    logger.debug(f"Imported {grid.count} table rows from {source}")
    return grid, mu, xi
