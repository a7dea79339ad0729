import numpy as np
import pytest

from onticlab.sdk.common.config.configManager import load_config
from onticlab.sdk.models.ontic import KochenSpeckerModel, sphere_grid


@pytest.fixture(scope="session")
def coarse_grid():
    # 160 x 320 points, quadrature error around 1e-3
    return sphere_grid(40, 80, 4)


@pytest.fixture(scope="session")
def ks_coarse(coarse_grid):
    return KochenSpeckerModel(coarse_grid, tolerance=5e-3)


@pytest.fixture(scope="session")
def full_grid():
    return sphere_grid(200, 400, 4)


@pytest.fixture(scope="session")
def ks_full(full_grid):
    return KochenSpeckerModel(full_grid)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def settings_file(tmp_path, monkeypatch):
    """Write a global settings file, load it, and restore the defaults afterwards."""
    monkeypatch.delenv("ONTICLAB_CONFIG", raising=False)
    monkeypatch.chdir(tmp_path)

    def write(text: str):
        path = tmp_path / "settings.yaml"
        path.write_text(text, encoding="utf-8")
        load_config(str(path))
        return path

    yield write
    load_config(str(tmp_path / "absent.yaml"))


@pytest.fixture
def small_chunks(settings_file):
    """Force many summation chunks on small grids."""
    return settings_file("numerics:\n  chunk_size: 4096\n")
