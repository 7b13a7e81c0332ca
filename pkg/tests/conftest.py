"""Shared pytest fixtures for fraclog tests."""

from pathlib import Path

import pytest

from fraclog.config import RunConfig
from fraclog.extremals import gaussian, mixture_corpus, radial_corpus
from fraclog.fields import GridField, RadialProfile

# Grid resolution for fast tests; acceptance runs use the 256-point default.
TEST_GRID_POINTS = 128
TEST_HALF_WIDTH = 8.0


@pytest.fixture
def gaussian_grid_1d() -> GridField:
    """exp(-pi x^2 / 2) on [-8, 8) with 256 points."""
    field_, _ = gaussian(1, 1.0, "grid")
    return field_


@pytest.fixture
def gaussian_radial_3d() -> RadialProfile:
    """exp(-pi r^2 / 2) in R^3 on the default radial nodes."""
    profile, _ = gaussian(3, 1.0, "radial")
    return profile


@pytest.fixture(scope="session")
def grid_corpus() -> list[GridField]:
    """Five seeded 2-d Gaussian mixtures at test resolution."""
    return mixture_corpus(seed=7, count=5, d=2, L=TEST_HALF_WIDTH, N=TEST_GRID_POINTS)


@pytest.fixture(scope="session")
def radial_corpus_3d() -> list[RadialProfile]:
    """Five seeded positive radial mixtures in R^3."""
    return radial_corpus(seed=11, count=5, n=3)


@pytest.fixture
def run_config(tmp_path: Path) -> RunConfig:
    """Single-threaded config writing CSV into a temp dir."""
    return RunConfig.model_validate(
        {
            "grid": {"points_per_axis": TEST_GRID_POINTS},
            "output": {"csv": tmp_path / "out.csv", "threads": 1, "batch_timeout": 0.05},
        }
    )


@pytest.fixture(autouse=True)
def isolated_environment(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    """Keep user config files and FRACLOG_THREADS out of tests."""
    monkeypatch.delenv("FRACLOG_THREADS", raising=False)
    monkeypatch.setenv("HOME", str(tmp_path / "home"))
    monkeypatch.chdir(tmp_path)
