"""
PyTest configuration file for bs-decomp.

This file defines options, markers and fixtures shared by all tests.
"""

import json
import logging
from pathlib import Path

import pytest

from bs_decomp.koszul import DegreeTuple


def pytest_addoption(parser):
    """
    Add custom command-line options to pytest.
    """
    group = parser.getgroup("bs-decomp", "bs-decomp Options")

    group.addoption(
        "--sweep-max-degree",
        action="store",
        dest="sweep_max_degree",
        type=int,
        default=4,
        help="Largest base degree used by the exhaustive tests"
    )


def pytest_configure(config):
    """
    Configure pytest before tests start.
    """
    logging.basicConfig(
        level=logging.INFO,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )

    config.addinivalue_line(
        "markers", "exhaustive: mark a test that loops over every base tuple in a range"
    )
    config.addinivalue_line(
        "markers", "cli: mark a test that drives the command line"
    )


@pytest.fixture(scope="session")
def sweep_max_degree(request) -> int:
    return request.config.getoption("--sweep-max-degree")


@pytest.fixture
def a234() -> DegreeTuple:
    return DegreeTuple((2, 3, 4))


@pytest.fixture
def a222() -> DegreeTuple:
    return DegreeTuple((2, 2, 2))


@pytest.fixture
def isolated_config(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """
    Fixture providing an isolated configuration environment.

    The working directory is an empty temporary directory with an empty
    bs_decomp.json, and BS_DECOMP_JOBS is unset.

    Returns:
        Path to the configuration file
    """
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("BS_DECOMP_JOBS", raising=False)
    config_file = tmp_path / "bs_decomp.json"
    config_file.write_text(json.dumps({}))
    return config_file
