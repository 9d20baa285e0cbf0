"""
why conftest.py?
https://docs.pytest.org/en/7.1.x/how-to/fixtures.html#scope-sharing-fixtures-across-classes-modules-packages-or-session
"""

from typing import Iterator

import inject
import numpy as np
import pytest

from geosat.experiments.settings_provider import configure_settings
from geosat.models.settings import ExperimentSettings


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run the acceptance-scale Monte Carlo tests, too"
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def rng() -> np.random.Generator:
    """a fresh stream with a fixed seed"""
    return np.random.default_rng(20240611)


@pytest.fixture
def injected_settings() -> Iterator[ExperimentSettings]:
    """
    binds small default settings for the duration of a test and clears the injector afterwards
    """
    settings = ExperimentSettings(trial_budget=10**8, jobs=1)
    configure_settings(settings, overwrite=True)
    yield settings
    inject.clear()
