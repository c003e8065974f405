"""Shared fixtures for the horospinors test suite"""

import numpy as np
import pytest

from horospinors.config import config


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so random trials are reproducible"""
    return np.random.default_rng(20240611)


@pytest.fixture(autouse=True)
def default_config():
    """Every test starts and ends with built-in settings"""
    config.reset()
    yield
    config.reset()
