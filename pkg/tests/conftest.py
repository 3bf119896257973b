import random

import pytest
from hypothesis import HealthCheck, settings

from services.config import RunConfig
from services.enumeration import all_tilings
from services.lattice import DomainSpec

settings.register_profile(
    "ci", derandomize=True, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def run_config():
    return RunConfig.from_env()


@pytest.fixture
def rng(run_config):
    return random.Random(run_config.seed)


@pytest.fixture(scope="session")
def tilings():
    """Enumerations shared across the session, keyed by (m, n)."""
    return lambda m, n: all_tilings(DomainSpec(m, n))
