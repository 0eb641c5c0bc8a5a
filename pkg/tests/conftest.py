"""Shared fixtures: polynomial chains are expensive to build, so each depth
is constructed once per session and shared read-only across test modules."""

import time

import pytest
from hypothesis import HealthCheck, settings

from wilson_super.psi_engine import psi_all

settings.register_profile(
    "exact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def chain6():
    return psi_all(6)


@pytest.fixture(scope="session")
def chain12():
    return psi_all(12)


@pytest.fixture(scope="session")
def chain20():
    return psi_all(20)


@pytest.fixture(scope="session")
def chain30_timed():
    """(chain, build seconds) at depth 30; only slow-marked tests request it."""
    start = time.monotonic()
    chain = psi_all(30)
    return chain, time.monotonic() - start
