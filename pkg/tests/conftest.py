"""Pytest configuration and shared fixtures."""

import os

import pytest

from clifford_rqm.algebra import c3, c4
from clifford_rqm.representations import regular_rep_conjugate, regular_rep_direct


def pytest_configure(config):
    """Register custom pytest markers."""
    config.addinivalue_line("markers", "tier_a: Tier A tests - fast exact checks, always run")
    config.addinivalue_line(
        "markers", "tier_b: Tier B tests - exhaustive sweeps over every index tuple or sequence"
    )


def _skip_exhaustive() -> bool:
    """Check if exhaustive sweeps were switched off.

    Returns:
        bool: True if CLIFFORD_RQM_SKIP_EXHAUSTIVE is set to 'true'
    """
    return os.getenv("CLIFFORD_RQM_SKIP_EXHAUSTIVE", "").lower() == "true"


def pytest_runtest_setup(item):
    """Auto-skip Tier B tests when exhaustive sweeps are disabled."""
    if item.get_closest_marker("tier_b") and _skip_exhaustive():
        pytest.skip("Skipping Tier B: CLIFFORD_RQM_SKIP_EXHAUSTIVE=true")


@pytest.fixture(scope="session")
def algebra_c3():
    return c3()


@pytest.fixture(scope="session")
def algebra_c4():
    return c4()


@pytest.fixture(scope="session")
def direct_c4(algebra_c4):
    return regular_rep_direct(algebra_c4)


@pytest.fixture(scope="session")
def conjugate_c4(algebra_c4):
    return regular_rep_conjugate(algebra_c4)


@pytest.fixture(autouse=True)
def _isolated_settings(monkeypatch):
    """Keep developer environment variables out of the tests."""
    for name in (
        "CLIFFORD_RQM_TOLERANCE",
        "CLIFFORD_RQM_GOLDEN_DIR",
        "CLIFFORD_RQM_REPORT_DIR",
        "LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)
