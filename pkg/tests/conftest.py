import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from cyclomat.enumeration import enumerate_sprime  # noqa: E402
from cyclomat.ring import RingId  # noqa: E402

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def compositum_levels():
    return enumerate_sprime(RingId.COMPOSITUM, 8)


@pytest.fixture(scope="session")
def zsqrt2_levels():
    return enumerate_sprime(RingId.ZSQRT2, 10)


@pytest.fixture(scope="session")
def zphi_levels():
    return enumerate_sprime(RingId.ZPHI, 9)


@pytest.fixture(scope="session")
def zsqrt3_levels():
    return enumerate_sprime(RingId.ZSQRT3, 8)


@pytest.fixture(scope="session")
def z_levels():
    return enumerate_sprime(RingId.Z, 8)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)
