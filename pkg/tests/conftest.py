"""Shared fixtures for the test suite."""
import logging
import random

import pytest

from src.core.config import settings
from src.core.domain.number_field import Q, Q_ZETA3, Q_ZETA12
from src.core.logging import setup_logging

# postcondition checks (SNF, group closure) run on every call under test
settings.environment = "test"


@pytest.fixture(scope="session", autouse=True)
def configure_logging():
    setup_logging(level="WARNING")
    yield
    logging.getLogger("splitcubic").setLevel(logging.WARNING)


@pytest.fixture
def rng():
    """Seeded generator so randomised checks are reproducible."""
    return random.Random(20240611)


@pytest.fixture
def q_field():
    return Q


@pytest.fixture
def zeta3_field():
    return Q_ZETA3


@pytest.fixture
def zeta12_field():
    return Q_ZETA12


@pytest.fixture
def omega(zeta3_field):
    return zeta3_field.omega()


@pytest.fixture
def sqrt3(zeta12_field):
    return zeta12_field.sqrt3()


@pytest.fixture(scope="session")
def certification():
    """One service for the session so the 19-plane basis and its Gram are built once."""
    from src.application import CertificationService

    return CertificationService()


@pytest.fixture(scope="session")
def fermat_planes():
    from src.core.services.fermat_catalog import all_fermat_planes

    return all_fermat_planes()
