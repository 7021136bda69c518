import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact", deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("exact")

from gsf.field import RationalField, field_create
from gsf.grassmann import random_point


@pytest.fixture(scope="session")
def rationals():
    return RationalField()


@pytest.fixture(scope="session")
def rational_points(rationals):
    """One generic rational point per small rank, reused across tests."""
    return {n: random_point(n, rationals, seed=1000 + n) for n in (1, 2, 3)}


@pytest.fixture(scope="session")
def mod11_points():
    field = field_create("gf(11)")
    return {n: random_point(n, field, seed=2000 + n) for n in (1, 2, 3)}
