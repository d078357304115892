import pytest
from hypothesis import HealthCheck, settings

from quiverfan import catalog

settings.register_profile(
    "repo", deadline=None, max_examples=60, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@pytest.fixture
def a2():
    return catalog.linear_a(2)


@pytest.fixture
def a3():
    return catalog.linear_a(3)


@pytest.fixture
def k2():
    return catalog.kronecker(2)


@pytest.fixture
def tri():
    return catalog.triangle()
