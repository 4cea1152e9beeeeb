import pytest

from cubicforms import build_all_series


@pytest.fixture(scope="session")
def series300():
    return build_all_series(300)


@pytest.fixture(scope="session")
def series51(series300):
    # any max_n <= 300 can reuse the cached master enumeration
    return build_all_series(51)
