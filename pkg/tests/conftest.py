import pytest

from bielliptic import atlas


@pytest.fixture(scope="session")
def classification():
    """One full classification run shared by every test that needs it."""
    return atlas.classify_all()


@pytest.fixture(scope="session")
def ec_table():
    return atlas.default_ec_table()
