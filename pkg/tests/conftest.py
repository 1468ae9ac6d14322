import pytest

from twistwidth import catalog, enumerate_all


@pytest.fixture(scope="session")
def cat():
    return catalog()


@pytest.fixture(scope="session")
def dms_by_n():
    """Every delta-matroid on 1..4 canonical labels, enumerated once."""
    return {n: list(enumerate_all(n)) for n in (1, 2, 3, 4)}
