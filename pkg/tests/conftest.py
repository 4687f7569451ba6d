import pytest

from absorb_lab.generators import enumerate_semigroups


@pytest.fixture(scope="session")
def small_corpus():
    """Every associative table of order 1..3 (122 tables)."""
    return [S for n in (1, 2, 3) for S in enumerate_semigroups(n)]


@pytest.fixture(scope="session")
def order4():
    return list(enumerate_semigroups(4))
