import pytest

from goldgraph.primes import build_spf_table


@pytest.fixture(scope="session")
def table_2k():
    return build_spf_table(2100)


@pytest.fixture(scope="session")
def table_10k():
    return build_spf_table(10_001)


@pytest.fixture(scope="session")
def table_20k():
    return build_spf_table(20_001)
