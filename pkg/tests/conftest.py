import pytest

from entwine.catalog import CATALOG, catalog_entry


@pytest.fixture(scope="session")
def catalog_q():
    """All catalog entries over the rationals, built once."""
    return {name: catalog_entry(name) for name in sorted(CATALOG)}


@pytest.fixture(scope="session")
def z2_hopf(catalog_q):
    return catalog_q["z2-hopf"]


@pytest.fixture(scope="session")
def sweedler(catalog_q):
    return catalog_q["sweedler-h4"]
