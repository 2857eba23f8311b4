import pytest

from grpomega.specs import load_catalog, packaged_catalog_path


@pytest.fixture(scope="session")
def catalog12():
    return load_catalog(packaged_catalog_path("order12"))


@pytest.fixture(scope="session")
def catalog60():
    return load_catalog(packaged_catalog_path("order60"))


@pytest.fixture(scope="session")
def catalog660():
    return load_catalog(packaged_catalog_path("order660"))


@pytest.fixture(scope="session")
def catalog1092():
    return load_catalog(packaged_catalog_path("order1092"))
