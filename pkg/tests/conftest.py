import pytest

from trackwall.datafiles import DEFAULT_DATA_DIR, Taxonomy
from trackwall.runtime import Gateway

FIXTURES = __import__("pathlib").Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def data_dir():
    return DEFAULT_DATA_DIR


@pytest.fixture()
def gateway(tmp_path):
    gw = Gateway(
        policy_path=tmp_path / "policy.json",
        registry_path=tmp_path / "tracker_registry.json",
    )
    yield gw
    gw.close()


@pytest.fixture(scope="session")
def shared_gateway():
    """Read-only gateway for tests that never mutate policy or registry."""
    return Gateway()


@pytest.fixture()
def toy_taxonomy():
    return Taxonomy(("a", "b", "c"))


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES
