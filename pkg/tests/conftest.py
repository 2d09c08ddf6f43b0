import pytest

from algebra.kl import get_kl_table
from algebra.preorders import get_cell_structure


@pytest.fixture(scope="session", autouse=True)
def cache_dir(tmp_path_factory):
    """Point the KL table cache at a throwaway directory for the whole run."""
    path = tmp_path_factory.mktemp("kl_cache")
    with pytest.MonkeyPatch.context() as mp:
        mp.setenv("HECKE_CACHE_DIR", str(path))
        mp.setenv("HECKE_MAX_RANK", "8")
        yield str(path)


@pytest.fixture(scope="session")
def kl3(cache_dir):
    return get_kl_table(3)


@pytest.fixture(scope="session")
def kl4(cache_dir):
    return get_kl_table(4)


@pytest.fixture(scope="session")
def cells3(cache_dir):
    return get_cell_structure(3)


@pytest.fixture(scope="session")
def cells4(cache_dir):
    return get_cell_structure(4)


