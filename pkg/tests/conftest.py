import functools

import pytest

from fibpcubes.cubes import cube_census
from fibpcubes.graph import build


@pytest.fixture(scope="session")
def built():
    """Memoized graph builder shared across the whole test session."""
    return functools.lru_cache(maxsize=None)(build)


@pytest.fixture(scope="session")
def census(built):
    """Memoized exhaustive (dimension, bottom-weight) cube censuses."""

    @functools.lru_cache(maxsize=None)
    def _census(p, n):
        return cube_census(built(p, n))

    return _census
