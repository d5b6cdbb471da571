from __future__ import annotations

import random

import pytest

from simplicial_fill.oracle.census import cached_census


@pytest.fixture
def rng():
    return random.Random(20240531)


@pytest.fixture(scope="session")
def census():
    """Complete censuses, computed once and cached on disk between runs."""
    cache = {}

    def get(n: int, d: int):
        if (n, d) not in cache:
            cache[(n, d)] = cached_census(n, d)
        return cache[(n, d)]

    return get
