from typing import Callable

import pytest

from ringlab.config import config
from ringlab.core.ring import FiniteRing, construct
from ringlab.ringspec import catalog_names
from ringlab.types import Catalog

_RINGS: dict[str, FiniteRing] = {}


def catalog_ring(name: str) -> FiniteRing:
    """Build each catalog ring once per session; the engines cache by ring identity."""
    if name not in _RINGS:
        _RINGS[name] = construct(Catalog(name=name))
    return _RINGS[name]


def small_catalog() -> list[str]:
    """Catalog rings within the default exhaustive-oracle bound."""
    return [name for name in catalog_names() if catalog_ring(name).order <= config.bounds.oracle_max_order]


@pytest.fixture
def ring() -> Callable[[str], FiniteRing]:
    return catalog_ring


@pytest.fixture
def z4() -> FiniteRing:
    return catalog_ring("z4")


@pytest.fixture
def z6() -> FiniteRing:
    return catalog_ring("z6")


@pytest.fixture
def z12() -> FiniteRing:
    return catalog_ring("z12")


@pytest.fixture
def t2f2() -> FiniteRing:
    # index = 4a + 2b + c for [[a, b], [0, c]]
    return catalog_ring("t2f2")


@pytest.fixture
def m2f2() -> FiniteRing:
    # index = 8a + 4b + 2c + d for [[a, b], [c, d]]
    return catalog_ring("m2f2")


@pytest.fixture
def bounds():
    """Restore the global bounds after a test changes them."""
    saved = config.bounds.model_copy()
    yield config.bounds
    config.bounds = saved
