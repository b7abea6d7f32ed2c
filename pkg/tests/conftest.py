import functools

import pytest

from extremal_cech import complexgen, homology
from extremal_cech.construct import build_validated


@functools.lru_cache(maxsize=None)
def cached_pipeline(kind, k, n, delta="auto"):
    """Validated (point set, filtration, thresholds, diagram), shared across
    test modules to keep the suite fast."""
    ps, fc, thresholds = build_validated(kind, k=k, n=n, delta=delta)
    return ps, fc, thresholds, homology.reduce(fc)


@pytest.fixture(scope="session")
def pipeline():
    return cached_pipeline


@pytest.fixture(scope="session")
def threed_n2():
    return cached_pipeline("3d", 1, 2)


@pytest.fixture(scope="session")
def even_2_5():
    return cached_pipeline("even", 2, 5)


@pytest.fixture(scope="session")
def odd_2_2():
    return cached_pipeline("odd", 2, 2)


def threshold(thresholds, cls):
    return complexgen.threshold_after(thresholds, cls)
