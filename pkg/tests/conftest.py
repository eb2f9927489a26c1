from __future__ import annotations

import pytest

from obp import ObpInstance

import corpus_util


@pytest.fixture(scope="session")
def ex31() -> ObpInstance:
    return ObpInstance(4, (4, 2, 1, 3), (4, 3, 6, 9))


@pytest.fixture(scope="session")
def fig2() -> ObpInstance:
    return ObpInstance(4, (4, 1, 3, 2), (6, 5, 4, 3))


@pytest.fixture(scope="session")
def corpus() -> corpus_util.Corpus:
    """Every instance with n <= 5, K <= 24 passing conditions (i), (ii) and (iv)."""
    return corpus_util.scan_corpus(max_n=5, kmax=24)
