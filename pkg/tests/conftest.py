"""Shared fixtures: the two classification runs are expensive, so run each once."""

import pytest

from index2poly.enumeration import run_pipeline


@pytest.fixture(scope="session")
def pruned():
    return run_pipeline()


@pytest.fixture(scope="session")
def exhaustive():
    return run_pipeline(exhaustive=True)
