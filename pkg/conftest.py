"""
Shared fixtures for the workbench tests
=======================================
"""

import os
import sys

import pytest

# Add the repository root to the Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.bundles import Catalog  # noqa: E402
from src.exccol import ExceptionalCollection  # noqa: E402


@pytest.fixture(scope="session")
def catalog():
    return Catalog(degree=5)


@pytest.fixture(scope="session")
def collection(catalog):
    return ExceptionalCollection(catalog)


@pytest.fixture
def clean_env(monkeypatch):
    for name in ("WORKBENCH_SEED", "WORKBENCH_DEGREE", "WORKBENCH_SAMPLES",
                 "LOG_LEVEL", "LOG_FILE"):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch
