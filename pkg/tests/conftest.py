"""Pytest configuration and shared fixtures for giventhat tests.

This module provides generic fixtures:
- Paths to the shipped fixture files (HOA, KTS, facts, problems)
- A fresh BDD manager per test
- Settings reset around every test
- Strategy registry isolation

Automaton builders and property-test oracles live in ``tests/fixtures``.
"""

import sys
from collections.abc import Iterator
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

# Add parent directory to path so tests can import core modules
FRAMEWORK_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(FRAMEWORK_ROOT))

import core.given  # noqa: E402,F401  registers the roster
from core.boolfn import BddManager  # noqa: E402
from core.config import reset_settings  # noqa: E402
from core.given import StrategyRegistry  # noqa: E402

# Autouse fixtures below are function-scoped; they only reset global state.
settings.register_profile(
    "giventhat",
    suppress_health_check=[HealthCheck.function_scoped_fixture, HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("giventhat")


@pytest.fixture(scope="session")
def framework_root() -> Path:
    """Get repository root directory."""
    return FRAMEWORK_ROOT


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    """Get fixtures directory path."""
    return Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def systems_dir(fixtures_dir: Path) -> Path:
    return fixtures_dir / "systems"


@pytest.fixture(scope="session")
def problems_dir(fixtures_dir: Path) -> Path:
    return fixtures_dir / "problems"


@pytest.fixture
def manager() -> BddManager:
    """Fresh BDD manager."""
    return BddManager()


@pytest.fixture
def temp_dir(tmp_path: Path) -> Path:
    """Temporary directory for written files."""
    out = tmp_path / "out"
    out.mkdir()
    return out


@pytest.fixture(autouse=True)
def reset_config() -> Iterator[None]:
    """Reload settings before and after each test so env overrides do not leak."""
    reset_settings()
    yield
    reset_settings()


@pytest.fixture(autouse=True)
def isolate_registry() -> Iterator[None]:
    """Restore the strategy registry after each test.

    Tests may register extra stages; the roster registered at import time
    is put back afterwards.
    """
    state = StrategyRegistry.snapshot()
    yield
    StrategyRegistry.restore(state)

