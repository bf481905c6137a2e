"""Shared pytest fixtures."""

from collections.abc import Iterator

import numpy as np
import pytest

from qbcharge.config import Settings, get_settings


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def settings(monkeypatch: pytest.MonkeyPatch) -> Settings:
    """Settings isolated from the caller's QBCHARGE_* environment."""
    for name in ("QBCHARGE_SWEEP_WORKERS", "QBCHARGE_EIGENSOLVER", "QBCHARGE_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    return Settings(_env_file=None)  # type: ignore[call-arg]


@pytest.fixture(autouse=True)
def _fresh_settings_cache() -> Iterator[None]:
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
