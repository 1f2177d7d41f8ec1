# tests/conftest.py
import pytest
from click.testing import CliRunner

from prismlab.core.config import get_settings
from prismlab.models.cell import ComplexSpec


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Каждый тест видит настройки, собранные из текущего окружения."""
    monkeypatch.delenv("PRISMLAB_MAX_CELLS", raising=False)
    monkeypatch.delenv("PRISMLAB_EXHAUSTIVE_SEARCH_MAX_TOP_CELLS", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def hexagon() -> ComplexSpec:
    return ComplexSpec(2, 2)


@pytest.fixture
def sphere() -> ComplexSpec:
    return ComplexSpec(3, 2)


@pytest.fixture
def y43() -> ComplexSpec:
    return ComplexSpec(4, 3)
