# tests/test_config.py
import logging
from pathlib import Path

import pytest
from pydantic import ValidationError

from prismlab.core.config import Settings, get_settings
from prismlab.core.logging import setup_logging
from prismlab.services import orientation
from prismlab.services.orientation import MODE_O

from .utils import TETRAHEDRON


def test_defaults() -> None:
    settings = get_settings()
    assert settings.MAX_CELLS == 10**6
    assert settings.EXHAUSTIVE_SEARCH_MAX_TOP_CELLS == 24
    assert settings.JSON_INDENT == 2


def test_environment_overrides(monkeypatch) -> None:
    monkeypatch.setenv("PRISMLAB_MAX_CELLS", "500")
    get_settings.cache_clear()
    assert get_settings().MAX_CELLS == 500


def test_invalid_cap_is_rejected(monkeypatch) -> None:
    monkeypatch.setenv("PRISMLAB_MAX_CELLS", "0")
    with pytest.raises(ValidationError):
        Settings()


def test_search_threshold_from_environment(monkeypatch) -> None:
    monkeypatch.setenv("PRISMLAB_EXHAUSTIVE_SEARCH_MAX_TOP_CELLS", "2")
    get_settings.cache_clear()
    assert orientation.search_orientation(TETRAHEDRON, MODE_O).method == "propagation"


def test_setup_logging_replaces_its_handler() -> None:
    setup_logging("DEBUG")
    setup_logging("info")
    logger = logging.getLogger("prismlab")
    assert logger.level == logging.INFO
    assert sum(1 for h in logger.handlers if getattr(h, "_prismlab", False)) == 1


def test_every_setting_is_documented_in_env_example() -> None:
    example = Path(__file__).parent.parent / ".env.example"
    documented = {
        line.split("=", 1)[0].removeprefix("PRISMLAB_")
        for line in example.read_text(encoding="utf-8").splitlines()
        if line and not line.startswith("#")
    }
    assert documented == set(Settings.model_fields)
