import importlib
import logging

import pytest

import config


@pytest.fixture
def reload_config(monkeypatch):
    def _reload(**env):
        for name, value in env.items():
            monkeypatch.setenv(name, value)
        return importlib.reload(config)

    yield _reload
    monkeypatch.undo()
    importlib.reload(config)


def test_defaults():
    assert 0.0 < config.NEAR_ONE_SWITCH < 1.0
    assert config.DEFAULT_SLACK >= 0.0
    assert config.SOLVE_MAX_ITERS >= 1


def test_environment_overrides(reload_config):
    cfg = reload_config(MODCERT_DEFAULT_SLACK="1e-9", MODCERT_MAX_TERMS="500")
    assert cfg.DEFAULT_SLACK == 1e-9
    assert cfg.MAX_TERMS == 500


@pytest.mark.parametrize("name, value", [
    ("MODCERT_NEAR_ONE_SWITCH", "1.5"),
    ("MODCERT_SERIES_TOL", "0"),
    ("MODCERT_SOLVE_MAX_ITERS", "0"),
    ("MODCERT_DEFAULT_SLACK", "-1"),
    ("MODCERT_GRID_MARGIN", "0.6"),
])
def test_invalid_values_are_rejected(reload_config, name, value):
    with pytest.raises(ValueError):
        reload_config(**{name: value})


def test_loose_series_tolerance_warns(reload_config, caplog):
    with caplog.at_level(logging.WARNING, logger="config"):
        reload_config(MODCERT_SERIES_TOL="1e-8")
    assert "SERIES_TOL" in caplog.text


def test_setup_logging_levels():
    config.setup_logging("debug")
    assert logging.getLogger().level == logging.DEBUG
    config.setup_logging(logging.WARNING)
    assert logging.getLogger().level == logging.WARNING
