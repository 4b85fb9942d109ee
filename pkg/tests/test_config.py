from pathlib import Path

import pytest
import yaml

from honda_verify import config as cfg
from honda_verify.exceptions import ConfigurationError
from honda_verify.run_config import RunConfig


def test_defaults(patched_config_paths: Path):
    conf = cfg.Config()
    val, src = conf.get_with_source("search_height")
    assert val == 50
    assert src == cfg.SOURCE_DEFAULT


def test_user_config_override(patched_config_paths: Path):
    user_file = cfg.USER_CONFIG_PATH
    user_file.parent.mkdir(parents=True, exist_ok=True)
    user_file.write_text(yaml.dump({"search_height": 80, "output_format": "text"}))
    conf = cfg.Config()
    assert conf.get("search_height") == 80
    assert conf.get_with_source("search_height")[1] == cfg.SOURCE_USER_CONFIG
    assert conf.get("output_format") == "text"


def test_local_config_beats_user_config(patched_config_paths: Path):
    user_file = cfg.USER_CONFIG_PATH
    user_file.parent.mkdir(parents=True, exist_ok=True)
    user_file.write_text(yaml.dump({"workers": 2}))
    cfg.LOCAL_CONFIG_PATH.write_text(yaml.dump({"workers": 4, "unknown": 1}))
    conf = cfg.Config()
    assert conf.get("workers") == 4
    assert conf.get_with_source("workers")[1] == cfg.SOURCE_LOCAL_CONFIG
    assert conf.get("unknown") is None


def test_env_var_override(monkeypatch: pytest.MonkeyPatch, patched_config_paths: Path):
    monkeypatch.setenv(cfg.ENV_VAR_PREFIX + "TRUNCATION_DEPTH", "8")
    monkeypatch.setenv(cfg.ENV_VAR_PREFIX + "INCLUDE_TIMINGS", "true")
    conf = cfg.Config()
    assert conf.get("truncation_depth") == 8
    assert conf.get_with_source("truncation_depth")[1].startswith(cfg.SOURCE_ENV_VAR)
    assert conf.get("include_timings") is True


def test_env_var_bad_int_is_ignored(
    monkeypatch: pytest.MonkeyPatch, patched_config_paths: Path, capsys
):
    monkeypatch.setenv(cfg.ENV_VAR_PREFIX + "WORKERS", "many")
    conf = cfg.Config()
    assert conf.get("workers") == 1
    assert "Could not cast" in capsys.readouterr().err


def test_update_from_cli(patched_config_paths: Path):
    conf = cfg.Config()
    conf.update_from_cli("search_height", 12)
    conf.update_from_cli("workers", None)
    assert conf.get_with_source("search_height") == (12, "command-line argument")
    assert conf.get_with_source("workers")[1] == cfg.SOURCE_DEFAULT


def test_set_and_persist(patched_config_paths: Path):
    conf = cfg.Config()
    assert conf.set("enumeration_limit", "729")
    assert conf.get_with_source("enumeration_limit") == (729, cfg.SOURCE_OVERRIDE)
    reload_conf = cfg.Config()
    assert reload_conf.get_with_source("enumeration_limit") == (729, cfg.SOURCE_USER_CONFIG)


def test_set_invalid_values(patched_config_paths: Path, capsys):
    conf = cfg.Config()
    assert not conf.set("workers", "lots")
    assert not conf.set("output_format", "xml")
    assert not conf.set("workers", "0")
    assert not conf.set("no_such_key", "1")
    assert "not a recognized setting" in capsys.readouterr().err
    assert conf.get_with_source("workers") == (1, cfg.SOURCE_DEFAULT)


def test_run_config_from_config(patched_config_paths: Path):
    conf = cfg.Config()
    conf.update_from_cli("formal_precision", 20)
    rc = RunConfig.from_config(conf, workers=3, search_height=None)
    assert rc.formal_precision == 20
    assert rc.workers == 3
    assert rc.search_height == 50
    assert rc.precision_for(3) == 20
    assert rc.depth_for(2) == 6


def test_run_config_defaults_and_validation():
    rc = RunConfig()
    assert rc.depth_for(1) == 4
    assert rc.precision_for(5) == 27
    with pytest.raises(ValueError):
        RunConfig(workers=0)
    with pytest.raises(ValueError):
        RunConfig(unexpected=1)


def test_run_config_rejects_bad_stored_value(patched_config_paths: Path):
    cfg.LOCAL_CONFIG_PATH.write_text(yaml.dump({"search_height": 0}))
    with pytest.raises(ConfigurationError, match="search_height"):
        RunConfig.from_config(cfg.Config())
