import yaml
from typer.testing import CliRunner

from honda_verify import config as cfg
from honda_verify.cli.main import app

try:
    runner = CliRunner(mix_stderr=False)
except TypeError:
    runner = CliRunner()


def test_config_set_and_show(patched_config_paths):
    result = runner.invoke(app, ["config", "set", "search_height", "80"])
    assert result.exit_code == 0
    assert "Successfully set" in result.stdout

    show = runner.invoke(app, ["config", "show", "--key", "search_height"])
    assert show.exit_code == 0
    assert "80" in show.stdout


def test_config_show_all(patched_config_paths):
    result = runner.invoke(app, ["config", "show"])
    assert result.exit_code == 0
    for key in ("enumeration_limit", "output_format", "workers"):
        assert key in result.stdout


def test_config_set_invalid_key(patched_config_paths):
    result = runner.invoke(app, ["config", "set", "unknown_key", "val"])
    assert result.exit_code != 0
    assert "not a recognized" in result.stderr.lower()


def test_config_set_invalid_value(patched_config_paths):
    result = runner.invoke(app, ["config", "set", "workers", "many"])
    assert result.exit_code != 0


def test_config_show_invalid_key(patched_config_paths):
    result = runner.invoke(app, ["config", "show", "--key", "bad_key"])
    assert result.exit_code != 0
    assert "not a recognized key" in result.stderr.lower()


def test_output_format_setting_is_used(patched_config_paths):
    runner.invoke(app, ["config", "set", "output_format", "text"])
    result = runner.invoke(app, ["sylow2"])
    assert result.exit_code == 0
    assert not result.stdout.lstrip().startswith("{")


def test_bad_stored_setting_is_a_usage_error_but_config_still_runs(patched_config_paths):
    cfg.LOCAL_CONFIG_PATH.write_text(yaml.dump({"workers": 0}))
    result = runner.invoke(app, ["sylow2"])
    assert result.exit_code == 64
    assert "ConfigurationError" in result.stderr

    show = runner.invoke(app, ["config", "show", "--key", "workers"])
    assert show.exit_code == 0
