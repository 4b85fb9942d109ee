import pytest

import honda_verify.__main__ as main_mod


@pytest.fixture(autouse=True)
def _isolated_config(patched_config_paths):
    return patched_config_paths


def _exit_code(argv):
    with pytest.raises(SystemExit) as excinfo:
        main_mod.main(argv)
    return excinfo.value.code


def test_main_passes_on_a_passing_check(capsys):
    assert _exit_code(["sylow2"]) == 0
    assert '"status": "pass"' in capsys.readouterr().out


def test_click_usage_errors_exit_64(capsys):
    assert _exit_code(["--no-such-option"]) == main_mod.USAGE_EXIT_CODE
    assert _exit_code(["honda", "--p", "three"]) == main_mod.USAGE_EXIT_CODE


def test_command_usage_errors_exit_64(capsys):
    assert _exit_code(["honda", "--delta", "p,x"]) == 64
    assert "BadParameter" in capsys.readouterr().err


def test_failures_and_inconclusive_results(capsys):
    assert _exit_code(["maprime", "--e", "3"]) == 1
    assert _exit_code(["--search-height", "5", "classno", "Q(sqrt(10))"]) == 2
