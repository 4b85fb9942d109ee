import pytest
import typer

from honda_verify.cli_utils import parse_assumption_options, parse_delta, parse_prime_list


def test_assumption_options_empty_and_none():
    assert parse_assumption_options(None) == {}
    assert parse_assumption_options([]) == {}


def test_assumption_options_keep_values_verbatim():
    assert parse_assumption_options(
        ["rank.X015.Q=0", " label.twist.d2 = 960G3 ", "note=a=b"]
    ) == {"rank.X015.Q": "0", "label.twist.d2": "960G3", "note": "a=b"}


@pytest.mark.parametrize("bad", ["no_equals", "=value"])
def test_assumption_options_invalid(bad):
    with pytest.raises(typer.BadParameter):
        parse_assumption_options([bad])


def test_parse_delta():
    assert parse_delta("p,1") == ["p", "1"]
    assert parse_delta(" P , 1 ,p", 3) == ["p", "1", "p"]
    with pytest.raises(typer.BadParameter):
        parse_delta("p,2")
    with pytest.raises(typer.BadParameter):
        parse_delta("")
    with pytest.raises(typer.BadParameter):
        parse_delta("p,1", 3)


def test_parse_prime_list():
    assert parse_prime_list("13, 43,") == [13, 43]
    for bad in ("a,b", ""):
        with pytest.raises(typer.BadParameter):
            parse_prime_list(bad)
