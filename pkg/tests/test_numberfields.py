import pytest

from honda_verify.exceptions import NumberFieldError, SearchInconclusive
from honda_verify.numberfields import (
    BiquadraticField,
    class_number_one_check,
    parse_field_spec,
    quad_class_number,
    quadratic_class_number_report,
    quadratic_field_data,
    reduced_forms,
)
from honda_verify.numberfields.quadratic import (
    find_element_of_norm,
    kronecker,
    quadratic_discriminant,
    squarefree_part,
)
from honda_verify.reports import Status


def test_discriminants_and_symbols():
    assert quadratic_discriminant(2) == 8
    assert quadratic_discriminant(-3) == -3
    assert quadratic_discriminant(-6) == -24
    assert squarefree_part(12) == 3
    assert squarefree_part(-18) == -2
    assert kronecker(8, 3) == -1
    assert kronecker(-3, 2) == -1
    assert kronecker(17, 2) == 1
    with pytest.raises(NumberFieldError):
        quadratic_discriminant(1)
    with pytest.raises(NumberFieldError):
        quadratic_discriminant(8)


@pytest.mark.parametrize("d,h", [(-3, 1), (-5, 2), (-6, 2), (-23, 3), (2, 1), (5, 1)])
def test_class_numbers(d, h):
    assert quad_class_number(d) == h


def test_reduced_forms():
    assert reduced_forms(-24) == [(1, 0, 6), (2, 0, 3)]
    with pytest.raises(NumberFieldError):
        reduced_forms(5)


def test_real_field_search_is_inconclusive():
    # Q(sqrt(10)) has class number 2, so nothing of norm +-2 exists
    assert find_element_of_norm(10, 2, 10) is None
    with pytest.raises(SearchInconclusive):
        quad_class_number(10, height=10)


def test_field_data():
    data = quadratic_field_data(-3, 1)
    assert data.discriminant == -3
    assert data.integral_basis == ("1", "(1+sqrt(-3))/2")
    assert data.signature == (0, 1)
    report = quadratic_class_number_report(-6)
    assert report.data["class_number"] == 2


def test_parse_field_spec():
    assert parse_field_spec("Q(sqrt(2), sqrt(-3))") == (2, -3)
    assert parse_field_spec("Q(sqrt(-6))") == (-6,)
    for bad in ("Q", "Q(sqrt(2),cbrt(3))", "K(sqrt(2))", "Q(sqrt(x))"):
        with pytest.raises(NumberFieldError):
            parse_field_spec(bad)


def test_biquadratic_rejects_degenerate_fields():
    with pytest.raises(NumberFieldError):
        BiquadraticField(2, 8)
    with pytest.raises(NumberFieldError):
        BiquadraticField(4, 3)


def test_q_sqrt2_sqrt_minus3():
    K = BiquadraticField(2, -3)
    assert K.signature == (0, 2)
    assert K.discriminant == 576
    assert 3 < K.minkowski_bound() < 4
    assert K.decomposition(2) == (2, 2, 1)
    assert K.decomposition(3) == (2, 2, 1)
    report = class_number_one_check(K)
    assert report.status is Status.PASS
    assert all(not f["required"] for f in report.data["primes"])


def test_q_sqrt17_sqrt_minus3():
    K = BiquadraticField(17, -3)
    assert K.discriminant == 2601
    assert 7 < K.minkowski_bound() < 8
    assert K.decomposition(2) == (1, 2, 2)
    assert K.decomposition(3) == (2, 2, 1)
    assert K.decomposition(5) == (1, 2, 2)
    assert K.subfield_splitting(2) == {
        "Q(sqrt(17))": "split",
        "Q(sqrt(-3))": "inert",
        "Q(sqrt(-51))": "inert",
    }
    report = class_number_one_check(K)
    assert report.status is Status.PASS
    required = [f for f in report.data["primes"] if f["required"]]
    assert [f["q"] for f in required] == [2]
    assert required[0]["norm"] == 4
    generator = required[0]["generator"]
    assert K.residue_count(generator) == 4


def test_integral_basis_discriminant():
    for a, b in ((2, -3), (17, -3), (5, 13)):
        K = BiquadraticField(a, b)
        assert K.basis_discriminant(K.integral_basis) == K.discriminant
