import itertools

import pytest

from honda_verify.algebra.finite_field import GF
from honda_verify.algebra.witt import (
    WittVector,
    teichmuller,
    teichmuller_integer,
    verify_ghost_identity,
    verify_truncation_congruence,
    witt_sum_polynomials,
)
from honda_verify.exceptions import WittArithmeticError


@pytest.mark.parametrize("p,n", [(3, 0), (3, 1), (3, 2), (5, 1), (5, 2)])
def test_ghost_identity(p, n):
    assert verify_ghost_identity(p, n)


@pytest.mark.parametrize("p,n", [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2)])
def test_truncation_congruence(p, n):
    assert verify_truncation_congruence(p, n)


def test_sum_polynomial_count():
    assert len(witt_sum_polynomials(3, 2)) == 3


def test_teichmuller_integer_is_fixed_by_pth_power():
    for a in range(1, 3):
        t = teichmuller_integer(a, 3, 1)
        assert t % 3 == a
        assert pow(t, 3, 9) == t
    assert teichmuller_integer(0, 3, 2) == 0


def test_integer_bijection_for_w2_f3():
    F = GF(3)
    images = [WittVector.from_integer(F, v, 2).to_integer() for v in range(27)]
    assert images == list(range(27))


def test_addition_matches_integers():
    F = GF(3)
    x = WittVector.from_integer(F, 5, 2)
    y = WittVector.from_integer(F, 25, 2)
    assert (x + y).to_integer() == 3
    for a, b in itertools.product((0, 1, 8, 13, 26), repeat=2):
        u = WittVector.from_integer(F, a, 2)
        w = WittVector.from_integer(F, b, 2)
        assert u.add_via_polynomials(w) == u + w


def test_ghost_components_reduce_to_the_integer():
    F = GF(3)
    for v in range(9):
        w = WittVector.from_integer(F, v, 1)
        ghost = w.ghost_components()
        assert ghost[0] == w.coords[0]
        assert ghost[1] % 9 == v


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("n", [1, 2])
def test_teichmuller_is_multiplicative(p, n):
    F = GF(p)
    for x, y in itertools.product(range(p), repeat=2):
        product = teichmuller(F, x, n) * teichmuller(F, y, n)
        assert product == teichmuller(F, x * y % p, n)
        assert product.is_teichmuller()


def test_teichmuller_is_multiplicative_over_gf9():
    F = GF(3, 2)
    for x, y in itertools.product(F.elements(), repeat=2):
        assert teichmuller(F, x, 1) * teichmuller(F, y, 1) == teichmuller(F, F.mul(x, y), 1)


def test_teichmuller_scale_over_gf9():
    F = GF(3, 2)
    b = WittVector(F, (1, 1))
    for x in F.elements():
        assert b.teichmuller_scale(x).coords == (x, F.frob(x))
    assert teichmuller(F, F.gen, 1).is_teichmuller()


def test_non_prime_field_has_no_integer_image():
    F = GF(3, 2)
    with pytest.raises(WittArithmeticError):
        WittVector(F, (1, 0)).to_integer()
    with pytest.raises(WittArithmeticError):
        WittVector.from_integer(F, 4, 1)
    with pytest.raises(WittArithmeticError):
        WittVector(F, (1, 0)) + WittVector(F, (1, 0, 0))
