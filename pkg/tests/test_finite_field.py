import pytest

from honda_verify.algebra.finite_field import (
    GF,
    FiniteField,
    is_irreducible_mod_p,
    smallest_irreducible,
)
from honda_verify.algebra.linear import nullspace_mod_p, rank_mod_p
from honda_verify.exceptions import AlgebraError, EmbeddingError, ReducibleModulusError


def test_prime_field_arithmetic():
    F = GF(7)
    assert F.order == 7
    assert F.add(5, 4) == 2
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.neg(2) == 5


def test_extension_field_inverses_and_frobenius():
    F = GF(3, 2)
    assert F.order == 9
    for a in F.elements():
        assert F.frob(F.frob(a)) == a
        if a:
            assert F.mul(a, F.inv(a)) == 1
    fixed = [a for a in F.elements() if F.frob(a) == a]
    assert len(fixed) == 3
    assert all(F.in_prime_field(a) for a in fixed)


def test_quadratic_character():
    F = GF(7)
    assert [F.quadratic_character(a) for a in (1, 2, 3, 4, 5, 6)] == [1, 1, -1, 1, -1, -1]
    assert F.quadratic_character(0) == 0


def test_smallest_irreducible_is_irreducible():
    for p, r in ((3, 2), (3, 4), (5, 2), (7, 3)):
        modulus = smallest_irreducible(p, r)
        assert len(modulus) == r + 1
        assert is_irreducible_mod_p(modulus, p)


def test_invalid_fields():
    with pytest.raises(AlgebraError):
        FiniteField(4)
    with pytest.raises(AlgebraError):
        FiniteField(3, 0)
    # x^2 - 1 = (x - 1)(x + 1) over GF(3)
    with pytest.raises(ReducibleModulusError):
        FiniteField(3, 2, modulus=[2, 0, 1])


def test_subfield_embeddings():
    assert GF(3, 2).check_embedding(GF(3))
    assert GF(3, 4).check_embedding(GF(3, 2))
    assert GF(5, 2).check_embedding(GF(5))
    with pytest.raises(EmbeddingError):
        GF(3, 3).embedding_from(GF(3, 2))


def test_rank_and_nullspace():
    assert rank_mod_p([[1, 2], [2, 4]], 3) == 1
    assert rank_mod_p([[1, 0], [0, 1]], 5) == 2
    kernel = nullspace_mod_p([[1, 1]], 3, 2)
    assert len(kernel) == 1
    v = kernel[0]
    assert (v[0] + v[1]) % 3 == 0
    assert any(v)
