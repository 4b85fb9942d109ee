import itertools
import random

import pytest

from honda_verify.algebra.finite_field import GF
from honda_verify.covectors import (
    Covector,
    NilpotentAlgebra,
    Tail,
    covector_add,
    covector_multiple,
    frobenius_cw,
    scalar_action,
    verschiebung_cw,
)
from honda_verify.exceptions import (
    AlgebraError,
    CovectorError,
    IncompatibleTailError,
    NilpotenceViolation,
)
from honda_verify.raynaud import RaynaudScheme, dieudonne_covectors


@pytest.fixture
def two_vars():
    return NilpotentAlgebra(GF(3), [None, None])


def test_algebra_relations():
    A = NilpotentAlgebra(GF(3), [1, None])
    v0, v1 = A.var(0), A.var(1)
    assert v0 ** 3 == v1
    assert (v1 ** 3).is_zero()
    assert (v0 ** 9).is_zero()
    assert A.is_nilpotent()
    assert not NilpotentAlgebra(GF(3), [1, 0]).is_nilpotent()
    with pytest.raises(AlgebraError):
        NilpotentAlgebra(GF(3), [5])


def test_sum_of_two_depth_one_covectors(two_vars):
    A = two_vars
    v0, v1 = A.var(0), A.var(1)
    a = Covector.singleton(v0, 1)
    b = Covector.singleton(v1, 1)
    total = covector_add(a, b)
    assert total.entry(1) == v0 + v1
    # (v0^1 v1^2 + v0^2 v1^1) / 2 with 1/2 = 2 in GF(3)
    assert total.entry(0) == (v0 * v1 * v1).scale(2) + (v0 * v0 * v1).scale(2)
    assert a + b == total


def test_zero_is_neutral(two_vars):
    a = Covector(two_vars, [two_vars.var(0), two_vars.var(1)])
    assert covector_add(a, Covector.zero(two_vars)) == a
    assert Covector.zero(two_vars).is_zero()


def test_multiple_by_p_kills_a_singleton(two_vars):
    a = Covector.singleton(two_vars.var(0))
    assert covector_multiple(a, 3).is_zero()
    assert covector_multiple(a, 2).entry(0) == two_vars.var(0).scale(2)


def test_operators(two_vars):
    A = two_vars
    a = Covector(A, [A.var(0), A.var(1)])
    assert verschiebung_cw(a) == Covector.singleton(A.var(1))
    assert frobenius_cw(a).is_zero()
    doubled = scalar_action(2, a)
    assert doubled.entry(0) == A.var(0).scale(2)
    assert doubled.entry(1) == A.var(1).scale(2)
    assert scalar_action(0, a).is_zero()


def test_nilpotence_guard():
    A = NilpotentAlgebra(GF(3), [1, None])
    bad = Covector(A, [A.zero(), A.zero(), A.var(0)])
    with pytest.raises(NilpotenceViolation):
        covector_add(bad, Covector.zero(A))


def test_periodic_entries_repeat(two_vars):
    A = two_vars
    a = Covector(A, [A.var(0)], Tail("periodic", 1, 2))
    assert a.entry(1) == A.var(0).scale(2)
    assert a.entry(2) == A.var(0)
    assert not a.is_zero()


def test_incompatible_tails(two_vars):
    A = two_vars
    a = Covector(A, [A.var(0)], Tail("periodic", 1, 1))
    b = Covector(A, [A.var(1)], Tail("periodic", 1, 2))
    with pytest.raises(IncompatibleTailError):
        covector_add(a, b)


def test_invalid_tails(two_vars):
    with pytest.raises(CovectorError):
        Tail("periodic", 0)
    with pytest.raises(CovectorError):
        Tail("sometimes")
    with pytest.raises(CovectorError):
        Covector(two_vars, [two_vars.var(0)], Tail("periodic", 1, 3))
    with pytest.raises(CovectorError):
        Covector(two_vars, [two_vars.var(0), two_vars.var(1)], Tail("periodic", 1, 1))
    with pytest.raises(CovectorError):
        Covector.zero(two_vars).entry(-1)


# -- group laws and operator identities --------------------------------------------


def _ideal_elements(A):
    """Every element of the maximal ideal of ``GF(3)[X]/(X^3)``."""
    return [
        A.monomial((1,), c1) + A.monomial((2,), c2)
        for c1, c2 in itertools.product(range(3), repeat=2)
    ]


@pytest.fixture
def cubic():
    return NilpotentAlgebra(GF(3), [None])


def test_addition_commutes_on_all_depth_one_covectors(cubic):
    elements = _ideal_elements(cubic)
    covectors = [Covector(cubic, [e0, e1]) for e0, e1 in itertools.product(elements, repeat=2)]
    assert len(covectors) == 81
    for a, b in itertools.product(covectors, repeat=2):
        assert covector_add(a, b) == covector_add(b, a)


def test_addition_is_associative_on_depth_one_covectors(cubic):
    elements = _ideal_elements(cubic)
    covectors = [Covector(cubic, [e0, e1]) for e0, e1 in itertools.product(elements, repeat=2)]
    singletons = [Covector.singleton(e, depth) for e in elements if e for depth in (0, 1)]
    for a in covectors:
        for b, c in itertools.product(singletons, repeat=2):
            assert covector_add(covector_add(a, b), c) == covector_add(a, covector_add(b, c))


def test_sum_of_singletons_at_each_depth(two_vars):
    A = two_vars
    x, y = A.var(0), A.var(1)
    # entries at a_0 simply add
    assert covector_add(Covector.singleton(x), Covector.singleton(y)) == Covector.singleton(x + y)
    # one step deeper the carry x^2 y / 2 + x y^2 / 2 lands in a_0
    total = covector_add(Covector.singleton(x, 1), Covector.singleton(y, 1))
    assert total.window(1) == [(x * x * y).scale(2) + (x * y * y).scale(2), x + y]


def _random_element(A, rng, monomials):
    out = A.zero()
    for exps in monomials:
        out = out + A.monomial(exps, rng.randrange(A.p))
    return out


def _random_covectors(A, rng, count, depth=3):
    """Covectors whose entries below depth 1 have vanishing p-th power."""
    ideal = [m for m in A.basis() if any(m)]
    deep = [m for m in ideal if A.monomial(m).frobenius_power().is_zero()]
    return [
        Covector(
            A,
            [_random_element(A, rng, ideal if n < 2 else deep) for n in range(depth + 1)],
        )
        for _ in range(count)
    ]


@pytest.mark.parametrize("delta", [("p", "p"), ("p", "1"), ("1", "p")])
def test_frobenius_verschiebung_is_multiplication_by_p(delta):
    A = RaynaudScheme(3, 2, delta).algebra
    for a in _random_covectors(A, random.Random(7), 10):
        p_times = covector_multiple(a, 3)
        assert frobenius_cw(verschiebung_cw(a)) == p_times
        assert verschiebung_cw(frobenius_cw(a)) == p_times


@pytest.mark.parametrize("delta", [("p", "p"), ("p", "1")])
def test_frobenius_and_verschiebung_are_additive(delta):
    A = RaynaudScheme(3, 2, delta).algebra
    covectors = _random_covectors(A, random.Random(11), 12)
    for a, b in zip(covectors[::2], covectors[1::2]):
        total = covector_add(a, b)
        assert frobenius_cw(total) == covector_add(frobenius_cw(a), frobenius_cw(b))
        assert verschiebung_cw(total) == covector_add(verschiebung_cw(a), verschiebung_cw(b))


@pytest.mark.parametrize("p,r", [(3, 2), (3, 3), (5, 2), (5, 3)])
def test_periodic_sums_are_stable_in_the_truncation_depth(p, r):
    G = RaynaudScheme(p, r, ("p",) * r)
    covectors = dieudonne_covectors(G)
    depth = 2 * r + 2
    for a, b in itertools.combinations_with_replacement(covectors, 2):
        shallow = covector_add(a, b, depth)
        deep = covector_add(a, b, depth + 2)
        assert shallow.agrees_with(deep, depth + r)


def test_scalars_are_semilinear_for_frobenius_and_verschiebung():
    F = GF(3, 2)
    A = NilpotentAlgebra(F, [1, None])
    v0, v1 = A.var(0), A.var(1)
    a = Covector(A, [v0.scale(F.gen), v0 + v1.scale(2), (v0 * v1).scale(F.gen)])
    assert not frobenius_cw(a).is_zero()
    for alpha in F.elements():
        cubed = F.pow(alpha, 3)
        assert frobenius_cw(scalar_action(alpha, a)) == scalar_action(cubed, frobenius_cw(a))
        assert verschiebung_cw(scalar_action(alpha, a)) == scalar_action(
            F.frob(alpha, -1), verschiebung_cw(a)
        )
    assert scalar_action(1, a) == a
