from fractions import Fraction

import pytest

from honda_verify.curves import (
    CurveModel,
    InertiaType,
    LocalPrime,
    NewtonPolygon,
    QuadraticField,
    ReductionType,
    count_points,
    formal_log,
    formal_mult_p,
    formal_w,
    invariant_differential,
    is_supersingular,
    is_twist_by,
    parse_curve_spec,
    parse_prime,
    quadratic_twist,
    reduce_at,
    reduction_data,
    reduction_type,
    tame_inertia,
    tame_inertia_type,
)
from honda_verify.curves.reduction import hasse_interval
from honda_verify.exceptions import (
    BadReduction,
    CurveError,
    CurveSpecError,
    PrecisionTooLow,
    SingularCurve,
    UnsupportedPrime,
)

QQ = QuadraticField(1)


@pytest.fixture
def ramified_curve():
    return parse_curve_spec("0,s,0,1,1 over Q(sqrt(3))")


@pytest.fixture
def ramified_prime(ramified_curve):
    return LocalPrime(ramified_curve.base, 3)


def test_quadratic_field_arithmetic():
    F = QuadraticField(3)
    s = F.sqrt
    assert s * s == 3
    assert (1 + s).norm() == -2
    assert (1 + s) * (1 + s).inverse() == 1
    assert F.parse("2-3*s") == 2 - 3 * s
    assert F.discriminant == 12
    assert QuadraticField(17).discriminant == 17
    with pytest.raises(CurveError):
        QuadraticField(4)


def test_local_primes():
    F = QuadraticField(3)
    v = LocalPrime(F, 3)
    assert (v.kind, v.e, v.f) == ("ramified", 2, 1)
    assert v.valuation(3) == 2
    assert v.valuation(F.sqrt) == 1
    assert v.valuation(0) is None

    inert = LocalPrime(QuadraticField(2), 5)
    assert inert.kind == "inert"
    assert inert.residue_order == 25

    split = parse_prime(QuadraticField(2), "7:1")
    assert split.kind == "split"
    assert split.index == 1
    # (3 - sqrt 2)/7 is a unit at the prime where sqrt 2 = 10 mod 49
    first = LocalPrime(QuadraticField(2), 7)
    assert first.root == 3
    assert first.reduce(QuadraticField(2)(3, -1) / 7) == 6
    with pytest.raises(CurveError):
        LocalPrime(F, 2)
    with pytest.raises(CurveSpecError):
        parse_prime(F, "seven")


def test_ramified_curve_invariants(ramified_curve, ramified_prime):
    E = ramified_curve
    assert E.discriminant == 32 * (3 * E.base.sqrt - 14)
    assert 1728 * E.discriminant == E.c4 ** 3 - E.c6 ** 2
    assert reduction_type(E, ramified_prime) is ReductionType.GOOD
    reduced = reduce_at(E, ramified_prime)
    assert list(reduced.a) == [0, 0, 0, 1, 1]
    assert count_points(E, ramified_prime) == 4
    assert reduced.trace() == 0
    assert is_supersingular(E, ramified_prime)


def test_mult_by_three_valuations(ramified_curve, ramified_prime):
    series = formal_mult_p(ramified_curve, 3)
    v = ramified_prime
    assert series[1] == 3
    assert v.valuation(series[1]) == 2
    assert v.valuation(series[3]) == 1
    assert v.valuation(series[9]) == 0
    with pytest.raises(PrecisionTooLow):
        formal_mult_p(ramified_curve, 3, 8)


def test_formal_series_leading_coefficients(ramified_curve):
    s = ramified_curve.base.sqrt
    assert formal_w(ramified_curve, 7)[3:] == [1, 0, s, 0, 4]
    assert invariant_differential(ramified_curve, 4) == [1, 0, s, 0, 5]
    log = formal_log(ramified_curve, 5)
    assert log[:4] == [0, 1, 0, s / 3]
    assert log[5] == 1

    short = CurveModel.from_coefficients(QQ, [0, 0, 0, 1, 1])
    assert formal_w(short, 9) == [0, 0, 0, 1, 0, 0, 0, 1, 0, 1]
    assert formal_log(short, 5)[5] == Fraction(2, 5)


def test_doubling_series_matches_group_law():
    E = CurveModel.from_coefficients(QQ, [1, 1, 1, 0, 0])
    assert formal_mult_p(E, 2)[:5] == [0, 2, -1, -2, -6]


def test_tame_inertia_level_one_pair(ramified_curve, ramified_prime):
    result = tame_inertia(ramified_curve, ramified_prime)
    assert result.kind is InertiaType.LEVEL1_PAIR
    assert (3, 1) in result.polygon.hull
    assert result.polygon.strictly_below((3, 1), (1, 2), (9, 0))
    assert result.to_dict()["type"] == "Level1Pair"
    assert tame_inertia_type(ramified_curve, ramified_prime) is InertiaType.LEVEL1_PAIR


def test_newton_polygon_hulls():
    poly = NewtonPolygon.from_valuations([(1, 2), (3, 1), (9, 0)])
    assert poly.hull == [(1, 2), (3, 1), (9, 0)]
    assert poly.is_convex()
    assert poly.slopes() == [Fraction(-1, 2), Fraction(-1, 6)]
    flat = NewtonPolygon.from_valuations([(1, 2), (3, 2), (9, 0)])
    assert flat.hull == [(1, 2), (9, 0)]
    assert flat.is_single_segment((1, 2), (9, 0))


def test_j_1728_supersingular_at_7():
    E = CurveModel.from_coefficients(QQ, [0, 0, 0, 1, 0])
    v = LocalPrime(QQ, 7)
    assert E.discriminant == -64
    assert E.j_invariant == 1728
    assert count_points(E, v) == 8
    assert is_supersingular(E, v)


def test_ordinary_and_bad_reduction():
    E = CurveModel.from_coefficients(QQ, [0, 1, 0, 0, 1])
    v = LocalPrime(QQ, 3)
    assert E.discriminant == -496
    assert count_points(E, v) == 6
    assert reduce_at(E, v).trace() == -2
    assert not is_supersingular(E, v)
    with pytest.raises(BadReduction):
        tame_inertia(E, v)
    with pytest.raises(UnsupportedPrime):
        tame_inertia(E, LocalPrime(QQ, 7))
    with pytest.raises(UnsupportedPrime):
        tame_inertia(E, LocalPrime(QQ, 5), p=5)

    additive = CurveModel.from_coefficients(QQ, [0, 0, 0, 0, 5])
    data = reduction_data(additive, LocalPrime(QQ, 5))
    assert data.kind is ReductionType.ADDITIVE
    assert data.scalings == 0
    with pytest.raises(BadReduction):
        is_supersingular(additive, LocalPrime(QQ, 5))


@pytest.mark.parametrize(
    "d, coefficients",
    [(1, [0, 0, 0, 625, 15625]), (5, [0, 0, 0, 25, 125])],
)
def test_non_minimal_model_reduces_after_scaling(d, coefficients):
    # y^2 = x^3 + x + 1 scaled by a uniformizer at 5
    E = CurveModel.from_coefficients(QuadraticField(d), coefficients)
    v = LocalPrime(E.base, 5)
    data = reduction_data(E, v)
    assert data.kind is ReductionType.GOOD
    assert data.scalings == 1
    assert list(reduce_at(E, v).a) == [0, 0, 0, 1, 1]
    assert count_points(E, v) == 9
    assert reduce_at(E, v).trace() == -3
    assert not is_supersingular(E, v)


def test_multiplicative_reduction_of_x015():
    E = CurveModel.from_coefficients(QQ, [1, 1, 1, -10, -10])
    assert E.c4 == 481
    assert E.c6 == 4879
    assert E.discriminant == 15 ** 4
    for q in (3, 5):
        assert reduction_type(E, LocalPrime(QQ, q)) is ReductionType.MULTIPLICATIVE


def test_twists():
    E = CurveModel.from_coefficients(QQ, [1, 1, 1, -10, -10])
    twist = CurveModel.from_coefficients(QQ, [0, 1, 0, -641, -3105])
    assert is_twist_by(E, twist, 2)
    assert not is_twist_by(E, twist, 3)
    assert quadratic_twist(E, 2).j_invariant == E.j_invariant


def test_hasse_interval():
    assert hasse_interval(7) == (3, 13)
    assert hasse_interval(9) == (4, 16)


@pytest.mark.parametrize(
    "spec,exc",
    [
        ("0,0,0,1,1", CurveSpecError),
        ("0,0,1,1 over Q", CurveSpecError),
        ("0,0,0,1,1 over K", CurveSpecError),
        ("0,0,0,0,0 over Q", SingularCurve),
        ("0,s,0,1,1 over Q", CurveSpecError),
    ],
)
def test_bad_curve_specs(spec, exc):
    with pytest.raises(exc):
        parse_curve_spec(spec)
