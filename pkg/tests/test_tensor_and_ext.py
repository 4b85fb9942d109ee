import pytest

from honda_verify.algebra.finite_field import GF
from honda_verify.algebra.tensor_algebra import TensorAlgebra
from honda_verify.exceptions import (
    DegreeOutOfRange,
    EnumerationBoundExceeded,
    FieldMismatchError,
    UnsupportedModuleError,
)
from honda_verify.ext_deform.extensions import (
    ext1_dimension_bruteforce,
    ext1_dimension_formula,
    is_split,
    sigma_squared_cokernel,
    verify_ext1,
)
from honda_verify.ext_deform.freeness import (
    companion_matrix,
    enumerate_extensions,
    freeness_witness,
    is_local,
)
from honda_verify.ext_deform.ramified import build_M_Aprime, deformation_bounds, verify_basis_claim
from honda_verify.raynaud.honda import honda_system
from honda_verify.raynaud.scheme import RaynaudScheme
from honda_verify.reports import Status


def test_tensor_algebra_sigma_has_order_k_degree():
    R = TensorAlgebra(GF(3, 2), GF(3))
    assert R.order == 9
    for a in R.elements():
        assert R.sigma(R.sigma(a)) == a
    with pytest.raises(FieldMismatchError):
        TensorAlgebra(GF(3), GF(5))


@pytest.mark.parametrize(
    "k_deg,f_deg,coker",
    [(1, 1, 3), (2, 1, 9), (1, 2, 9)],
)
def test_sigma_squared_cokernel(k_deg, f_deg, coker):
    assert sigma_squared_cokernel(TensorAlgebra(GF(3, k_deg), GF(3, f_deg))) == coker


@pytest.mark.parametrize(
    "k_deg,f_deg,expected",
    [(1, 1, 2), (2, 1, 4), (1, 2, 2)],
)
def test_ext1_bruteforce_matches_formula(k_deg, f_deg, expected):
    k, F = GF(3, k_deg), GF(3, f_deg)
    assert ext1_dimension_formula(k, F) == expected
    assert ext1_dimension_bruteforce(k, F) == expected
    report = verify_ext1(k, F)
    assert report.status is Status.PASS
    assert report.data["formula"] == expected


def test_ext1_formula_odd_and_even_degrees():
    assert ext1_dimension_formula(GF(3, 3), GF(3)) == 4
    assert ext1_dimension_formula(GF(3, 4), GF(3)) == 6
    with pytest.raises(FieldMismatchError):
        ext1_dimension_formula(GF(3), GF(5))


def test_split_datum():
    R = TensorAlgebra(GF(3), GF(3))
    assert is_split(R, (R.zero,) * 4)
    assert not is_split(R, (R.one, R.zero, R.zero, R.zero))


def test_enumeration_bound():
    with pytest.raises(EnumerationBoundExceeded):
        ext1_dimension_bruteforce(GF(3, 5), GF(3))
    with pytest.raises(EnumerationBoundExceeded):
        ext1_dimension_bruteforce(GF(3, 2), GF(3), limit=8)


def test_freeness_over_dual_numbers():
    assert companion_matrix([0, 0, 1], 3) == [[0, 0], [1, 0]]
    assert is_local([0, 0, 1], 3)
    assert not is_local([2, 0, 1], 3)
    result = enumerate_extensions([0, 0, 1], 3, 1, 1)
    assert result.structures > 0
    assert result.all_free
    assert result.local
    split = enumerate_extensions([2, 0, 1], 3, 1, 1)
    assert not split.local
    assert split.all_free
    assert freeness_witness([0, 0, 1], 3, 1, 1)
    with pytest.raises(EnumerationBoundExceeded):
        enumerate_extensions([0, 0, 1], 3, 2, 2)


@pytest.mark.parametrize("p,e", [(3, 2), (5, 2), (5, 4), (7, 2)])
def test_maprime_basis(p, e):
    system = honda_system(RaynaudScheme(p, 2, ("p", "1")))
    model = build_M_Aprime(system, e)
    assert model.dimension == 2 * e
    report = verify_basis_claim(model)
    assert report.status is Status.PASS, [c for c in report.checks if c.status is not Status.PASS]


def test_maprime_degree_range_and_shape():
    system = honda_system(RaynaudScheme(3, 2, ("p", "1")))
    with pytest.raises(DegreeOutOfRange):
        build_M_Aprime(system, 3)
    with pytest.raises(DegreeOutOfRange):
        build_M_Aprime(system, 0)
    rank_one = build_M_Aprime(honda_system(RaynaudScheme(3, 1, ("p",))), 2)
    with pytest.raises(UnsupportedModuleError):
        verify_basis_claim(rank_one)


def test_deformation_bounds():
    assert deformation_bounds(1, 2) == {
        "local_degree": 2,
        "ext_bound": 2,
        "kernel_bound": 1,
        "ad_bound_stated": 3,
        "ad0_bound_stated": 2,
    }
    bounds = deformation_bounds(2, 2)
    assert bounds["ext_bound"] + bounds["kernel_bound"] == bounds["ad_bound_stated"] == 6
    assert bounds["ad0_bound_stated"] == 5


@pytest.mark.parametrize(
    "p,e,k_degree,ext_dim,kernel",
    [(3, 2, 1, 2, 1), (5, 4, 1, 2, 3), (7, 2, 1, 2, 1), (3, 2, 2, 4, 2)],
)
def test_maprime_bounds_are_sums_of_computed_summands(p, e, k_degree, ext_dim, kernel):
    model = build_M_Aprime(honda_system(RaynaudScheme(p, 2, ("p", "1"), k_degree)), e)
    assert model.kernel_dimension() == kernel
    report = verify_basis_claim(model)
    checks = {c.name: c for c in report.checks}
    assert checks["kernel_bound"].computed == kernel
    assert checks["ext_bound"].computed == ext_dim
    assert checks["ad_bound"].computed == ext_dim + kernel
    assert checks["ad0_bound"].computed == ext_dim + kernel - 1
    assert report.data["bounds"]["ad_bound"] == e * k_degree + (2 if k_degree == 2 else 1)
    assert report.status is Status.PASS


def test_maprime_bounds_inconclusive_past_enumeration_limit():
    model = build_M_Aprime(honda_system(RaynaudScheme(3, 2, ("p", "1"))), 2)
    report = verify_basis_claim(model, limit=2)
    statuses = {c.name: c.status for c in report.checks}
    assert statuses["kernel_bound"] is Status.PASS
    assert statuses["ext_bound"] is Status.INCONCLUSIVE
    assert statuses["ad_bound"] is Status.INCONCLUSIVE
    assert report.status is Status.INCONCLUSIVE
