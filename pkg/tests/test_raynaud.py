import itertools

import pytest

from honda_verify.exceptions import InvalidSchemeError
from honda_verify.raynaud import (
    RaynaudScheme,
    coordinate_ring,
    dieudonne_covectors,
    dieudonne_module,
    honda_system,
    parse_delta,
    verify_bialgebra_laws,
    verify_generator_identity,
    verify_hom_condition,
    verify_honda,
    verify_module,
)
from honda_verify.raynaud.honda import OMEGA_ASSUMPTION
from honda_verify.reports import Status


def test_scheme_constants():
    G = RaynaudScheme(3, 2, ("p", "1"))
    assert G.omega == 6
    assert G.delta == (3, 1)
    assert G.gamma_bar == (2, 0)
    assert G.delta_labels == ["p", "1"]


def test_parse_delta():
    assert parse_delta(["p", "1"], 5) == (5, 1)
    assert parse_delta([5, 1], 5) == (5, 1)
    with pytest.raises(InvalidSchemeError):
        parse_delta(["2"], 5)


@pytest.mark.parametrize(
    "p,r,delta",
    [(2, 1, ("p",)), (19, 1, ("p",)), (9, 1, ("p",)), (3, 0, ()), (3, 2, ("p",))],
)
def test_invalid_schemes(p, r, delta):
    with pytest.raises(InvalidSchemeError):
        RaynaudScheme(p, r, delta)


def test_omega2_operators_and_L():
    system = honda_system(RaynaudScheme(3, 2, ("p", "1")))
    assert system.module.describe() == {
        "F(e1)": "0",
        "F(e2)": "e1",
        "V(e1)": "0",
        "V(e2)": "-e1",
    }
    assert system.L_basis == [1]
    assert system.FM_basis() == [0]
    assert system.to_dict()["L_basis"] == ["e2"]


def test_verify_honda_omega2():
    report = verify_honda(RaynaudScheme(3, 2, ("p", "1")))
    assert report.status is Status.PASS
    assert report.data["coassociativity_checked"] is True
    assert [a.key for a in report.assumptions] == [OMEGA_ASSUMPTION]


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("r", [1, 2])
def test_hom_condition_all_delta(p, r):
    for labels in itertools.product(("1", "p"), repeat=r):
        G = RaynaudScheme(p, r, labels)
        report = verify_hom_condition(G)
        assert report.status is Status.PASS, (p, labels)


SUPPORTED_GRID = [
    (p, r, labels)
    for p, r in ((3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2))
    for labels in itertools.product(("1", "p"), repeat=r)
]


@pytest.mark.parametrize("p,r,labels", SUPPORTED_GRID)
def test_honda_checks_pass_on_supported_grid(p, r, labels):
    G = RaynaudScheme(p, r, labels)
    # the triple tensor power at p = 7, r = 2 has 7^6 monomials
    report = verify_honda(G, coassociativity=(p, r) != (7, 2))
    failed = [c.name for c in report.checks if c.status is not Status.PASS]
    assert report.status is Status.PASS, failed
    names = {c.name for c in report.checks}
    assert "L.dimension_count" in names
    assert {f"bialgebra.counit.X{i + 1}" for i in range(r)} <= names
    assert {"module.FV", "module.VF"} <= names
    assert any(name.startswith("generator.") for name in names)


def test_coordinate_ring_comultiplication():
    etale = RaynaudScheme(3, 1, ("1",))
    A, delta = coordinate_ring(etale)
    x = A.var(0)
    assert delta(x) == etale.left(x) + etale.right(x)

    G = RaynaudScheme(3, 1, ("p",))
    A, delta = coordinate_ring(G)
    x = A.var(0)
    assert delta(x) != G.left(x) + G.right(x)
    assert delta(x * x) == delta(x) * delta(x)


def test_dieudonne_covectors_omega2_and_periodic():
    G = RaynaudScheme(3, 2, ("p", "1"))
    e1, e2 = dieudonne_covectors(G)
    X1, X2 = G.algebra.var(0), G.algebra.var(1)
    assert e1.window(2) == [X1, G.algebra.zero(), G.algebra.zero()]
    assert e2.window(2) == [X2, X1.scale(2), G.algebra.zero()]
    assert not e2.tail.periodic

    (e,) = dieudonne_covectors(RaynaudScheme(3, 1, ("p",)))
    assert e.tail.periodic and e.tail.period == 1
    assert e.entry(1) == e.algebra.var(0).scale(2)


def test_generator_identity_and_laws():
    for labels in (("p", "1"), ("1", "p"), ("p", "p")):
        G = RaynaudScheme(3, 2, labels)
        assert verify_bialgebra_laws(G).status is Status.PASS
        assert verify_generator_identity(G).status is Status.PASS


def test_generator_identity_start_width():
    report = verify_generator_identity(RaynaudScheme(3, 2, ("p", "p")))
    assert report.data["first_width"] == 2
    report = verify_generator_identity(RaynaudScheme(3, 2, ("p", "1")))
    assert report.data["first_width"] == 1


def test_module_relations_over_extension_field():
    G = RaynaudScheme(3, 2, ("p", "1"), k_degree=2)
    M = dieudonne_module(G)
    assert verify_module(M).status is Status.PASS
    # F is sigma-semilinear
    a = G.field.gen
    assert M.apply_F([0, a]) == [G.field.frob(a), 0]
