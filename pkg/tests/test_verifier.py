import pytest

from verschiebung.heisenberg import Y_NAMES, HeisenbergElement, act_on_form, all_two_torsion
from verschiebung.kummer import KummerCoeffs, frobenius_twist, kummer_equation
from verschiebung.mpoly import poly_divides
from verschiebung.reconstruct import assemble, build_and_solve
from verschiebung.scalarfield import BaseField, draw_specialization, specialize
from verschiebung.verifier import (
    base_locus_check_p3,
    factor_check,
    factor_check_specialized,
    match_quartic_template,
    polar_check_p3,
    pullback_kummer,
    specialized_instance,
    squarefree_report,
    theta_specialization_p3,
)


@pytest.fixture(scope="module")
def report3(derived):
    k, V = derived(3)
    return k, V, factor_check(V, k)


@pytest.fixture(scope="module")
def report5(derived):
    k, V = derived(5)
    return k, V, factor_check(V, k)


def test_p3_symbolic(report3):
    _, _, rep = report3
    assert rep.divisible and rep.square
    assert rep.quotient_degree == 8 and rep.root_degree == 4
    assert rep.summary()["square_status"] == "asserted"


def test_p5_symbolic(report5):
    _, _, rep = report5
    assert rep.divisible and rep.square
    assert rep.quotient_degree == 16 and rep.root_degree == 8


def test_degrees(derived):
    for p in (3, 5):
        k, V = derived(p)
        assert pullback_kummer(V, k).is_homogeneous(4 * p)


def test_untwisted_quartic_does_not_divide_p5(derived):
    k, V = derived(5)
    pb = pullback_kummer(V, k)
    assert poly_divides(kummer_equation(frobenius_twist(k), names=Y_NAMES), pb)
    assert not poly_divides(kummer_equation(k, names=Y_NAMES), pb)


def test_p3_root_is_the_kummer_quartic(report3):
    # V is the polar map of K, and V^*(K) = K1 * K^2
    k, _, rep = report3
    K = kummer_equation(k, names=Y_NAMES)
    assert rep.root in (K, -K)
    assert match_quartic_template(rep.root) == k
    B = BaseField(3)
    for tau in all_two_torsion(include_zero=True):
        assert act_on_form(HeisenbergElement(B.one, tau), rep.root) == rep.root


def test_polar_identity(report3):
    k, V, _ = report3
    res = polar_check_p3(V, k)
    assert res["ok"] and res["passing"] == ["k01,k10,k11"]
    with pytest.raises(ValueError):
        polar_check_p3(build_and_solve(5, KummerCoeffs.symbolic(5)), KummerCoeffs.symbolic(5))


def test_broken_map_is_not_divisible(derived):
    k, V = derived(3)
    coeffs = dict(V.coefficients)
    m = next(m for m in coeffs if m.kind == "B")
    coeffs[m] = coeffs[m] * 2
    rep = factor_check(assemble(3, coeffs, k.field), k)
    assert not rep.divisible
    assert rep.untwisted_divisible is False


@pytest.mark.parametrize("p", [3, 5])
def test_specialized_root_matches_symbolic(p, report3, report5):
    k, V, rep = report3 if p == 3 else report5
    sp = draw_specialization(p, 4, seed=11)
    ks = KummerCoeffs.from_specialization(sp)
    rs = factor_check(build_and_solve(p, ks), ks)
    image = rep.root.map_coeffs(lambda c: specialize(c, sp))
    assert rs.root == image or rs.root == -image


def test_p7_specialized():
    rep = factor_check_specialized(7, trials=3, m=4, seed=42)
    assert rep.divisible and rep.seeds == [42, 43, 44]
    assert rep.quotient_degree == 24
    assert rep.summary()["square_status"] == "conjectural"


def test_specialized_is_deterministic():
    a = factor_check_specialized(5, trials=2, seed=3).summary()
    b = factor_check_specialized(5, trials=2, seed=3).summary()
    a.pop("timings"), b.pop("timings")
    assert a == b


def test_base_locus_p3():
    _, k, V = theta_specialization_p3(m=4, seed=0)
    rep = factor_check(V, k)
    res = base_locus_check_p3(V, k, rep.root)
    assert res["status"] == "complete"
    assert res["base_points"] > 0
    assert res["on_root_surface"] and res["singular_on_root_surface"] and res["off_twisted_kummer"]
    assert res["ok"]


def test_base_locus_bound_is_inconclusive():
    _, k, V = theta_specialization_p3(m=4, seed=0)
    res = base_locus_check_p3(V, k, V.V00, max_points=1000)
    assert res["status"] == "inconclusive" and not res["ok"]


def test_squarefree_report_specialized_p5():
    # the symbolic gcd over the Kummer field is out of reach; a specialization is not
    _, k, V = specialized_instance(5, 4, 0)
    rep = factor_check(V, k)
    out = squarefree_report(rep.root)
    assert out == {"gcd_degree": 0, "derivative_zero": False}
