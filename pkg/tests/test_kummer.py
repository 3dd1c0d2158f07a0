import random

import pytest

from verschiebung.errors import DegenerateTheta, GenericityError
from verschiebung.heisenberg import HeisenbergElement, act_on_form, all_two_torsion
from verschiebung.kummer import (
    KummerCoeffs,
    ThetaConstants,
    check_relation_and_genericity,
    coeffs_from_theta_constants,
    frobenius_twist,
    kummer_equation,
    omega,
    omega_chart,
    random_theta_constants,
    relation_value,
    theta_orbit,
)
from verschiebung.mpoly import poly_derivative, poly_evaluate
from verschiebung.scalarfield import BaseField, FiniteField, KummerField


def test_equation_shape():
    k = KummerCoeffs.symbolic(5)
    K = kummer_equation(k)
    # x^4 (4), x00 x01 x10 x11 (1), three pairs of biquadratic terms (6)
    assert len(K) == 11
    assert K.is_homogeneous(4)
    assert K.coeff((1, 1, 1, 1)) == k.k00 * 2
    assert K.coeff((0, 0, 2, 2)) == k.k01


def test_zero_coefficients_give_fermat_quartic():
    F = FiniteField(5, 1)
    k = KummerCoeffs(F.zero, F.zero, F.zero, F.zero)
    K = kummer_equation(k)
    assert sorted(K.terms) == sorted([(4, 0, 0, 0), (0, 4, 0, 0), (0, 0, 4, 0), (0, 0, 0, 4)])
    rep = check_relation_and_genericity(k)
    assert not rep.relation_holds and "cubic relation" in rep.failed()


@pytest.mark.parametrize("p", [3, 5, 7])
def test_symbolic_relation_vanishes(p):
    assert not relation_value(KummerCoeffs.symbolic(p))
    assert check_relation_and_genericity(KummerCoeffs.symbolic(p)).ok


def test_genericity_clause_k01_equals_two():
    F = FiniteField(5, 4)
    k01, k10, k11 = F(2), F.generator(), F.generator() ** 3
    rep = check_relation_and_genericity(KummerCoeffs(F.one, k01, k10, k11))
    assert "k01 != 2" in rep.failed()
    assert rep.clauses["k01 != -2"]


@pytest.mark.parametrize("p,m", [(3, 4), (5, 2), (7, 2)])
def test_theta_constants_give_nodes(p, m):
    F = FiniteField(p, m)
    rng = random.Random(p)
    done = 0
    while done < 5:
        t = random_theta_constants(F, rng)
        try:
            k = coeffs_from_theta_constants(t)
        except DegenerateTheta:
            continue
        assert not relation_value(k)
        K = kummer_equation(k)
        partials = [poly_derivative(K, j) for j in range(4)]
        for pt in theta_orbit(t):
            assert not poly_evaluate(K, pt, F.zero)
            assert all(not poly_evaluate(d, pt, F.zero) for d in partials)
        done += 1


def test_degenerate_theta_rejected():
    F = FiniteField(5, 2)
    one = F.one
    with pytest.raises(DegenerateTheta):
        coeffs_from_theta_constants(ThetaConstants(one, one, one, one))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_quartic_is_invariant(p):
    k = KummerCoeffs.symbolic(p)
    K = kummer_equation(k)
    B = BaseField(p)
    for tau in all_two_torsion(include_zero=True):
        assert act_on_form(HeisenbergElement(B.one, tau), K) == K


def test_omega_examples():
    k = KummerCoeffs.symbolic(5)
    assert omega(k, "0001") == k.k10
    assert omega(k, "0010") == k.k01
    assert omega(k, "0011") == k.k11
    assert omega(k, "0100") == (k.k00 + k.k10 + k.k11) * 2 / (k.k01 + 2)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_omega_same_on_both_lines(p):
    k = KummerCoeffs.symbolic(p)
    assert omega_chart(k, "+") == omega_chart(k, "-")


def test_omega_genericity_error():
    F = FiniteField(5, 2)
    # k10 = 2 makes omega(0001) = 2
    k = KummerCoeffs(F.one, F.one, F(2), F.one)
    with pytest.raises(GenericityError):
        omega(k, "0001")


def test_frobenius_twist():
    k = KummerCoeffs.symbolic(3)
    k1 = frobenius_twist(k)
    assert k1.k01 == k.k01**3
    assert k1.k00 == k.k00**3
    assert not relation_value(k1)
    with pytest.raises(ValueError):
        frobenius_twist(k, 5)


def test_swapped():
    k = KummerCoeffs(*KummerField(7).gens())
    s = k.swapped()
    assert (s.k01, s.k10) == (k.k10, k.k01)
