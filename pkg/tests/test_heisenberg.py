import random

import pytest

from helpers import random_mpoly
from verschiebung.heisenberg import (
    LINE_NAMES,
    X_NAMES,
    HeisenbergElement,
    TwoTorsion,
    act_on_form,
    all_two_torsion,
    character,
    e2_pairing,
    eigenbasis,
    heisenberg_matrix,
    identity,
    lift_generators,
    matmul,
    order2_lift,
    restrict_form,
)
from verschiebung.mpoly import MPoly
from verschiebung.scalarfield import BaseField

ALL = all_two_torsion(include_zero=True)


def unit(tau, F):
    return HeisenbergElement(F.one, tau)


def apply(M, v):
    F = M[0][0].field
    return tuple(sum((M[r][c] * v[c] for c in range(4)), F.zero) for r in range(4))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_matrices_form_a_representation(p):
    F = BaseField(p)
    for a in ALL:
        for b in ALL:
            g, h = unit(a, F), unit(b, F)
            assert matmul(heisenberg_matrix(g), heisenberg_matrix(h)) == heisenberg_matrix(g * h)


@pytest.mark.parametrize("p", [3, 7])
def test_commutator_is_the_pairing(p):
    F = BaseField(p)
    for a in ALL:
        for b in ALL:
            g, h = unit(a, F), unit(b, F)
            c = g * h * g.inverse() * h.inverse()
            assert c.tau.is_zero()
            assert c.t == F(e2_pairing(a, b))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_order_two_lifts(p):
    F = BaseField(p)
    I = identity(F)
    for label, g in lift_generators(F).items():
        M = heisenberg_matrix(g)
        assert matmul(M, M) == I, label
    # tau = (01, 01) has x*(x) = -1 and needs the scalar i
    assert order2_lift("0101", F).t == F.i


def test_pairing_table():
    assert e2_pairing("0100", "0001") == -1
    assert e2_pairing("0100", "0010") == 1
    for t in ALL:
        assert e2_pairing(t, t) == 1
    assert character(0b11, 0b01) == -1 and character(0b10, 0b01) == 1


def test_parse_labels():
    assert TwoTorsion.parse("0110") == TwoTorsion(1, 2)
    assert str(TwoTorsion(3, 0)) == "1100"
    for bad in ("011", "0120", ""):
        with pytest.raises(ValueError):
            TwoTorsion.parse(bad)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_eigenbasis(p):
    F = BaseField(p)
    for tau in all_two_torsion():
        E = eigenbasis(tau, F)
        M = heisenberg_matrix(E.lift)
        for sign, s in (("+", 1), ("-", -1)):
            for v in E.vectors(sign):
                assert apply(M, v) == tuple(c * s for c in v)
    with pytest.raises(ValueError):
        eigenbasis("0000", F)


def _form_vanishing_on_plus_line(tau, F):
    """A linear form whose zero set contains the + line: a nonzero row of (U - 1)."""
    M = heisenberg_matrix(order2_lift(tau, F))
    for r in range(4):
        row = [M[r][c] - (F.one if r == c else F.zero) for c in range(4)]
        if any(row):
            terms = {}
            for c in range(4):
                if row[c]:
                    e = [0] * 4
                    e[c] = 1
                    terms[tuple(e)] = row[c]
            return MPoly(4, terms, X_NAMES)
    raise AssertionError("U - 1 vanished")


@pytest.mark.parametrize("p", [3, 7])
def test_translation_permutes_lines_by_pairing(p):
    F = BaseField(p)
    zero = MPoly(2, {}, LINE_NAMES)
    for tau in all_two_torsion():
        ell = _form_vanishing_on_plus_line(tau, F)
        assert restrict_form(ell, tau, "+") == zero
        assert restrict_form(ell, tau, "-") != zero
        for alpha in ALL:
            moved = act_on_form(unit(alpha, F), ell)
            stays = e2_pairing(alpha, tau) == 1
            assert (restrict_form(moved, tau, "+") == zero) == stays
            assert (restrict_form(moved, tau, "-") == zero) == (not stays)


@pytest.mark.parametrize("p", [5, 7])
def test_restriction_is_linear_and_multiplicative(p):
    F = BaseField(p)
    rng = random.Random(p)
    for _ in range(30):
        f = random_mpoly(F, rng, nvars=4, names=X_NAMES)
        g = random_mpoly(F, rng, nvars=4, names=X_NAMES)
        c = F.random(rng)
        tau = rng.choice(all_two_torsion())
        sign = rng.choice("+-")
        r = lambda u: restrict_form(u, tau, sign, field=F)
        assert r(f + g.scale(c)) == r(f) + r(g).scale(c)
        assert r(f * g) == r(f) * r(g)


def test_restrict_form_examples():
    F = BaseField(5)
    x00, x01, x10, x11 = MPoly.gens(4, F.one, X_NAMES)
    l0, l1 = MPoly.gens(2, F.one, LINE_NAMES)
    # x = 00, x* = 01: the + line is spanned by X00, X10
    assert restrict_form(x00 * x10, "0001") == l0 * l1
    assert restrict_form(x01, "0001") == MPoly(2, {}, LINE_NAMES)
    # x = 01: Lambda0 = (X00 + U X00)/2 has x00 and x01 entries 1/2
    half = F(2).inverse()
    assert restrict_form(x00, "0100") == l0.scale(half)
    assert restrict_form(x01, "0100") == l0.scale(half)


def test_act_on_form_is_an_action():
    F = BaseField(7)
    rng = random.Random(1)
    f = random_mpoly(F, rng, nvars=4, max_deg=2, names=X_NAMES)
    for a in ALL:
        for b in ALL:
            g, h = unit(a, F), unit(b, F)
            assert act_on_form(g, act_on_form(h, f)) == act_on_form(g * h, f)
