import random

import pytest

from helpers import random_base, random_ff, random_kummer, random_ratfunc
from verschiebung.errors import UnluckySpecialization, UnsupportedCharacteristic
from verschiebung.scalarfield import (
    BaseField,
    FiniteField,
    FunctionField,
    KummerField,
    draw_specialization,
    frobenius_power,
    kummer_invert,
    make_base_field,
    specialize,
)
from verschiebung.scalarfield.specialization import delta_value, is_generic


def _check_axioms(a, b, c, one):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == one - one
    if a:
        assert a * a.inverse() == one


LAYERS = {
    "base3": (lambda rng: random_base(3, rng), lambda: BaseField(3).one, 1000),
    "base5": (lambda rng: random_base(5, rng), lambda: BaseField(5).one, 1000),
    "gf7^4": (lambda rng: random_ff(7, 4, rng), lambda: FiniteField(7, 4).one, 1000),
    "gf3^4": (lambda rng: random_ff(3, 4, rng), lambda: FiniteField(3, 4).one, 1000),
    "ratfunc3": (lambda rng: random_ratfunc(3, rng), lambda: FunctionField(3, ("k01", "k10", "k11")).one, 1000),
    "ratfunc5": (lambda rng: random_ratfunc(5, rng), lambda: FunctionField(5, ("k01", "k10", "k11")).one, 1000),
    "kummer3": (lambda rng: random_kummer(3, rng), lambda: KummerField(3).one, 1000),
    "kummer7": (lambda rng: random_kummer(7, rng), lambda: KummerField(7).one, 1000),
}


@pytest.mark.parametrize("layer", sorted(LAYERS))
def test_field_axioms_on_random_triples(layer):
    draw, one, n = LAYERS[layer]
    rng = random.Random(layer)
    for _ in range(n):
        _check_axioms(draw(rng), draw(rng), draw(rng), one())


def test_base_field_contains_i():
    for p in (3, 5, 7, 11, 13):
        F = BaseField(p)
        assert F.i * F.i == F(-1)
    assert BaseField(5).has_i_part is False
    assert BaseField(7).has_i_part is True


def test_unsupported_characteristic():
    for p in (2, 9, 1):
        with pytest.raises(UnsupportedCharacteristic):
            make_base_field(p)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_frobenius_is_a_ring_homomorphism(p):
    rng = random.Random(p)
    for _ in range(100):
        s, t = random_kummer(p, rng), random_kummer(p, rng)
        assert frobenius_power(s + t) == frobenius_power(s) + frobenius_power(t)
        assert frobenius_power(s * t) == frobenius_power(s) * frobenius_power(t)
        assert frobenius_power(s) == s**p


def test_frobenius_of_k00_uses_delta():
    K = KummerField(5)
    k00 = K.gens()[0]
    assert k00.frobenius() == k00 * K(K.delta) ** 2
    assert k00 * k00 == K(K.delta)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_specialize_commutes_with_frobenius(p):
    rng = random.Random(10 + p)
    sp = draw_specialization(p, 4, seed=p)
    checked = 0
    for _ in range(100):
        s = random_kummer(p, rng)
        try:
            lhs = specialize(frobenius_power(s), sp)
            rhs = specialize(s, sp).frobenius()
        except UnluckySpecialization:
            continue
        assert lhs == rhs
        checked += 1
    assert checked >= 90


@pytest.mark.parametrize("p", [3, 5, 7])
def test_kummer_invert(p):
    rng = random.Random(20 + p)
    K = KummerField(p)
    seen = 0
    while seen < 100:
        s = random_kummer(p, rng)
        if not s:
            continue
        assert kummer_invert(s) * s == K.one
        seen += 1


def test_kummer_invert_zero():
    with pytest.raises(ZeroDivisionError):
        kummer_invert(KummerField(3).zero)


def test_finite_field_tables():
    F = FiniteField(3, 4)
    assert F.q == 81 and len(set(F.elements())) == 81
    g = F.generator()
    assert g**80 == F.one and all(g**k != F.one for k in (16, 40))
    assert F.has_i() and F.i * F.i == F(-1)
    assert not FiniteField(7, 1).has_i()


def test_specialization_is_generic_and_on_relation():
    for p in (3, 5, 7):
        sp = draw_specialization(p, 4, seed=3)
        assert sp.k00 * sp.k00 == delta_value(*sp.values)
        assert is_generic((sp.k00, sp.k01, sp.k10, sp.k11))
        assert draw_specialization(p, 4, seed=3) == sp


def test_specialization_needs_i():
    with pytest.raises(ValueError):
        draw_specialization(7, 1, seed=0)


def test_ratfunc_i_part_frobenius():
    # p = 3 mod 4: i is stored symbolically and i^p = -i
    R = FunctionField(7, ("k01", "k10", "k11"))
    assert R.i.has_i_part()
    assert R.i.frobenius() == -R.i
    assert (R.i * R.i) == R(-1)
