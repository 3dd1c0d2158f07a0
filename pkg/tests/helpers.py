"""Random element generators shared by the property tests."""

from __future__ import annotations

from verschiebung.mpoly import MPoly
from verschiebung.scalarfield import BaseField, FiniteField, FunctionField, KummerField
from verschiebung.scalarfield.kummerfield import COEFF_NAMES


def random_base(p, rng):
    return BaseField(p).random(rng)


def random_ff(p, m, rng):
    return FiniteField(p, m).random(rng)


def _random_poly(R, rng, max_terms=3, max_deg=2):
    total = R.zero
    gens = R.gens()
    for _ in range(rng.randrange(1, max_terms + 1)):
        term = R(rng.randrange(R.p))
        if R.has_i and rng.randrange(3) == 0:
            term = term * R.i
        for g in gens:
            term = term * g ** rng.randrange(max_deg + 1)
        total = total + term
    return total


def random_ratfunc(p, rng, names=COEFF_NAMES):
    R = FunctionField(p, names)
    num = _random_poly(R, rng)
    den = _random_poly(R, rng, max_terms=2)
    while not den:
        den = _random_poly(R, rng, max_terms=2)
    return num / den


def random_kummer(p, rng):
    K = KummerField(p)
    k00 = K.gens()[0]
    c0 = random_ratfunc(p, rng)
    c1 = random_ratfunc(p, rng) if rng.randrange(4) else K.rf.zero
    return K(c0) + k00 * c1


def random_mpoly(F, rng, nvars=3, max_terms=5, max_deg=3, names=None):
    terms = []
    for _ in range(rng.randrange(1, max_terms + 1)):
        e = tuple(rng.randrange(max_deg + 1) for _ in range(nvars))
        terms.append((e, F.random(rng)))
    return MPoly.from_terms(nvars, terms, names)
