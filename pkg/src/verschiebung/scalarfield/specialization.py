"""Evaluation of symbolic coefficients at random points of GF(p^m)."""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..errors import SearchExhausted
from .finitefield import FFElement, FiniteField
from .kummerfield import KummerScalar
from .primefield import BaseElement
from .ratfunc import RatFunc

MAX_DRAWS = 1000


def genericity_clauses(k00, k01, k10, k11) -> dict[str, bool]:
    """Each open condition excluding the degenerate Kummer quartics, by name."""
    out = {}
    for name, k in (("k01", k01), ("k10", k10), ("k11", k11)):
        out[f"{name} != 2"] = bool(k - 2)
        out[f"{name} != -2"] = bool(k + 2)
    combos = (
        ("k01+k10+k11+2", k01 + k10 + k11 + 2),
        ("k01+k10-k11-2", k01 + k10 - k11 - 2),
        ("k01-k10+k11-2", k01 - k10 + k11 - 2),
        ("-k01+k10+k11-2", -k01 + k10 + k11 - 2),
    )
    for name, v in combos:
        out[f"{name}+k00 != 0"] = bool(v + k00)
        out[f"{name}-k00 != 0"] = bool(v - k00)
    return out


def delta_value(k01, k10, k11):
    return k01 * k01 + k10 * k10 + k11 * k11 - k01 * k10 * k11 - 4


@dataclass(frozen=True)
class Specialization:
    p: int
    m: int
    seed: int
    k01: FFElement
    k10: FFElement
    k11: FFElement
    k00: FFElement

    @property
    def field(self) -> FiniteField:
        return self.k00.field

    @property
    def values(self) -> tuple[FFElement, FFElement, FFElement]:
        return (self.k01, self.k10, self.k11)

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "seed": self.seed,
            "modulus": self.field.modulus,
            "k00": self.k00.code(),
            "k01": self.k01.code(),
            "k10": self.k10.code(),
            "k11": self.k11.code(),
        }


def is_generic(sp_values) -> bool:
    k00, k01, k10, k11 = sp_values
    return all(genericity_clauses(k00, k01, k10, k11).values())


def draw_specialization(p: int, m: int, seed: int) -> Specialization:
    """A random generic point with i and sqrt(Delta) both in GF(p^m).

    Assignments whose Delta is a non-square are redrawn rather than moved to
    GF(p^(2m)), so all arithmetic stays in one table-driven field.
    """
    F = FiniteField(p, m)
    if not F.has_i():
        raise ValueError(f"GF({p}^{m}) lacks a square root of -1; use an even extension degree")
    rng = random.Random(seed)
    for _ in range(MAX_DRAWS):
        k01, k10, k11 = (F.random(rng) for _ in range(3))
        delta = delta_value(k01, k10, k11)
        if not delta:
            continue
        k00 = delta.sqrt()
        if k00 is None:
            continue
        if rng.randrange(2):
            k00 = -k00
        if is_generic((k00, k01, k10, k11)):
            return Specialization(p, m, seed, k01, k10, k11, k00)
    raise SearchExhausted(f"no generic specialization found in GF({p}^{m}) after {MAX_DRAWS} draws")


def specialize(s, sp: Specialization):
    """Image of a scalar under k -> sp, i -> the fixed sqrt(-1) of the target field."""
    F = sp.field
    if isinstance(s, KummerScalar):
        return s.evaluate(sp.values, sp.k00, F)
    if isinstance(s, RatFunc):
        return s.evaluate(sp.values, F)
    if isinstance(s, BaseElement):
        return F.from_base(s)
    if isinstance(s, int):
        return F(s)
    if isinstance(s, FFElement):
        return s
    raise TypeError(f"cannot specialize {type(s).__name__}")
