"""Scalar tower: base field with i, finite fields, rational functions, Kummer field."""

from .finitefield import FFElement, FiniteField
from .kummerfield import KummerField, KummerScalar
from .primefield import BaseElement, BaseField, check_characteristic, is_prime
from .ratfunc import FunctionField, RatFunc
from .specialization import (
    Specialization,
    delta_value,
    draw_specialization,
    genericity_clauses,
    specialize,
)


def make_base_field(p: int) -> BaseField:
    if p == 2 or not is_prime(p):
        from ..errors import UnsupportedCharacteristic

        raise UnsupportedCharacteristic(f"characteristic must be an odd prime, got {p!r}")
    return BaseField(p)


def kummer_invert(s: KummerScalar) -> KummerScalar:
    return s.inverse()


def frobenius_power(s, p: int | None = None):
    if p is not None and getattr(s.field, "p", p) != p:
        raise ValueError("characteristic mismatch")
    return s.frobenius()


__all__ = [
    "BaseElement",
    "BaseField",
    "FFElement",
    "FiniteField",
    "FunctionField",
    "KummerField",
    "KummerScalar",
    "RatFunc",
    "Specialization",
    "check_characteristic",
    "delta_value",
    "draw_specialization",
    "frobenius_power",
    "genericity_clauses",
    "is_prime",
    "kummer_invert",
    "make_base_field",
    "specialize",
]
