"""The coefficient field F_p(i)(k01, k10, k11)[k00] / (k00^2 - Delta).

Delta = k01^2 + k10^2 + k11^2 - k01*k10*k11 - 4 is the value of k00^2 forced by
the Kummer coefficient relation.  Elements are c0 + c1*k00 with c0, c1 rational
functions in (k01, k10, k11).
"""

from __future__ import annotations

from ..errors import InternalInconsistency
from .primefield import BaseElement, check_characteristic
from .ratfunc import FunctionField, RatFunc

COEFF_NAMES = ("k01", "k10", "k11")

_KF_CACHE: dict[int, "KummerField"] = {}


class KummerField:
    def __new__(cls, p: int):
        if p in _KF_CACHE:
            return _KF_CACHE[p]
        check_characteristic(p)
        self = super().__new__(cls)
        self.p = p
        self.rf = FunctionField(p, COEFF_NAMES)
        k01, k10, k11 = self.rf.gens()
        self.delta = k01 * k01 + k10 * k10 + k11 * k11 - k01 * k10 * k11 - 4
        self.delta_frob_factor = self.delta ** ((p - 1) // 2)
        self.zero = KummerScalar(self, self.rf.zero, self.rf.zero)
        self.one = KummerScalar(self, self.rf.one, self.rf.zero)
        _KF_CACHE[p] = self
        return self

    def __reduce__(self):
        return (KummerField, (self.p,))

    def __repr__(self):
        return f"KummerField({self.p})"

    def __call__(self, value) -> "KummerScalar":
        if isinstance(value, KummerScalar):
            return value
        return KummerScalar(self, self.rf(value), self.rf.zero)

    def from_base(self, value: BaseElement) -> "KummerScalar":
        return KummerScalar(self, self.rf.from_base(value), self.rf.zero)

    @property
    def i(self) -> "KummerScalar":
        return self.from_base(self.rf.base.i)

    def gens(self) -> tuple["KummerScalar", ...]:
        """(k00, k01, k10, k11)."""
        z = self.rf.zero
        k00 = KummerScalar(self, z, self.rf.one)
        rest = tuple(KummerScalar(self, g, z) for g in self.rf.gens())
        return (k00,) + rest


class KummerScalar:
    __slots__ = ("field", "c0", "c1")

    def __init__(self, field: KummerField, c0: RatFunc, c1: RatFunc):
        self.field = field
        self.c0 = c0
        self.c1 = c1

    def _coerce(self, other):
        if isinstance(other, KummerScalar):
            return other
        if isinstance(other, (int, BaseElement, RatFunc)):
            return KummerScalar(self.field, self.field.rf(other), self.field.rf.zero)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return KummerScalar(self.field, self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __neg__(self):
        return KummerScalar(self.field, -self.c0, -self.c1)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return KummerScalar(self.field, self.c0 - o.c0, self.c1 - o.c1)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return KummerScalar(self.field, self.c0 * other, self.c1 * other)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a0, a1, b0, b1 = self.c0, self.c1, o.c0, o.c1
        if not a1 and not b1:
            return KummerScalar(self.field, a0 * b0, a1)
        if not a1:
            return KummerScalar(self.field, a0 * b0, a0 * b1)
        if not b1:
            return KummerScalar(self.field, a0 * b0, a1 * b0)
        c0 = a0 * b0 + a1 * b1 * self.field.delta
        c1 = a0 * b1 + a1 * b0
        return KummerScalar(self.field, c0, c1)

    __rmul__ = __mul__

    def norm(self) -> RatFunc:
        return self.c0 * self.c0 - self.c1 * self.c1 * self.field.delta

    def conjugate(self) -> "KummerScalar":
        return KummerScalar(self.field, self.c0, -self.c1)

    def inverse(self) -> "KummerScalar":
        if not self:
            raise ZeroDivisionError("inverse of zero Kummer scalar")
        if not self.c1:
            return KummerScalar(self.field, self.c0.inverse(), self.c1)
        nrm = self.norm()
        if not nrm:
            raise InternalInconsistency("c0^2 - c1^2*Delta vanished for a nonzero element")
        n = nrm.inverse()
        return KummerScalar(self.field, self.c0 * n, -(self.c1 * n))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def frobenius(self) -> "KummerScalar":
        """self ** p, using k00^p = k00 * Delta^((p-1)/2)."""
        f0 = self.c0.frobenius()
        f1 = self.c1.frobenius()
        if f1:
            f1 = f1 * self.field.delta_frob_factor
        return KummerScalar(self.field, f0, f1)

    def sqrt(self):
        """Square roots of the forms r^2 and Delta*r^2 with r in the base function field; None otherwise."""
        if self.c1:
            return None
        z = self.field.rf.zero
        r = self.c0.sqrt()
        if r is not None:
            return KummerScalar(self.field, r, z)
        r = (self.c0 / self.field.delta).sqrt()
        if r is not None:
            return KummerScalar(self.field, z, r)
        return None

    def evaluate(self, values, k00_value, target):
        v0 = self.c0.evaluate(values, target)
        if not self.c1:
            return v0
        return v0 + self.c1.evaluate(values, target) * k00_value

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.c0 == o.c0 and self.c1 == o.c1

    def __hash__(self):
        return hash((self.c0, self.c1))

    def __bool__(self):
        return bool(self.c0) or bool(self.c1)

    def size(self) -> int:
        return self.c0.size() + self.c1.size()

    def has_i_part(self) -> bool:
        return self.c0.has_i_part() or self.c1.has_i_part()

    def __repr__(self):
        if not self.c1:
            return self.c0.to_str()
        c1 = self.c1.to_str()
        if c1 == "1":
            second = "k00"
        elif c1.isalnum():
            second = f"{c1}*k00"
        else:
            second = f"({c1})*k00"
        if not self.c0:
            return second
        return f"{self.c0.to_str()} + {second}"
