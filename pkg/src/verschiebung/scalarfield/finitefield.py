"""GF(p^m) with discrete-log (Zech) arithmetic.

Elements are stored as the exponent e of a fixed primitive element g, with
ZERO_LOG standing for 0.  Codes are the base-p digit encoding of the
polynomial-basis representation, used for I/O and enumeration.
"""

from __future__ import annotations

import itertools

import numpy as np

from .primefield import BaseElement, is_prime

ZERO_LOG = -1

_FF_CACHE: dict[tuple[int, int], "FiniteField"] = {}


def _poly_mulx_mod(coeffs, modulus, p):
    # coeffs: list of m digits, low degree first; modulus monic of degree m
    m = len(coeffs)
    top = coeffs[-1]
    shifted = [0] + coeffs[:-1]
    if top:
        for j in range(m):
            shifted[j] = (shifted[j] - top * modulus[j]) % p
    return shifted


def _encode(coeffs, p):
    code = 0
    for c in reversed(coeffs):
        code = code * p + c
    return code


def _cycle(modulus, p, m):
    """Codes of x^0, x^1, ... until returning to 1 (or q-1 steps)."""
    q = p**m
    cur = [1] + [0] * (m - 1)
    seq = []
    for _ in range(q - 1):
        seq.append(_encode(cur, p))
        cur = _poly_mulx_mod(cur, modulus, p)
        if cur == [1] + [0] * (m - 1):
            break
    return seq


def find_primitive_modulus(p: int, m: int):
    q = p**m
    for tail in itertools.product(range(p), repeat=m):
        modulus = list(reversed(tail))
        if modulus[0] == 0:
            continue
        seq = _cycle(modulus, p, m)
        if len(seq) == q - 1 and len(set(seq)) == q - 1:
            return modulus, seq
    raise ValueError(f"no primitive polynomial found for GF({p}^{m})")


class FiniteField:
    """GF(p^m).  Instances are cached per (p, m)."""

    def __new__(cls, p: int, m: int = 1):
        key = (p, m)
        if key in _FF_CACHE:
            return _FF_CACHE[key]
        if not is_prime(p) or m < 1:
            raise ValueError(f"invalid field GF({p}^{m})")
        self = super().__new__(cls)
        self.p = p
        self.m = m
        self.q = p**m
        self.order = self.q - 1
        modulus, seq = find_primitive_modulus(p, m)
        self.modulus = modulus
        self.exp = seq
        log = [ZERO_LOG] * self.q
        for e, code in enumerate(seq):
            log[code] = e
        self.log = log
        zech = [ZERO_LOG] * self.order
        for e, code in enumerate(seq):
            low = code % p
            plus_one = code - low + (low + 1) % p
            zech[e] = log[plus_one]
        self.zech = zech
        self.half = self.order // 2 if p != 2 else 0
        self.zero = FFElement(self, ZERO_LOG)
        self.one = FFElement(self, 0)
        self._np_tables = None
        _FF_CACHE[key] = self
        return self

    def __reduce__(self):
        return (FiniteField, (self.p, self.m))

    def __repr__(self):
        return f"GF({self.p}^{self.m})"

    def __call__(self, value) -> "FFElement":
        if isinstance(value, FFElement):
            return value
        if isinstance(value, BaseElement):
            return self.from_base(value)
        return FFElement(self, self.log[int(value) % self.p])

    def from_code(self, code: int) -> "FFElement":
        return FFElement(self, self.log[code])

    def generator(self) -> "FFElement":
        return FFElement(self, 0 if self.order == 0 else 1 % self.order)

    @property
    def i(self) -> "FFElement":
        """A fixed square root of -1; requires q = 1 mod 4."""
        if self.order % 4:
            raise ValueError(f"{self!r} does not contain a square root of -1")
        return FFElement(self, self.order // 4)

    def has_i(self) -> bool:
        return self.order % 4 == 0

    def from_base(self, value: BaseElement) -> "FFElement":
        r = self(value.a)
        if value.b:
            r = r + self(value.b) * self.i
        return r

    def elements(self):
        for code in range(self.q):
            yield FFElement(self, self.log[code])

    def random(self, rng) -> "FFElement":
        return FFElement(self, self.log[rng.randrange(self.q)])

    def random_nonzero(self, rng) -> "FFElement":
        return FFElement(self, rng.randrange(self.order))

    # numpy helpers: arrays of logs, ZERO_LOG for zero
    def np_tables(self):
        if self._np_tables is None:
            self._np_tables = np.array(self.zech, dtype=np.int64)
        return self._np_tables

    def np_mul(self, x, y):
        zero = (x < 0) | (y < 0)
        return np.where(zero, ZERO_LOG, (x + y) % self.order)

    def np_add(self, x, y):
        zech = self.np_tables()
        d = (y - x) % self.order
        z = zech[d]
        s = np.where(z < 0, ZERO_LOG, (x + z) % self.order)
        s = np.where(x < 0, y, s)
        return np.where(y < 0, x, s)

    def np_pow(self, x, k: int):
        if k == 0:
            return np.zeros_like(x)
        return np.where(x < 0, ZERO_LOG, (x * k) % self.order)

    def np_scale(self, x, c: "FFElement"):
        if c.e < 0:
            return np.full_like(x, ZERO_LOG)
        return np.where(x < 0, ZERO_LOG, (x + c.e) % self.order)


class FFElement:
    __slots__ = ("field", "e")

    def __init__(self, field: FiniteField, e: int):
        self.field = field
        self.e = e

    def _coerce(self, other):
        if isinstance(other, FFElement):
            return other
        if isinstance(other, int):
            return self.field(other)
        if isinstance(other, BaseElement):
            return self.field.from_base(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.e, o.e
        if a < 0:
            return o
        if b < 0:
            return self
        F = self.field
        z = F.zech[(b - a) % F.order]
        if z < 0:
            return F.zero
        return FFElement(F, (a + z) % F.order)

    __radd__ = __add__

    def __neg__(self):
        if self.e < 0:
            return self
        F = self.field
        return FFElement(F, (self.e + F.half) % F.order)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.e < 0 or o.e < 0:
            return self.field.zero
        return FFElement(self.field, (self.e + o.e) % self.field.order)

    __rmul__ = __mul__

    def inverse(self) -> "FFElement":
        if self.e < 0:
            raise ZeroDivisionError("inverse of zero in finite field")
        return FFElement(self.field, (-self.e) % self.field.order)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if self.e < 0:
            if k == 0:
                return self.field.one
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return self
        return FFElement(self.field, (self.e * k) % self.field.order)

    def frobenius(self) -> "FFElement":
        return self ** self.field.p

    def is_square(self) -> bool:
        return self.e < 0 or self.e % 2 == 0 or self.field.p == 2

    def sqrt(self):
        """A square root, or None if self is not a square."""
        if self.e < 0:
            return self
        if self.e % 2:
            return None
        return FFElement(self.field, self.e // 2)

    def code(self) -> int:
        return 0 if self.e < 0 else self.field.exp[self.e]

    def digits(self) -> list[int]:
        c = self.code()
        out = []
        for _ in range(self.field.m):
            out.append(c % self.field.p)
            c //= self.field.p
        return out

    def __eq__(self, other):
        if isinstance(other, FFElement):
            return self.e == other.e and self.field is other.field
        if isinstance(other, (int, BaseElement)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.e))

    def __bool__(self):
        return self.e >= 0

    def size(self) -> int:
        return 1 if self.e >= 0 else 0

    def __repr__(self):
        if self.field.m == 1:
            return str(self.code())
        d = self.digits()
        parts = []
        for j in reversed(range(len(d))):
            if d[j] == 0:
                continue
            if j == 0:
                parts.append(str(d[j]))
            else:
                mono = "g" if j == 1 else f"g^{j}"
                parts.append(mono if d[j] == 1 else f"{d[j]}*{mono}")
        return " + ".join(parts) if parts else "0"
