"""Prime fields with a square root of -1 adjoined when needed.

For p = 1 mod 4 the element i is a residue and every element has b == 0.
For p = 3 mod 4 elements are a + b*i with i*i = -1, so the field is F_{p^2}.
"""

from __future__ import annotations

from ..errors import UnsupportedCharacteristic

SUPPORTED_PRIMES = (3, 5, 7)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def check_characteristic(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p) or p == 2:
        raise UnsupportedCharacteristic(f"characteristic must be an odd prime, got {p!r}")
    if p not in SUPPORTED_PRIMES:
        raise UnsupportedCharacteristic(f"only p in {SUPPORTED_PRIMES} is supported, got {p}")
    return p


def sqrt_minus_one_mod(p: int) -> int | None:
    for r in range(2, p):
        if (r * r + 1) % p == 0:
            return r
    return None


_BASE_CACHE: dict[int, "BaseField"] = {}


class BaseField:
    """F_p(i): the smallest extension of F_p containing a fourth root of unity."""

    def __new__(cls, p: int):
        if p in _BASE_CACHE:
            return _BASE_CACHE[p]
        self = super().__new__(cls)
        self.p = p
        self.i_residue = sqrt_minus_one_mod(p)
        self.has_i_part = self.i_residue is None
        self.zero = BaseElement(self, 0, 0)
        self.one = BaseElement(self, 1, 0)
        _BASE_CACHE[p] = self
        return self

    def __reduce__(self):
        return (BaseField, (self.p,))

    def __call__(self, value) -> "BaseElement":
        if isinstance(value, BaseElement):
            if value.field is not self:
                raise ValueError("element belongs to a different base field")
            return value
        return BaseElement(self, int(value), 0)

    def from_base(self, value: "BaseElement") -> "BaseElement":
        return self(value)

    @property
    def i(self) -> "BaseElement":
        if self.has_i_part:
            return BaseElement(self, 0, 1)
        return BaseElement(self, self.i_residue, 0)

    def elements(self):
        p = self.p
        bs = range(p) if self.has_i_part else (0,)
        for b in bs:
            for a in range(p):
                yield BaseElement(self, a, b)

    def random(self, rng) -> "BaseElement":
        b = rng.randrange(self.p) if self.has_i_part else 0
        return BaseElement(self, rng.randrange(self.p), b)

    def __repr__(self):
        return f"BaseField({self.p})"


class BaseElement:
    __slots__ = ("field", "a", "b")

    def __init__(self, field: BaseField, a: int, b: int = 0):
        p = field.p
        if not field.has_i_part and b:
            a += b * field.i_residue
            b = 0
        self.field = field
        self.a = a % p
        self.b = b % p

    def _coerce(self, other):
        if isinstance(other, BaseElement):
            return other
        if isinstance(other, int):
            return BaseElement(self.field, other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return BaseElement(self.field, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return BaseElement(self.field, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return BaseElement(self.field, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.a, self.b, o.a, o.b
        return BaseElement(self.field, a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def norm(self) -> int:
        return (self.a * self.a + self.b * self.b) % self.field.p

    def inverse(self) -> "BaseElement":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in base field")
        ninv = pow(n, -1, self.field.p)
        return BaseElement(self.field, self.a * ninv, -self.b * ninv)

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

    def conjugate(self) -> "BaseElement":
        return BaseElement(self.field, self.a, -self.b)

    def frobenius(self) -> "BaseElement":
        return self ** self.field.p

    def sqrt(self):
        for r in self.field.elements():
            if r * r == self:
                return r
        return None

    def __eq__(self, other):
        if isinstance(other, int):
            return self.b == 0 and self.a == other % self.field.p
        if isinstance(other, BaseElement):
            return self.field is other.field and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.a, self.b))

    def __bool__(self):
        return bool(self.a or self.b)

    def size(self) -> int:
        return 1 if self else 0

    def __repr__(self):
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}*i"
        return f"({self.a} + {self.b}*i)"
