"""Rational function fields F_p(i)(t_1, ..., t_n) backed by flint's nmod_mpoly.

An element is (n0 + i*n1) / den with n0, n1, den in F_p[t], den monic in
degree-lexicographic order and gcd(den, n0, n1) = 1.  Since den is restricted
to F_p[t], this form is unique, which makes equality a component compare.
"""

from __future__ import annotations

import flint

from ..errors import UnluckySpecialization
from .primefield import BaseElement, BaseField

_CTX_CACHE: dict = {}


class FunctionField:
    def __new__(cls, p: int, names: tuple[str, ...]):
        names = tuple(names)
        key = (p, names)
        if key in _CTX_CACHE:
            return _CTX_CACHE[key]
        self = super().__new__(cls)
        self.p = p
        self.names = names
        self.base = BaseField(p)
        self.has_i = self.base.has_i_part
        self.ctx = flint.nmod_mpoly_ctx.get(names, modulus=p, ordering="deglex")
        self._pzero = self.ctx.from_dict({})
        self._pone = self.ctx.constant(1)
        self.zero = RatFunc(self, self._pzero, self._pzero if self.has_i else None, self._pone)
        self.one = RatFunc(self, self._pone, self._pzero if self.has_i else None, self._pone)
        _CTX_CACHE[key] = self
        return self

    def __reduce__(self):
        return (FunctionField, (self.p, self.names))

    def __repr__(self):
        return f"FunctionField({self.p}, {self.names})"

    @property
    def nvars(self) -> int:
        return len(self.names)

    def poly_constant(self, c: int):
        return self.ctx.constant(c % self.p)

    def gens(self) -> list["RatFunc"]:
        return [self.from_polys(g) for g in self.ctx.gens()]

    def gen(self, name: str) -> "RatFunc":
        return self.gens()[self.names.index(name)]

    def from_polys(self, n0, den=None, n1=None) -> "RatFunc":
        if den is None:
            den = self._pone
        if self.has_i and n1 is None:
            n1 = self._pzero
        return _normalize(self, n0, n1, den)

    def from_base(self, value: BaseElement) -> "RatFunc":
        if self.has_i:
            return RatFunc(self, self.poly_constant(value.a), self.poly_constant(value.b), self._pone)
        return RatFunc(self, self.poly_constant(value.a), None, self._pone)

    def __call__(self, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, BaseElement):
            return self.from_base(value)
        c = self.poly_constant(int(value))
        return RatFunc(self, c, self._pzero if self.has_i else None, self._pone)

    @property
    def i(self) -> "RatFunc":
        return self.from_base(self.base.i)


def _is_zero_poly(f) -> bool:
    return f is None or f.is_zero()


def _normalize(F: FunctionField, n0, n1, den, reduce: bool = True) -> "RatFunc":
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    if n0.is_zero() and _is_zero_poly(n1):
        return F.zero
    if reduce and not den.is_one():
        g = den.gcd(n0)
        if n1 is not None and not n1.is_zero() and not g.is_one():
            g = g.gcd(n1)
        if not g.is_one():
            den = den / g
            n0 = n0 / g
            if n1 is not None:
                n1 = n1 / g
    lc = int(den.leading_coefficient())
    if lc != 1:
        inv = pow(lc, -1, F.p)
        den = den * inv
        n0 = n0 * inv
        if n1 is not None:
            n1 = n1 * inv
    return RatFunc(F, n0, n1, den)


class RatFunc:
    __slots__ = ("field", "n0", "n1", "den")

    def __init__(self, field: FunctionField, n0, n1, den):
        self.field = field
        self.n0 = n0
        self.n1 = n1
        self.den = den

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, BaseElement)):
            return self.field(other)
        return NotImplemented

    def has_i_part(self) -> bool:
        return self.n1 is not None and not self.n1.is_zero()

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        F = self.field
        if not self:
            return o
        if not o:
            return self
        d1, d2 = self.den, o.den
        n1 = None
        if d1 == d2:
            n0 = self.n0 + o.n0
            if F.has_i:
                n1 = self.n1 + o.n1
            return _normalize(F, n0, n1, d1, reduce=not d1.is_one())
        g = d1.gcd(d2)
        c1 = d1 / g
        c2 = d2 / g
        n0 = self.n0 * c2 + o.n0 * c1
        if F.has_i:
            n1 = self.n1 * c2 + o.n1 * c1
        den = c1 * d2
        if g.is_one():
            return _normalize(F, n0, n1, den, reduce=False)
        h = g.gcd(n0)
        if n1 is not None and not h.is_one():
            h = h.gcd(n1)
        if not h.is_one():
            den = den / h
            n0 = n0 / h
            if n1 is not None:
                n1 = n1 / h
        return _normalize(F, n0, n1, den, reduce=False)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.field, -self.n0, None if self.n1 is None else -self.n1, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.field.p
            if c == 0:
                return self.field.zero
            return RatFunc(self.field, self.n0 * c, None if self.n1 is None else self.n1 * c, self.den)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        F = self.field
        if not self or not o:
            return F.zero
        a_i = self.has_i_part()
        b_i = o.has_i_part()
        if not a_i and not b_i:
            na, nb, da, db = self.n0, o.n0, self.den, o.den
            if not db.is_one():
                g = na.gcd(db)
                if not g.is_one():
                    na = na / g
                    db = db / g
            if not da.is_one():
                g = nb.gcd(da)
                if not g.is_one():
                    nb = nb / g
                    da = da / g
            zero = F._pzero if F.has_i else None
            return _normalize(F, na * nb, zero, da * db, reduce=False)
        a0, a1 = self.n0, self.n1 if a_i else F._pzero
        b0, b1 = o.n0, o.n1 if b_i else F._pzero
        n0 = a0 * b0 - a1 * b1
        n1 = a0 * b1 + a1 * b0
        den = self.den * o.den
        return _normalize(F, n0, n1, den, reduce=not den.is_one())

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self:
            raise ZeroDivisionError("inverse of zero rational function")
        F = self.field
        if self.has_i_part():
            a0, a1 = self.n0, self.n1
            norm = a0 * a0 + a1 * a1
            return _normalize(F, self.den * a0, -(self.den * a1), norm)
        zero = F._pzero if F.has_i else None
        return _normalize(F, self.den, zero, self.n0, reduce=False)

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
        F = self.field
        if k == 0:
            return F.one
        if not self.has_i_part():
            zero = F._pzero if F.has_i else None
            return RatFunc(F, self.n0**k, zero, self.den**k)
        result = F.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def frobenius(self) -> "RatFunc":
        """self ** p, computed by inflating exponents."""
        F = self.field
        p = F.p
        strides = [p] * F.nvars
        n0 = self.n0.inflate(strides) if F.nvars else self.n0
        den = self.den.inflate(strides) if F.nvars else self.den
        n1 = None
        if self.n1 is not None:
            n1 = self.n1.inflate(strides) if F.nvars else self.n1
            # i^p = -i when p = 3 mod 4; only then is an i-part stored
            n1 = -n1
        return RatFunc(F, n0, n1, den)

    def sqrt(self):
        """A square root when numerator and denominator are squares up to a constant, else None."""
        if not self:
            return self
        if self.has_i_part():
            return None
        lc = int(self.n0.leading_coefficient())
        r = BaseElement(self.field.base, lc).sqrt()
        if r is None:
            return None
        try:
            num = (self.n0 * pow(lc, -1, self.field.p)).sqrt()
            den = self.den.sqrt()
        except Exception:
            return None
        return self.field.from_polys(num, den) * self.field.from_base(r)

    def __eq__(self, other):
        if isinstance(other, (int, BaseElement)):
            other = self.field(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.field is not other.field:
            return False
        if self.n0 != other.n0 or self.den != other.den:
            return False
        return _is_zero_poly(self.n1) == _is_zero_poly(other.n1) and (
            _is_zero_poly(self.n1) or self.n1 == other.n1
        )

    def __hash__(self):
        parts = [tuple(sorted(self.n0.to_dict().items())), tuple(sorted(self.den.to_dict().items()))]
        if self.has_i_part():
            parts.append(tuple(sorted(self.n1.to_dict().items())))
        return hash(tuple(parts))

    def __bool__(self):
        return not (self.n0.is_zero() and _is_zero_poly(self.n1))

    def size(self) -> int:
        s = len(self.n0) + len(self.den)
        if self.n1 is not None:
            s += len(self.n1)
        return s

    def is_constant(self) -> bool:
        return (
            self.den.is_one()
            and self.n0.total_degree() <= 0
            and (_is_zero_poly(self.n1) or self.n1.total_degree() <= 0)
        )

    def constant_value(self) -> BaseElement:
        if not self.is_constant():
            raise ValueError("not a constant")
        a = int(self.n0.coeffs()[0]) if not self.n0.is_zero() else 0
        b = int(self.n1.coeffs()[0]) if not _is_zero_poly(self.n1) else 0
        return BaseElement(self.field.base, a, b)

    def numerator_parts(self):
        return self.n0, self.n1

    def evaluate(self, values, target):
        """Image under t_j -> values[j] in the field `target` (i -> target.i)."""
        powcache: dict = {}

        def ev(poly):
            total = target.zero
            for exps, c in poly.to_dict().items():
                term = target(int(c))
                for j, e in enumerate(exps):
                    if e:
                        key = (j, e)
                        pw = powcache.get(key)
                        if pw is None:
                            pw = values[j] ** e
                            powcache[key] = pw
                        term = term * pw
                total = total + term
            return total

        den = ev(self.den)
        if not den:
            raise UnluckySpecialization("denominator vanishes at the specialization point")
        num = ev(self.n0)
        if self.has_i_part():
            num = num + target.i * ev(self.n1)
        return num / den

    def __repr__(self):
        return self.to_str()

    def to_str(self) -> str:
        def fmt(poly):
            return str(poly) if not poly.is_zero() else "0"

        num = fmt(self.n0)
        if self.has_i_part():
            num = f"{num} + i*({fmt(self.n1)})" if not self.n0.is_zero() else f"i*({fmt(self.n1)})"
        if self.den.is_one():
            return num
        return f"({num})/({fmt(self.den)})"
