"""Sparse multivariate polynomials over any exact field-like coefficient type.

Terms live in a dict mapping exponent tuples to nonzero coefficients.  Monomial
order is graded lexicographic throughout.  Coefficients only need +, -, *, /,
unary minus, bool (zero test) and ==; ints and Fractions work for the parts
that never divide.
"""

from __future__ import annotations

import heapq
from typing import Callable, Iterable, Sequence

from .errors import ExtensionNeeded, NotASquare, NotDivisible


def grlex_key(e: tuple[int, ...]):
    return (sum(e), e)


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub_exp(a, b):
    d = tuple(x - y for x, y in zip(a, b))
    return d if min(d, default=0) >= 0 else None


class MPoly:
    __slots__ = ("nvars", "terms", "names")

    def __init__(self, nvars: int, terms: dict | None = None, names: Sequence[str] | None = None):
        self.nvars = nvars
        self.terms = {} if terms is None else terms
        self.names = tuple(names) if names is not None else tuple(f"x{j}" for j in range(nvars))

    # construction
    @classmethod
    def from_terms(cls, nvars, items: Iterable, names=None) -> "MPoly":
        d: dict = {}
        for e, c in items:
            e = tuple(e)
            if e in d:
                c = d[e] + c
            d[e] = c
        return cls(nvars, {e: c for e, c in d.items() if c}, names)

    @classmethod
    def constant(cls, c, nvars, names=None) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c} if c else {}, names)

    @classmethod
    def gen(cls, j: int, nvars: int, one, names=None) -> "MPoly":
        e = [0] * nvars
        e[j] = 1
        return cls(nvars, {tuple(e): one}, names)

    @classmethod
    def gens(cls, nvars: int, one, names=None) -> list["MPoly"]:
        return [cls.gen(j, nvars, one, names) for j in range(nvars)]

    def _new(self, terms) -> "MPoly":
        return MPoly(self.nvars, terms, self.names)

    def copy(self) -> "MPoly":
        return self._new(dict(self.terms))

    # inspection
    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def coefficient_field(self):
        for c in self.terms.values():
            return getattr(c, "field", None)
        return None

    def coeff(self, e) -> object:
        return self.terms.get(tuple(e), 0)

    def leading_term(self):
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, j: int) -> int:
        return max((e[j] for e in self.terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def support(self) -> set:
        return set(self.terms)

    # arithmetic
    def __eq__(self, other):
        if isinstance(other, MPoly):
            if self.nvars != other.nvars or len(self.terms) != len(other.terms):
                return False
            for e, c in self.terms.items():
                oc = other.terms.get(e)
                if oc is None or not (c == oc):
                    return False
            return True
        if not other:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.constant(other, self.nvars, self.names)
        d = dict(self.terms)
        for e, c in other.terms.items():
            if e in d:
                s = d[e] + c
                if s:
                    d[e] = s
                else:
                    del d[e]
            else:
                d[e] = c
        return self._new(d)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.constant(other, self.nvars, self.names)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MPoly":
        if not c:
            return self._new({})
        d = {}
        for e, a in self.terms.items():
            v = a * c
            if v:
                d[e] = v
        return self._new(d)

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        if len(self.terms) > len(other.terms):
            a, b = self.terms, other.terms
        else:
            a, b = other.terms, self.terms
        d: dict = {}
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = c1 * c2
                if e in d:
                    d[e] = d[e] + v
                else:
                    d[e] = v
        return self._new({e: c for e, c in d.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = None
        base = self
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        if result is None:
            one = self._one()
            return MPoly.constant(one, self.nvars, self.names)
        return result

    def _one(self):
        F = self.coefficient_field()
        if F is not None:
            return F.one
        return 1

    def map_coeffs(self, fn: Callable) -> "MPoly":
        d = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                d[e] = v
        return self._new(d)

    def rename(self, names) -> "MPoly":
        return MPoly(self.nvars, dict(self.terms), names)

    def __repr__(self):
        return self.to_str()

    def to_str(self, coeff_str: Callable = str) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, e) if k
            )
            cs = coeff_str(c)
            if not mono:
                parts.append(f"({cs})")
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)


def _zero_like(f: MPoly) -> MPoly:
    return MPoly(f.nvars, {}, f.names)


def poly_add(f: MPoly, g: MPoly) -> MPoly:
    return f + g


def poly_mul(f: MPoly, g: MPoly) -> MPoly:
    return f * g


def poly_derivative(f: MPoly, j: int) -> MPoly:
    d = {}
    for e, c in f.terms.items():
        k = e[j]
        if k:
            v = c * k
            if v:
                ne = list(e)
                ne[j] = k - 1
                d[tuple(ne)] = v
    return f._new(d)


def poly_substitute(f: MPoly, images: Sequence[MPoly], one=None) -> MPoly:
    """f(images[0], ..., images[n-1]); images share a target ring."""
    if not images:
        raise ValueError("no images supplied")
    target = images[0]
    if one is None:
        one = f._one()
    result = MPoly(target.nvars, {}, target.names)
    powcache: dict = {}

    def power(j, k):
        key = (j, k)
        r = powcache.get(key)
        if r is None:
            if k == 1:
                r = images[j]
            elif k % 2 == 0:
                h = power(j, k // 2)
                r = h * h
            else:
                r = power(j, k - 1) * images[j]
            powcache[key] = r
        return r

    # group terms sharing the same prefix power product to reuse partial products
    prodcache: dict = {}

    def monomial(e):
        r = prodcache.get(e)
        if r is not None:
            return r
        nz = [j for j, k in enumerate(e) if k]
        if not nz:
            r = MPoly.constant(one, target.nvars, target.names)
        elif len(nz) == 1:
            r = power(nz[0], e[nz[0]])
        else:
            last = nz[-1]
            prefix = list(e)
            prefix[last] = 0
            r = monomial(tuple(prefix)) * power(last, e[last])
        prodcache[e] = r
        return r

    acc: dict = {}
    for e, c in f.terms.items():
        m = monomial(e)
        for me, mc in m.terms.items():
            v = mc * c
            if me in acc:
                acc[me] = acc[me] + v
            else:
                acc[me] = v
    result.terms = {e: c for e, c in acc.items() if c}
    return result


def poly_evaluate(f: MPoly, point: Sequence, zero=None):
    total = zero
    powcache: dict = {}
    for e, c in f.terms.items():
        term = c
        for j, k in enumerate(e):
            if k:
                key = (j, k)
                pw = powcache.get(key)
                if pw is None:
                    pw = point[j] ** k
                    powcache[key] = pw
                term = term * pw
        total = term if total is None else total + term
    if total is None:
        return 0 if zero is None else zero
    return total


def poly_exact_div(f: MPoly, g: MPoly) -> MPoly:
    """q with q*g == f, or NotDivisible."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    q = {}
    if not f:
        return _zero_like(f)
    lt_e, lt_c = g.leading_term()
    inv = 1 / lt_c if not (lt_c == 1) else None
    rest = [(e, c) for e, c in g.terms.items() if e != lt_e]
    R = dict(f.terms)
    heap = [(-sum(e), tuple(-x for x in e), e) for e in R]
    heapq.heapify(heap)
    while heap:
        _, _, e = heapq.heappop(heap)
        c = R.pop(e, None)
        if c is None:
            continue
        d = _sub_exp(e, lt_e)
        if d is None:
            raise NotDivisible("leading term of the remainder is not divisible by the divisor's")
        qc = c if inv is None else c * inv
        q[d] = qc
        for ge, gc in rest:
            m = tuple(x + y for x, y in zip(d, ge))
            v = qc * gc
            old = R.get(m)
            if old is None:
                R[m] = -v
                heapq.heappush(heap, (-sum(m), tuple(-x for x in m), m))
            else:
                nv = old - v
                if nv:
                    R[m] = nv
                else:
                    del R[m]
    return f._new(q)


def poly_divides(g: MPoly, f: MPoly) -> bool:
    try:
        poly_exact_div(f, g)
        return True
    except NotDivisible:
        return False


# gcd


def _monic(f: MPoly) -> MPoly:
    if not f:
        return f
    _, c = f.leading_term()
    if c == 1:
        return f
    return f.scale(1 / c)


def _as_univariate(f: MPoly, v: int) -> dict[int, MPoly]:
    """f as {degree in x_v: coefficient polynomial free of x_v}."""
    out: dict[int, dict] = {}
    for e, c in f.terms.items():
        k = e[v]
        ne = e[:v] + (0,) + e[v + 1 :]
        out.setdefault(k, {})[ne] = c
    return {k: f._new(d) for k, d in out.items()}


def _from_univariate(u: dict[int, MPoly], v: int, like: MPoly) -> MPoly:
    d = {}
    for k, c in u.items():
        for e, a in c.terms.items():
            ne = e[:v] + (k,) + e[v + 1 :]
            d[ne] = a
    return like._new(d)


def _content(u: dict[int, MPoly]) -> MPoly:
    g = None
    for c in u.values():
        g = c if g is None else poly_gcd(g, c)
        if g.total_degree() == 0:
            break
    return g


def _udeg(u):
    return max(u) if u else -1


def _prem(A: dict, B: dict, like: MPoly) -> dict:
    """Pseudo-remainder lc(B)^(degA-degB+1) * A mod B, coefficients in the subring."""
    dB = _udeg(B)
    lcB = B[dB]
    R = dict(A)
    steps = _udeg(A) - dB + 1
    while R and _udeg(R) >= dB:
        dR = _udeg(R)
        lcR = R.pop(dR)
        shift = dR - dB
        newR = {k: c * lcB for k, c in R.items()}
        for k, c in B.items():
            if k == dB:
                continue
            t = c * lcR
            kk = k + shift
            if kk in newR:
                newR[kk] = newR[kk] - t
            else:
                newR[kk] = -t
        R = {k: c for k, c in newR.items() if c}
        steps -= 1
    if steps > 0 and R:
        f = lcB**steps
        R = {k: c * f for k, c in R.items()}
    return R


def poly_gcd(f: MPoly, g: MPoly) -> MPoly:
    """Monic (graded-lex) gcd over a field, via recursive subresultant sequences."""
    if not f:
        return _monic(g)
    if not g:
        return _monic(f)
    support = [j for j in range(f.nvars) if f.degree_in(j) > 0 or g.degree_in(j) > 0]
    if not support:
        return MPoly.constant(f._one(), f.nvars, f.names)
    v = support[-1]
    uf = _as_univariate(f, v)
    ug = _as_univariate(g, v)
    if len(uf) == 1 and 0 in uf:
        return _monic(poly_gcd(f, _content(ug)))
    if len(ug) == 1 and 0 in ug:
        return _monic(poly_gcd(g, _content(uf)))
    cf = _content(uf)
    cg = _content(ug)
    pf = {k: poly_exact_div(c, cf) for k, c in uf.items()}
    pg = {k: poly_exact_div(c, cg) for k, c in ug.items()}
    if _udeg(pf) < _udeg(pg):
        pf, pg = pg, pf
    A, B = pf, pg
    one = MPoly.constant(f._one(), f.nvars, f.names)
    gg = one
    h = one
    while True:
        delta = _udeg(A) - _udeg(B)
        R = _prem(A, B, f)
        if not R:
            last = B
            break
        if _udeg(R) == 0:
            last = None
            break
        divisor = gg * h**delta
        A, B = B, {k: poly_exact_div(c, divisor) for k, c in R.items()}
        gg = A[_udeg(A)]
        if delta == 0:
            pass
        elif delta == 1:
            h = gg
        else:
            h = poly_exact_div(gg**delta, h ** (delta - 1))
    cont = poly_gcd(cf, cg)
    if last is None:
        return _monic(cont)
    pc = _content(last)
    prim = _from_univariate({k: poly_exact_div(c, pc) for k, c in last.items()}, v, f)
    return _monic(prim * cont)


# square roots


def _coeff_sqrt(c):
    if c == 1:
        return c
    s = getattr(c, "sqrt", None)
    r = s() if s is not None else None
    if r is None:
        raise ExtensionNeeded(f"leading coefficient {c!r} has no square root in the coefficient field")
    return r


def _sqrt_by_matching(f: MPoly) -> MPoly:
    lt_e, lt_c = f.leading_term()
    if any(k % 2 for k in lt_e):
        raise NotASquare("leading monomial has an odd exponent")
    a0_e = tuple(k // 2 for k in lt_e)
    a0_c = _coeff_sqrt(lt_c)
    two_a0_inv = 1 / (a0_c + a0_c)
    A: dict = {a0_e: a0_c}
    R = dict(f.terms)
    del R[lt_e]
    heap = [(-sum(e), tuple(-x for x in e), e) for e in R]
    heapq.heapify(heap)
    last_key = grlex_key(a0_e)

    def sub(e, v):
        old = R.get(e)
        if old is None:
            R[e] = -v
            heapq.heappush(heap, (-sum(e), tuple(-x for x in e), e))
        else:
            nv = old - v
            if nv:
                R[e] = nv
            else:
                del R[e]

    while heap:
        _, _, e = heapq.heappop(heap)
        c = R.get(e)
        if c is None:
            continue
        t_e = _sub_exp(e, a0_e)
        if t_e is None or grlex_key(t_e) >= last_key:
            raise NotASquare("remainder term cannot come from a cross product")
        t_c = c * two_a0_inv
        # subtract 2*t*A_sofar + t^2
        for ae, ac in list(A.items()):
            sub(tuple(x + y for x, y in zip(t_e, ae)), (t_c * ac) * 2)
        sub(tuple(2 * x for x in t_e), t_c * t_c)
        A[t_e] = t_c
        last_key = grlex_key(t_e)
    return f._new(A)


def _sqrt_by_gcd(f: MPoly) -> MPoly | None:
    for v in reversed(range(f.nvars)):
        d = poly_derivative(f, v)
        if not d:
            continue
        A = poly_gcd(f, d)
        if A.total_degree() * 2 != f.total_degree():
            return None
        _, lc = f.leading_term()
        A = A.scale(_coeff_sqrt(lc))
        return A
    return None


GCD_ROUTE_MAX_TERMS = 40


def poly_sqrt(f: MPoly, method: str = "auto") -> MPoly:
    """A with A*A == f (leading coefficient a chosen root), or NotASquare.

    method "gcd" uses gcd(f, df/dv); "match" solves for the terms of A in
    decreasing graded-lex order; "auto" tries the gcd route on small inputs
    and falls back to matching.  Every result is checked by squaring.
    """
    if not f:
        return f.copy()
    if method not in ("auto", "gcd", "match"):
        raise ValueError(f"unknown method {method!r}")
    if f.total_degree() % 2:
        raise NotASquare("odd total degree")
    A = None
    if method == "gcd" or (method == "auto" and len(f) <= GCD_ROUTE_MAX_TERMS):
        A = _sqrt_by_gcd(f)
        if A is not None and A * A != f:
            A = None
        if A is None and method == "gcd":
            raise NotASquare("gcd with a partial derivative does not give a square root")
    if A is None:
        A = _sqrt_by_matching(f)
        if A * A != f:
            raise NotASquare("square of the candidate root differs from the input")
    return A
