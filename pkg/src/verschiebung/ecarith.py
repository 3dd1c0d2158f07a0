"""Legendre elliptic curves y^2 = x(x-1)(x-mu) and the map induced by [p] on the x-line.

The x-line map is returned as a pair (N, D) of binary forms of degree p with
x([p]P) = N(x^p, z^p) / D(x^p, z^p).  For p >= 5 it comes from the division
polynomials of the short Weierstrass model y'^2 = x'^3 + A x' + B, shifted back
by x' = x - (mu+1)/3 z.  For p = 3 the tangent/chord formulas are composed
directly.  An independent route through the division polynomials of the
Legendre model itself works for every odd p and is used as a cross-check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DegenerateCurve, InternalInconsistency, UnsupportedCharacteristic
from .linalg import row_reduce
from .mpoly import MPoly, poly_exact_div, poly_substitute
from .scalarfield.finitefield import FiniteField
from .scalarfield.ratfunc import FunctionField

# group law


@dataclass(frozen=True)
class LegendrePoint:
    x: object
    y: object
    mu: object
    infinity: bool = False

    @classmethod
    def at_infinity(cls, mu) -> "LegendrePoint":
        return cls(None, None, mu, True)

    def on_curve(self) -> bool:
        if self.infinity:
            return True
        x = self.x
        return self.y * self.y == x * (x - 1) * (x - self.mu)

    def __neg__(self) -> "LegendrePoint":
        if self.infinity:
            return self
        return LegendrePoint(self.x, -self.y, self.mu)


def _rhs(x, mu):
    return x * (x - 1) * (x - mu)


def ec_double(P: LegendrePoint) -> LegendrePoint:
    if P.infinity or not P.y:
        return LegendrePoint.at_infinity(P.mu)
    x1, y1, mu = P.x, P.y, P.mu
    dP = x1 * x1 * 3 - (mu + 1) * x1 * 2 + mu
    alpha = dP / (y1 * 2)
    beta = x1 * (mu - x1 * x1) / (y1 * 2)
    x2 = alpha * alpha + (mu + 1) - x1 * 2
    y2 = -(alpha * x2 + beta)
    return LegendrePoint(x2, y2, mu)


def ec_add(P: LegendrePoint, Q: LegendrePoint) -> LegendrePoint:
    if P.infinity:
        return Q
    if Q.infinity:
        return P
    if P.x == Q.x:
        if P.y == Q.y and P.y:
            return ec_double(P)
        return LegendrePoint.at_infinity(P.mu)
    mu = P.mu
    dx = Q.x - P.x
    alpha = (Q.y - P.y) / dx
    beta = (P.y * Q.x - Q.y * P.x) / dx
    x3 = alpha * alpha + (mu + 1) - (P.x + Q.x)
    y3 = -(alpha * x3 + beta)
    return LegendrePoint(x3, y3, mu)


def ec_mul(n: int, P: LegendrePoint) -> LegendrePoint:
    if n < 0:
        return ec_mul(-n, -P)
    R = LegendrePoint.at_infinity(P.mu)
    A = P
    while n:
        if n & 1:
            R = ec_add(R, A)
        A = ec_double(A)
        n >>= 1
    return R


def hasse_invariant(mu, p: int):
    """sum_i C(m,i)^2 mu^i with m = (p-1)/2; zero exactly at supersingular mu."""
    m = (p - 1) // 2
    total = mu * 0
    for i in range(m + 1):
        total = total + (mu**i) * (comb(m, i) ** 2)
    return total


def random_ordinary_mu(F: FiniteField, rng: random.Random):
    while True:
        mu = F.random(rng)
        if mu and mu != 1 and hasse_invariant(mu, F.p):
            return mu


def random_point(mu, F: FiniteField, rng: random.Random) -> LegendrePoint:
    while True:
        x = F.random(rng)
        y = _rhs(x, mu).sqrt()
        if y is not None and y:
            if rng.randrange(2):
                y = -y
            return LegendrePoint(x, y, mu)


# division polynomials of y'^2 = x'^3 + A x' + B over Q[A, B]

WEIERSTRASS_NAMES = ("x", "y", "A", "B")


def _w_ring():
    one = Fraction(1)
    x, y, A, B = MPoly.gens(4, one, WEIERSTRASS_NAMES)
    return x, y, A, B


def _reduce_y2(f: MPoly, y2_value: MPoly, yvar: int = 1) -> MPoly:
    """Replace y^2 by the curve's right-hand side until y has degree <= 1."""
    out = MPoly(f.nvars, {}, f.names)
    cache = {0: None}
    for e, c in f.terms.items():
        k = e[yvar]
        base = list(e)
        base[yvar] = k % 2
        mono = MPoly(f.nvars, {tuple(base): c}, f.names)
        h = k // 2
        if h:
            pw = cache.get(h)
            if pw is None:
                pw = y2_value**h
                cache[h] = pw
            mono = mono * pw
        out = out + mono
    return out


def _division_polys(upto: int, x, y, y2_value, psi3, psi4_cofactor, two):
    """psi_0..psi_upto with y-degree <= 1, using the standard recurrences."""
    zero = x * 0
    one = MPoly.constant(two / two, x.nvars, x.names)
    psi = {0: zero, 1: one, 2: y * two, 3: psi3, 4: y * psi4_cofactor}
    two_y = y * two
    for n in range(5, upto + 1):
        m = n // 2
        if n % 2:
            val = psi[m + 2] * psi[m] ** 3 - psi[m - 1] * psi[m + 1] ** 3
        else:
            num = psi[m] * (psi[m + 2] * psi[m - 1] ** 2 - psi[m - 2] * psi[m + 1] ** 2)
            val = poly_exact_div(num, two_y)
        psi[n] = _reduce_y2(val, y2_value)
    return psi


@lru_cache(maxsize=None)
def weierstrass_division_polynomials(upto: int) -> dict[int, MPoly]:
    """psi_m in Q[x, y, A, B] reduced modulo y^2 = x^3 + A x + B (coefficients integral)."""
    x, y, A, B = _w_ring()
    y2 = x**3 + A * x + B
    psi3 = x**4 * 3 + A * x**2 * 6 + B * x * 12 - A * A
    psi4c = (x**6 + A * x**4 * 5 + B * x**3 * 20 - A * A * x * x * 5 - A * B * x * 4 - B * B * 8 - A**3) * 4
    psi = _division_polys(max(upto, 4), x, y, y2, psi3, psi4c, Fraction(2))
    for n, f in psi.items():
        if any(c.denominator != 1 for c in f.terms.values()):
            raise InternalInconsistency(f"psi_{n} has non-integral coefficients")
    return psi


def weierstrass_phi(m: int) -> MPoly:
    psi = weierstrass_division_polynomials(m + 1)
    x, y, A, B = _w_ring()
    val = x * psi[m] ** 2 - psi[m + 1] * psi[m - 1] if m > 1 else x
    return _reduce_y2(val, x**3 + A * x + B)


def division_polynomials(p: int):
    """(psi_p, phi_p) as polynomials in x' over F_p(mu), via A, B of the shifted Legendre model."""
    if p < 5:
        raise UnsupportedCharacteristic("the short Weierstrass route needs p >= 5")
    if p % 2 == 0:
        raise ValueError("requested an even index")
    psi = weierstrass_division_polynomials(p + 1)[p]
    phi = weierstrass_phi(p)
    M = FunctionField(p, ("mu",))
    (mu,) = M.gens()
    A = -(mu * mu - mu + 1) / 3
    B = ((mu + 1) ** 3 - (mu**3 + 1) * 3) / 27
    return _to_univariate_over(psi, M, A, B), _to_univariate_over(phi, M, A, B)


def _to_univariate_over(f: MPoly, M: FunctionField, A, B) -> dict[int, object]:
    p = M.p
    out: dict[int, object] = {}
    for (ex, ey, ea, eb), c in f.terms.items():
        if ey:
            raise InternalInconsistency("odd-index division polynomial still involves y")
        cp = (c.numerator % p) * pow(c.denominator, -1, p)
        term = (A**ea) * (B**eb) * cp
        out[ex] = out.get(ex, M.zero) + term
    return {k: v for k, v in out.items() if v}


# Legendre-model division polynomials over F_p(mu), valid for every odd p

LEGENDRE_NAMES = ("x", "y")


@lru_cache(maxsize=None)
def legendre_division_polynomials(p: int, upto: int) -> dict[int, MPoly]:
    M = FunctionField(p, ("mu",))
    (mu,) = M.gens()
    x, y = MPoly.gens(2, M.one, LEGENDRE_NAMES)
    a2, a4 = -(mu + 1), mu
    b2, b4, b8 = a2 * 4, a4 * 2, -(a4 * a4)
    y2 = x**3 + x * x * a2 + x * a4
    psi3 = x**4 * 3 + x**3 * b2 + x * x * (b4 * 3) + MPoly.constant(b8, 2, LEGENDRE_NAMES)
    psi4c = (x**6 * 2 + x**5 * b2 + x**4 * (b4 * 5) + x * x * (b8 * 10) + x * (b2 * b8) + MPoly.constant(b4 * b8, 2, LEGENDRE_NAMES)) * 2
    return _division_polys(max(upto, 4), x, y, y2, psi3, psi4c, M(2))


def _legendre_phi(p: int, m: int):
    psi = legendre_division_polynomials(p, m + 1)
    M = FunctionField(p, ("mu",))
    (mu,) = M.gens()
    x, y = MPoly.gens(2, M.one, LEGENDRE_NAMES)
    y2 = x**3 - x * x * (mu + 1) + x * mu
    phi = _reduce_y2(x * psi[m] ** 2 - psi[m + 1] * psi[m - 1], y2)
    psi2 = _reduce_y2(psi[m] ** 2, y2)
    return phi, psi2


# line maps

LINE_NAMES = ("x", "z")


@dataclass
class LineMap:
    p: int
    N: MPoly
    D: MPoly
    supersingular: bool = False

    def evaluate(self, x, z=None):
        """(N(x^p, z^p), D(x^p, z^p)) for field elements x, z (z defaults to 1)."""
        p = self.p
        if z is None:
            z = x.field.one
        X, Z = x**p, z**p
        return _eval_binary(self.N, X, Z), _eval_binary(self.D, X, Z)


def _eval_binary(f: MPoly, X, Z):
    total = X * 0
    for (i, j), c in f.terms.items():
        total = total + c * (X**i) * (Z**j)
    return total


def _univariate_to_binary(coeffs: dict[int, object], p: int, M: FunctionField, degree: int) -> MPoly:
    """sum c_k t^k with p | k, as the degree-`degree` form sum c_{pj} X^j Z^(degree-j)."""
    terms = {}
    for k, c in coeffs.items():
        if k % p:
            raise InternalInconsistency(f"x-line map has a term x^{k} that is not a p-th power")
        j = k // p
        if j > degree:
            raise InternalInconsistency("x-line map numerator has too high degree")
        terms[(j, degree - j)] = c
    return MPoly(2, terms, LINE_NAMES)


def _normalize_monic(N: MPoly, D: MPoly, p: int):
    lead = N.coeff((p, 0))
    if not lead:
        raise InternalInconsistency("numerator of the x-line map is not of full degree in x")
    inv = 1 / lead
    return N.scale(inv), D.scale(inv)


def _line_map_weierstrass(p: int) -> LineMap:
    M = FunctionField(p, ("mu",))
    (mu,) = M.gens()
    psi, phi = division_polynomials(p)
    psi_sq: dict[int, object] = {}
    for i, a in psi.items():
        for j, b in psi.items():
            psi_sq[i + j] = psi_sq.get(i + j, M.zero) + a * b
    psi_sq = {k: v for k, v in psi_sq.items() if v}
    Np = _univariate_to_binary(phi, p, M, p)
    Dp = _univariate_to_binary(psi_sq, p, M, p)
    c = (mu + 1) / 3
    cp = c.frobenius()
    X, Z = MPoly.gens(2, M.one, LINE_NAMES)
    shifted = [X - Z * cp, Z]
    N = poly_substitute(Np, shifted) + poly_substitute(Dp, shifted).scale(c)
    D = poly_substitute(Dp, shifted)
    N, D = _normalize_monic(N, D, p)
    return LineMap(p, N, D)


def _line_map_direct_p3() -> LineMap:
    p = 3
    R = FunctionField(p, ("x1", "mu"))
    x1, mu = R.gens()
    P = x1 * (x1 - 1) * (x1 - mu)
    dP = x1 * x1 * 3 - (mu + 1) * x1 * 2 + mu
    x2 = (x1 * x1 - mu) ** 2 / (P * 4)
    # y2 = y1 * r
    r = -(dP * x2 + x1 * (mu - x1 * x1)) / (P * 2)
    x3 = P * (r - 1) ** 2 / (x2 - x1) ** 2 + mu + 1 - x1 - x2
    return _binary_from_ratfunc(x3, p)


def _binary_from_ratfunc(x3, p: int) -> LineMap:
    """Split a rational function of (x1, mu) into forms in x1^p with F_p(mu) coefficients."""
    M = FunctionField(p, ("mu",))
    Mctx = M.ctx

    def by_x_degree(poly):
        out: dict[int, dict] = {}
        for (ex, em), c in poly.to_dict().items():
            out.setdefault(ex, {})[(em,)] = int(c)
        return {k: M.from_polys(Mctx.from_dict(d)) for k, d in out.items()}

    if x3.has_i_part():
        raise InternalInconsistency("x-line map picked up an i-part")
    num = by_x_degree(x3.n0)
    den = by_x_degree(x3.den)
    N = _univariate_to_binary(num, p, M, p)
    D = _univariate_to_binary(den, p, M, p)
    N, D = _normalize_monic(N, D, p)
    return LineMap(p, N, D)


def line_map_legendre(p: int) -> LineMap:
    """x-line map of [p] from the division polynomials of the Legendre model."""
    phi, psi2 = _legendre_phi(p, p)
    M = FunctionField(p, ("mu",))

    def as_univariate(f):
        out = {}
        for (ex, ey), c in f.terms.items():
            if ey:
                raise InternalInconsistency("odd-index division polynomial still involves y")
            out[ex] = c
        return out

    N = _univariate_to_binary(as_univariate(phi), p, M, p)
    D = _univariate_to_binary(as_univariate(psi2), p, M, p)
    N, D = _normalize_monic(N, D, p)
    return LineMap(p, N, D)


@lru_cache(maxsize=None)
def _symbolic_line_map(p: int) -> LineMap:
    if p == 3:
        return _line_map_direct_p3()
    return _line_map_weierstrass(p)


def _is_pure_power(N: MPoly, D: MPoly, p: int) -> bool:
    return set(N.terms) == {(p, 0)} and set(D.terms) == {(0, p)}


def line_map(p: int, mu=None) -> LineMap:
    """(N, D) over F_p(mu) when mu is None, else evaluated at the field element mu."""
    if p < 3 or p % 2 == 0:
        raise UnsupportedCharacteristic(f"p={p}")
    sym = _symbolic_line_map(p)
    if mu is None:
        return sym
    if not mu or mu == 1:
        raise DegenerateCurve("mu must differ from 0 and 1")
    F = mu.field

    def ev(c):
        return c.evaluate([mu], F)

    N = sym.N.map_coeffs(ev)
    D = sym.D.map_coeffs(ev)
    if not D:
        raise DegenerateCurve("x-line map collapses at this mu")
    return LineMap(p, N, D, supersingular=_is_pure_power(N, D, p))


# Q0 as a polynomial in omega

Q_NAMES = ("l0", "l1")


@dataclass(frozen=True)
class OmegaForm:
    """sum_j q_j(omega) l0^(p-2j) l1^(2j), q_j given by ascending F_p coefficient tuples."""

    p: int
    coeffs: tuple  # tuple over j of tuples of ints mod p

    def coefficient(self, j: int) -> tuple:
        return self.coeffs[j]

    def evaluate(self, w) -> list:
        out = []
        for cs in self.coeffs:
            val = w * 0
            for d in reversed(range(len(cs))):
                val = val * w + cs[d]
            out.append(val)
        return out

    def as_binary(self, w) -> MPoly:
        p = self.p
        terms = {}
        for j, v in enumerate(self.evaluate(w)):
            if v:
                terms[(p - 2 * j, 2 * j)] = v
        return MPoly(2, terms, Q_NAMES)

    def __str__(self):
        parts = []
        p = self.p
        for j, cs in enumerate(self.coeffs):
            poly = " + ".join(
                f"{c}*w^{d}" if d > 1 else (f"{c}*w" if d == 1 else str(c))
                for d, c in reversed(list(enumerate(cs)))
                if c
            )
            if not poly:
                continue
            mono = f"l0^{p - 2 * j}" + (f"*l1^{2 * j}" if j else "")
            parts.append(f"({poly})*{mono}")
        return " + ".join(parts)


def _q0_over_ab(p: int) -> MPoly:
    """Q0 over F_p(a, b), normalized to be monic in l0."""
    AB = FunctionField(p, ("a", "b"))
    a, b = AB.gens()
    lm = _symbolic_line_map(p)
    mu_ab = ((a * a + b * b) / (a * b * 2)) ** 2

    def to_ab(c):
        return c.evaluate([mu_ab], AB)

    N = lm.N.map_coeffs(to_ab)
    D = lm.D.map_coeffs(to_ab)
    l0, l1 = MPoly.gens(2, AB.one, Q_NAMES)
    s = (a * a + b * b) ** p
    xt = l0.scale(-(a**p).inverse()) + l1.scale((b**p).inverse())
    zt = l0.scale(-(a**p) * 2 / s) + l1.scale((b**p) * 2 / s)
    Nt = poly_substitute(N, [xt, zt])
    Dt = poly_substitute(D, [xt, zt])
    # 2b/(a^2+b^2) is the factor that inverts the coordinate change; 2ab/(a^2+b^2)
    # would not be homogeneous of degree 0 in (a, b)
    Q = Nt.scale(b * 2 / (a * a + b * b)) - Dt.scale(b.inverse())
    lead = Q.coeff((p, 0))
    if not lead:
        raise InternalInconsistency("Q0 has no l0^p term")
    return Q.scale(lead.inverse())


def _rewrite_in_omega(c, p: int) -> tuple:
    """Coefficients (ascending) of the polynomial r with r(omega) = c, omega = -(a^4+b^4)/(a^2 b^2)."""
    AB = c.field
    a, b = AB.gens()
    if c.has_i_part():
        raise InternalInconsistency("Q0 coefficient has an i-part")
    # c = n/d;  n (a^2 b^2)^p = sum r_k d (-1)^k (a^4+b^4)^k (a^2 b^2)^(p-k)
    num = c.n0
    den = c.den
    ctx = AB.ctx
    A, Bv = ctx.gens()
    w_num = -(A**4 + Bv**4)
    w_den = A**2 * Bv**2
    lhs = num * w_den**p
    cols = [den * w_num**k * w_den ** (p - k) for k in range(p + 1)]
    monos = set(lhs.to_dict())
    for col in cols:
        monos.update(col.to_dict())
    monos = sorted(monos)
    Fp = FiniteField(p, 1)
    rows, rhs = [], []
    col_dicts = [col.to_dict() for col in cols]
    lhs_d = lhs.to_dict()
    for mono in monos:
        row = {}
        for k, cd in enumerate(col_dicts):
            v = int(cd.get(mono, 0))
            if v:
                row[k] = Fp(v)
        rows.append(row)
        rhs.append(Fp(int(lhs_d.get(mono, 0))))
    red = row_reduce(rows, rhs, p + 1, Fp.zero)
    if not red.consistent():
        raise InternalInconsistency("Q0 coefficient is not a polynomial in omega of degree <= p")
    if red.rank < p + 1:
        raise InternalInconsistency("omega powers are linearly dependent")
    sol = [0] * (p + 1)
    for col, (_, val) in red.pivots.items():
        sol[col] = val.code()
    while len(sol) > 1 and sol[-1] == 0:
        sol.pop()
    return tuple(sol)


@lru_cache(maxsize=None)
def q0_in_omega(p: int) -> OmegaForm:
    Q = _q0_over_ab(p)
    for (i, j), c in Q.terms.items():
        if j % 2:
            raise InternalInconsistency("Q0 has an odd power of l1")
    coeffs = []
    for j in range((p - 1) // 2 + 1):
        c = Q.coeff((p - 2 * j, 2 * j))
        coeffs.append(_rewrite_in_omega(c, p) if c else (0,))
    return OmegaForm(p, tuple(coeffs))
