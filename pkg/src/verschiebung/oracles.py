"""Oracle suites: derived objects checked against closed forms or brute force.

Each suite returns a list of OracleCase records; a suite passes when every case
does.  The CLI prints these one per line.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .ecarith import (
    _legendre_phi,
    ec_mul,
    line_map,
    q0_in_omega,
    random_ordinary_mu,
    random_point,
    weierstrass_division_polynomials,
    weierstrass_phi,
)
from .heisenberg import all_two_torsion, as_two_torsion
from .kummer import KummerCoeffs, omega
from .reconstruct import invariant_basis, kernel_dimension, restriction_row
from .reference import (
    LINE_MAP_CLOSED,
    OMEGA_CHART,
    Q0_CLOSED,
    evaluate_expression,
    restriction_chart_entry,
)
from .scalarfield.finitefield import FiniteField
from .scalarfield.ratfunc import FunctionField


@dataclass
class OracleCase:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def all_ok(cases: list[OracleCase]) -> bool:
    return bool(cases) and all(c.ok for c in cases)


def kummer_env(k: KummerCoeffs) -> dict:
    return {"k00": k.k00, "k01": k.k01, "k10": k.k10, "k11": k.k11}


def oracle_omega(p: int, tau=None) -> list[OracleCase]:
    """omega on both invariant lines against the closed-form chart, symbolically."""
    k = KummerCoeffs.symbolic(p)
    env = kummer_env(k)
    taus = [as_two_torsion(tau)] if tau is not None else all_two_torsion()
    cases = []
    for t in taus:
        label = str(t)
        plus = omega(k, t, "+")
        minus = omega(k, t, "-")
        ref = evaluate_expression(OMEGA_CHART[label], env)
        ok = plus == ref and minus == plus
        detail = "" if ok else f"derived {plus!r}, other line {minus!r}, reference {ref!r}"
        cases.append(OracleCase(f"omega p={p} tau={label}", ok, detail))
    return cases


def _omega_polynomial(coeffs: tuple, W):
    (w,) = W.gens()
    total = W.zero
    for d, c in enumerate(coeffs):
        if c:
            total = total + (w**d) * c
    return total


def oracle_q0(p: int) -> list[OracleCase]:
    W = FunctionField(p, ("w",))
    env = {"w": W.gens()[0]}
    form = q0_in_omega(p)
    refs = Q0_CLOSED[p]
    cases = []
    n = max(len(refs), len(form.coeffs))
    for j in range(n):
        ours = _omega_polynomial(form.coeffs[j], W) if j < len(form.coeffs) else W.zero
        ref = evaluate_expression(refs[j], env) if j < len(refs) else W.zero
        ref = W(ref) if isinstance(ref, int) else ref
        ok = ours == ref
        cases.append(OracleCase(f"Q0 p={p} coefficient of l0^{p - 2 * j} l1^{2 * j}", ok, "" if ok else f"{ours!r} vs {ref!r}"))
    return cases


def _binary_over(f, R, mu, x, z):
    total = R.zero
    for (i, j), c in f.terms.items():
        total = total + c.evaluate([mu], R) * (x**i) * (z**j)
    return total


def oracle_line_map(p: int) -> list[OracleCase]:
    """(N, D) over F_p(mu) against the closed forms, compared as polynomials in mu, x, z."""
    R = FunctionField(p, ("mu", "x", "z"))
    mu, x, z = R.gens()
    lm = line_map(p)
    env = {"mu": mu, "x": x, "z": z}
    refN, refD = (evaluate_expression(e, env) for e in LINE_MAP_CLOSED[p])
    N = _binary_over(lm.N, R, mu, x, z)
    D = _binary_over(lm.D, R, mu, x, z)
    return [
        OracleCase(f"line map p={p} N", N == refN, "" if N == refN else f"{N!r} vs {refN!r}"),
        OracleCase(f"line map p={p} D", D == refD, "" if D == refD else f"{D!r} vs {refD!r}"),
    ]


def oracle_ec(p: int, trials: int = 100, seed: int = 0, m: int = 4) -> list[OracleCase]:
    """The x-line map at random ordinary (mu, P) over GF(p^m) against double-and-add."""
    F = FiniteField(p, m)
    rng = random.Random(seed)
    cases = []
    for n in range(trials):
        mu = random_ordinary_mu(F, rng)
        P = random_point(mu, F, rng)
        Q = ec_mul(p, P)
        N, D = line_map(p, mu).evaluate(P.x)
        if Q.infinity:
            ok = not D and bool(N)
        else:
            ok = bool(D) and N == Q.x * D
        cases.append(OracleCase(f"ec p={p} trial {n}", ok, "" if ok else f"mu={mu!r} x={P.x!r}"))
    return cases


def _eval_xy(f, mu, xv, yv, F):
    total = F.zero
    for (i, j), c in f.terms.items():
        total = total + c.evaluate([mu], F) * (xv**i) * (yv**j)
    return total


def oracle_division_polynomials(p: int, ms=(3, 5, 7, 9), trials: int = 20, seed: int = 0, m: int = 4) -> list[OracleCase]:
    """x([m]P) = phi_m / psi_m^2 at random points, for the Legendre recurrences."""
    F = FiniteField(p, m)
    rng = random.Random(seed)
    cases = []
    for mm in ms:
        phi, psi2 = _legendre_phi(p, mm)
        good = 0
        for _ in range(trials):
            mu = random_ordinary_mu(F, rng)
            P = random_point(mu, F, rng)
            Q = ec_mul(mm, P)
            num = _eval_xy(phi, mu, P.x, P.y, F)
            den = _eval_xy(psi2, mu, P.x, P.y, F)
            if Q.infinity:
                good += not den
            else:
                good += bool(den) and num == Q.x * den
        cases.append(OracleCase(f"division polynomial p={p} m={mm}", good == trials, f"{good}/{trials}"))
    return cases


def oracle_weierstrass_degrees(ms=(3, 5, 7)) -> list[OracleCase]:
    """deg phi_m = m^2 and deg psi_m^2 = m^2 - 1 in x', over the integers."""
    cases = []
    for m in ms:
        psi = weierstrass_division_polynomials(m + 1)[m]
        phi = weierstrass_phi(m)
        dphi = phi.degree_in(0)
        dpsi2 = (psi * psi).degree_in(0)
        ok = dphi == m * m and dpsi2 == m * m - 1
        cases.append(OracleCase(f"division polynomial degrees m={m}", ok, f"deg phi={dphi}, deg psi^2={dpsi2}"))
    return cases


def oracle_kernel(r_values=(0, 1, 2, 3), p: int = 3) -> list[OracleCase]:
    """The parity relations alone should leave no kernel; the x = 00 line data is shown alongside."""
    cases = []
    for r in r_values:
        plain = kernel_dimension(r, p)
        full = kernel_dimension(r, p, with_line_data=True)
        cases.append(
            OracleCase(
                f"kernel p={p} r={r}",
                plain == 0,
                f"dimension {plain} from the parity relations, {full} with the x=00 line data",
            )
        )
    return cases


def oracle_chart(p: int, tau=None) -> list[OracleCase]:
    """restriction_row against the closed-form restriction chart, one case per tau.

    The chart is matched up to a single nonzero factor per tau (the
    normalization of the eigenvectors), which must be the same for every
    invariant monomial.
    """
    taus = [as_two_torsion(tau)] if tau is not None else all_two_torsion()
    basis = invariant_basis(p)
    cases = []
    for t in taus:
        factors = set()
        problems = []
        for mono in basis:
            r = restriction_row(mono, t, "+", p)
            ref = restriction_chart_entry(mono.kind, mono.f, t)
            if ref is None:
                if r.terms:
                    problems.append(f"{mono.name} should vanish")
                continue
            sign, i, j = ref
            if set(r.terms) != {(i, j)}:
                problems.append(f"{mono.name} has shape {sorted(r.terms)}")
                continue
            factors.add(r.terms[(i, j)] * sign)
        if len(factors) > 1:
            problems.append("factor differs between monomials")
        ok = not problems
        detail = f"common factor {next(iter(factors))!r}" if ok and factors else "; ".join(problems)
        cases.append(OracleCase(f"chart p={p} tau={t}", ok, detail))
    return cases


__all__ = [
    "OracleCase",
    "all_ok",
    "kummer_env",
    "oracle_chart",
    "oracle_division_polynomials",
    "oracle_ec",
    "oracle_kernel",
    "oracle_line_map",
    "oracle_omega",
    "oracle_q0",
    "oracle_weierstrass_degrees",
]
