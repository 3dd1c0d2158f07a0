"""Closed-form reference values used by the oracle suites.

Everything here is transcribed data, kept separate from the code that derives
the same objects so the two can be compared.  Expressions are Python source
strings evaluated with field elements bound to the variable names.
"""

from __future__ import annotations

from .heisenberg import as_two_torsion

# omega(tau) on the invariant lines, keyed by the 4-bit label of tau
OMEGA_CHART = {
    "0001": "k10",
    "0010": "k01",
    "0011": "k11",
    "0100": "2*(k00+k10+k11)/(2+k01)",
    "0101": "2*(-k00+k10-k11)/(2-k01)",
    "0110": "2*(-k00+k10+k11)/(2+k01)",
    "0111": "2*(k00+k10-k11)/(2-k01)",
    "1000": "2*(k00+k01+k11)/(2+k10)",
    "1001": "2*(-k00+k01+k11)/(2+k10)",
    "1010": "2*(-k00+k01-k11)/(2-k10)",
    "1011": "2*(k00+k01-k11)/(2-k10)",
    "1100": "2*(k00+k01+k10)/(2+k11)",
    "1101": "2*(k00+k01-k10)/(2-k11)",
    "1110": "2*(-k00+k01-k10)/(2-k11)",
    "1111": "2*(-k00+k01+k10)/(2+k11)",
}

# Q0 as sum_j q_j(w) l0^(p-2j) l1^(2j); entry j is the expression for q_j
Q0_CLOSED = {
    3: ("1", "-w"),
    5: ("1", "w*(w**2+2)", "w**2+2"),
    7: ("1", "-2*w*(w**4-1)", "w**2*(w**2-1)*(w**2-2)", "-w*(w**2-1)"),
}

# (N, D) of the x-line map of multiplication by p on y^2 = x(x-1)(x-mu)
LINE_MAP_CLOSED = {
    3: ("x*(x+mu*(mu+1)*z)**2", "z*((mu+1)*x+mu**2*z)**2"),
    5: (
        "x*(x**2-mu*(mu+1)*(mu**2-mu+1)*x*z+mu**4*(mu**2-mu+1)*z**2)**2",
        "z*((mu**2-mu+1)*(x**2-mu**2*(mu+1)*x*z)+mu**6*z**2)**2",
    ),
    # the middle term of N is read as mu^4 (mu+1)^2 (mu-2)(mu-4)(mu^2+1)
    7: (
        "x*(x**3+2*mu*(mu+1)*(mu-2)*(mu-4)*(mu**2+3*mu+1)*x**2*z"
        "+mu**4*(mu+1)**2*(mu-2)*(mu-4)*(mu**2+1)*x*z**2+mu**9*(mu+1)*(mu-2)*(mu-4)*z**3)**2",
        "z*((mu+1)*(mu-2)*(mu-4)*(x**3+mu**2*(mu+1)*(mu**2+1)*x**2*z"
        "+mu**6*(mu**2+3*mu+1)*x*z**2)+mu**12*z**3)**2",
    ),
}


def evaluate_expression(expr: str, env: dict):
    return eval(expr, {"__builtins__": {}}, dict(env))


def _parity_sign(n: int) -> int:
    return -1 if n % 2 else 1


# For x != 0: (index pair grouped with f00 in the l0 exponent, the two others,
# and per x* the sign rules for A and for B as (constant sign, indices whose sum
# decides the parity)).
_MIXED_ROWS = {
    1: ((1,), (2, 3), {0: ((1, ()), (1, ())), 1: ((1, (1, 3)), (-1, (1, 3))), 2: ((1, ()), (-1, ())), 3: ((1, (1, 3)), (1, (1, 3)))}),
    2: ((2,), (1, 3), {0: ((1, ()), (1, ())), 1: ((1, ()), (-1, ())), 2: ((1, (2, 3)), (-1, (2, 3))), 3: ((1, (2, 3)), (1, (2, 3)))}),
    3: ((3,), (1, 2), {0: ((1, ()), (1, ())), 1: ((1, (2, 3)), (1, (2, 3))), 2: ((1, (2, 3)), (-1, (2, 3))), 3: ((1, ()), (-1, ()))}),
}


def restriction_chart_entry(kind: str, f: tuple[int, int, int, int], tau) -> tuple[int, int, int] | None:
    """Reference image of A_f or B_f on the + line of tau as (sign, l0 exponent, l1 exponent).

    None means the image is 0.  On the x = 00 lines the l1 exponent is 2*f_j,
    the only reading compatible with the degree.
    """
    t = as_two_torsion(tau)
    f00, f01, f10, f11 = f
    if t.x == 0:
        if kind == "B":
            return None
        # x* = 01 keeps y10, x* = 10 keeps y01, x* = 11 keeps y11
        keep = {1: 2, 2: 1, 3: 3}[t.xstar]
        others = [j for j in (1, 2, 3) if j != keep]
        if any(f[j] for j in others):
            return None
        return (1, 2 * f00 + 1, 2 * f[keep])
    grouped, rest, signs = _MIXED_ROWS[t.x]
    e0 = 1 + 2 * (f00 + sum(f[j] for j in grouped))
    e1 = 2 * sum(f[j] for j in rest)
    sign_const, parity_idx = signs[t.xstar][0 if kind == "A" else 1]
    sign = sign_const * _parity_sign(sum(f[j] for j in parity_idx))
    if kind == "B":
        e1 += 2
    return (sign, e0, e1)


__all__ = [
    "LINE_MAP_CLOSED",
    "OMEGA_CHART",
    "Q0_CLOSED",
    "evaluate_expression",
    "restriction_chart_entry",
]
