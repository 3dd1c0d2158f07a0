"""Kummer quartic surfaces in the Heisenberg-normalized coordinates x00, x01, x10, x11.

The quartic is S + 2 k00 P + k01 Q01 + k10 Q10 + k11 Q11 with
S = sum x^4, P = x00 x01 x10 x11, Q01 = x00^2 x01^2 + x10^2 x11^2,
Q10 = x00^2 x10^2 + x01^2 x11^2, Q11 = x00^2 x11^2 + x01^2 x10^2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateTheta, GenericityError, InternalInconsistency
from .heisenberg import X_NAMES, as_two_torsion, all_two_torsion, restrict_form
from .linalg import solve_unique
from .mpoly import MPoly
from .scalarfield.kummerfield import KummerField
from .scalarfield.specialization import Specialization, genericity_clauses


@dataclass(frozen=True)
class KummerCoeffs:
    k00: object
    k01: object
    k10: object
    k11: object

    @classmethod
    def symbolic(cls, p: int) -> "KummerCoeffs":
        return cls(*KummerField(p).gens())

    @classmethod
    def from_specialization(cls, sp: Specialization) -> "KummerCoeffs":
        return cls(sp.k00, sp.k01, sp.k10, sp.k11)

    @property
    def field(self):
        return self.k00.field

    @property
    def p(self) -> int:
        return self.field.p

    def as_tuple(self):
        return (self.k00, self.k01, self.k10, self.k11)

    def map(self, fn) -> "KummerCoeffs":
        return KummerCoeffs(*(fn(c) for c in self.as_tuple()))

    def swapped(self) -> "KummerCoeffs":
        """k01 and k10 exchanged."""
        return KummerCoeffs(self.k00, self.k10, self.k01, self.k11)


def _exp(**powers) -> tuple[int, int, int, int]:
    return tuple(powers.get(n, 0) for n in X_NAMES)


def kummer_equation(k: KummerCoeffs, names=X_NAMES) -> MPoly:
    F = k.field
    one = F.one
    terms = {}
    for j in range(4):
        e = [0] * 4
        e[j] = 4
        terms[tuple(e)] = one
    terms[(1, 1, 1, 1)] = k.k00 * 2
    for (a, b), c in (((0, 1), k.k01), ((2, 3), k.k01), ((0, 2), k.k10), ((1, 3), k.k10),
                      ((0, 3), k.k11), ((1, 2), k.k11)):
        e = [0] * 4
        e[a] = 2
        e[b] = 2
        terms[tuple(e)] = c
    return MPoly(4, {e: c for e, c in terms.items() if c}, names)


def relation_value(k: KummerCoeffs):
    return 4 + k.k01 * k.k10 * k.k11 - k.k01 * k.k01 - k.k10 * k.k10 - k.k11 * k.k11 + k.k00 * k.k00


@dataclass
class GenericityReport:
    relation_holds: bool
    clauses: dict

    @property
    def ok(self) -> bool:
        return self.relation_holds and all(self.clauses.values())

    def failed(self) -> list[str]:
        out = [] if self.relation_holds else ["cubic relation"]
        return out + [name for name, good in self.clauses.items() if not good]


def check_relation_and_genericity(k: KummerCoeffs) -> GenericityReport:
    return GenericityReport(
        relation_holds=not relation_value(k),
        clauses=genericity_clauses(k.k00, k.k01, k.k10, k.k11),
    )


# theta constants


@dataclass(frozen=True)
class ThetaConstants:
    t00: object
    t01: object
    t10: object
    t11: object

    def as_tuple(self):
        return (self.t00, self.t01, self.t10, self.t11)


def theta_clauses(t: ThetaConstants) -> dict[str, bool]:
    a, b, c, d = t.as_tuple()
    out = {}
    for name, (u, v) in {
        "t00*t01 != +-t10*t11": (a * b, c * d),
        "t00*t10 != +-t01*t11": (a * c, b * d),
        "t00*t11 != +-t01*t10": (a * d, b * c),
    }.items():
        out[name] = bool(u - v) and bool(u + v)
    a2, b2, c2, d2 = a * a, b * b, c * c, d * d
    out["t00^2+t01^2 != t10^2+t11^2"] = bool(a2 + b2 - c2 - d2)
    out["t00^2+t10^2 != t01^2+t11^2"] = bool(a2 + c2 - b2 - d2)
    out["t00^2+t11^2 != t01^2+t10^2"] = bool(a2 + d2 - b2 - c2)
    out["sum of squares != 0"] = bool(a2 + b2 + c2 + d2)
    return out


def node_system(t: ThetaConstants):
    """Rows of the linear system 'all partials of the quartic vanish at t' in (k00, k01, k10, k11)."""
    th = t.as_tuple()
    F = th[0].field
    rows, rhs = [], []
    # partial derivative in x_j: 4 x_j^3 + 2 k00 prod_{w != j} x_w + sum over pairs containing j
    pairs = {1: ((0, 1), (2, 3)), 2: ((0, 2), (1, 3)), 3: ((0, 3), (1, 2))}
    for j in range(4):
        row = {}
        prod = F.one
        for w in range(4):
            if w != j:
                prod = prod * th[w]
        row[0] = prod * 2
        for col, prs in pairs.items():
            val = F.zero
            for a, b in prs:
                if j == a:
                    val = val + th[a] * th[b] * th[b] * 2
                elif j == b:
                    val = val + th[b] * th[a] * th[a] * 2
            if val:
                row[col] = val
        rows.append(row)
        rhs.append(-(th[j] ** 3) * 4)
    return rows, rhs


def coeffs_from_theta_constants(t: ThetaConstants) -> KummerCoeffs:
    """Coefficients of the quartic having a node at t.

    k01, k10, k11 come from closed quotients of quartic theta expressions; k00
    comes from solving the node system and is checked against the cubic relation.
    """
    clauses = theta_clauses(t)
    if not all(clauses.values()):
        bad = [n for n, ok in clauses.items() if not ok]
        raise DegenerateTheta(f"theta constants fail: {', '.join(bad)}")
    a, b, c, d = t.as_tuple()
    a2, b2, c2, d2 = a * a, b * b, c * c, d * d
    a4, b4, c4, d4 = a2 * a2, b2 * b2, c2 * c2, d2 * d2
    k01 = -(a4 + b4 - c4 - d4) / (a2 * b2 - c2 * d2)
    k10 = -(a4 - b4 + c4 - d4) / (a2 * c2 - b2 * d2)
    k11 = -(a4 - b4 - c4 + d4) / (a2 * d2 - b2 * c2)
    F = a.field
    rows, rhs = node_system(t)
    try:
        sol = solve_unique(rows, rhs, 4, F.zero)
    except Exception as exc:
        raise DegenerateTheta(f"node system is singular: {exc}") from exc
    k00 = sol[0]
    if (sol[1], sol[2], sol[3]) != (k01, k10, k11):
        raise InternalInconsistency("closed theta quotients disagree with the node system")
    k = KummerCoeffs(k00, k01, k10, k11)
    if relation_value(k):
        raise InternalInconsistency("coefficients from theta constants violate the cubic relation")
    return k


def theta_orbit(t: ThetaConstants) -> list[tuple]:
    """The 16 images of t under the sign/permutation action of the two-torsion."""
    from .heisenberg import character

    th = t.as_tuple()
    out = []
    for x in range(4):
        for xs in range(4):
            v = [None] * 4
            for z in range(4):
                v[z ^ x] = th[z] * character(xs, z ^ x)
            out.append(tuple(v))
    return out


def random_theta_constants(F, rng, max_draws: int = 1000) -> ThetaConstants:
    for _ in range(max_draws):
        t = ThetaConstants(*(F.random(rng) for _ in range(4)))
        if all(theta_clauses(t).values()):
            return t
    raise DegenerateTheta("no nondegenerate theta constants found")


# invariant lines


def omega(k: KummerCoeffs, tau, sign: str = "+"):
    """omega with K restricted to the eigenline pair equal to c*(l0^4 + omega l0^2 l1^2 + l1^4)."""
    tau = as_two_torsion(tau)
    K = kummer_equation(k)
    r = restrict_form(K, tau, sign, field=k.field)
    c4 = r.coeff((4, 0))
    c0 = r.coeff((0, 4))
    if r.coeff((3, 1)) or r.coeff((1, 3)) or not c4 or not (c4 == c0):
        raise InternalInconsistency(f"restriction of the quartic to the {sign} line of {tau} has unexpected shape")
    w = r.coeff((2, 2)) / c4
    if not (w - 2) or not (w + 2):
        raise GenericityError(f"omega({tau}) = +-2")
    return w


def omega_chart(k: KummerCoeffs, sign: str = "+") -> dict[str, object]:
    return {str(t): omega(k, t, sign) for t in all_two_torsion()}


def frobenius_twist(k: KummerCoeffs, p: int | None = None) -> KummerCoeffs:
    if p is not None and p != k.p:
        raise ValueError("characteristic mismatch")
    return k.map(lambda c: c.frobenius())
