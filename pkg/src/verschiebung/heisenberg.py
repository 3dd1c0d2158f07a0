"""The Heisenberg group acting on the 4-dimensional space W with basis X_z, z in F_2^2.

A two-torsion label tau = (x, x*) is stored as two 2-bit integers, with the
string form "x x*" (e.g. "0110" means x = 01, x* = 10).  Basis index of X_z is
the integer value of the bit string z, so the order is X00, X01, X10, X11.

U(t, x, x*) = t * beta_{x*} * alpha_x, where alpha_x: X_z -> X_{z+x} and
beta_{x*} = diag(x*(z)) with x*(z) = (-1)^(x* . z).  With this composition
order U is a homomorphism for the product
(t, x, x*) (s, y, y*) = (t s y*(x), x + y, x* + y*).
"""

from __future__ import annotations

from dataclasses import dataclass

from .mpoly import MPoly, poly_substitute
from .scalarfield.primefield import BaseElement, BaseField

LABELS = ("00", "01", "10", "11")
X_NAMES = ("x00", "x01", "x10", "x11")
Y_NAMES = ("y00", "y01", "y10", "y11")
LINE_NAMES = ("l0", "l1")


def parity(n: int) -> int:
    return bin(n).count("1") & 1


def character(xstar: int, z: int) -> int:
    """x*(z) as +1 or -1."""
    return -1 if parity(xstar & z) else 1


@dataclass(frozen=True, order=True)
class TwoTorsion:
    x: int
    xstar: int

    @classmethod
    def parse(cls, s: str) -> "TwoTorsion":
        s = s.strip()
        if len(s) != 4 or set(s) - {"0", "1"}:
            raise ValueError(f"two-torsion label must be 4 bits, got {s!r}")
        return cls(int(s[:2], 2), int(s[2:], 2))

    def __str__(self):
        return f"{self.x:02b}{self.xstar:02b}"

    def __add__(self, other: "TwoTorsion") -> "TwoTorsion":
        return TwoTorsion(self.x ^ other.x, self.xstar ^ other.xstar)

    def is_zero(self) -> bool:
        return self.x == 0 and self.xstar == 0


def all_two_torsion(include_zero: bool = False) -> list[TwoTorsion]:
    return [
        TwoTorsion(x, xs)
        for x in range(4)
        for xs in range(4)
        if include_zero or (x, xs) != (0, 0)
    ]


def as_two_torsion(tau) -> TwoTorsion:
    return tau if isinstance(tau, TwoTorsion) else TwoTorsion.parse(tau)


@dataclass(frozen=True)
class HeisenbergElement:
    t: BaseElement
    tau: TwoTorsion

    def __mul__(self, other: "HeisenbergElement") -> "HeisenbergElement":
        sign = character(other.tau.xstar, self.tau.x)
        return HeisenbergElement(self.t * other.t * sign, self.tau + other.tau)

    def inverse(self) -> "HeisenbergElement":
        # (t, x, x*)^2 = (t^2 x*(x), 0, 0)
        sign = character(self.tau.xstar, self.tau.x)
        return HeisenbergElement(self.t.inverse() * sign, self.tau)


def e2_pairing(a, b) -> int:
    """Commutator pairing x*(y) y*(x) as +1 or -1."""
    a, b = as_two_torsion(a), as_two_torsion(b)
    return character(a.xstar, b.x) * character(b.xstar, a.x)


Matrix = list  # 4x4 list of lists of BaseElement


def heisenberg_matrix(g: HeisenbergElement) -> Matrix:
    t = g.t
    F = t.field
    x, xs = g.tau.x, g.tau.xstar
    M = [[F.zero] * 4 for _ in range(4)]
    for z in range(4):
        M[z ^ x][z] = t * character(xs, z ^ x)
    return M


def matmul(A: Matrix, B: Matrix) -> Matrix:
    n = len(A)
    F = A[0][0].field
    return [[sum((A[r][k] * B[k][c] for k in range(n)), F.zero) for c in range(n)] for r in range(n)]


def identity(F: BaseField) -> Matrix:
    return [[F.one if r == c else F.zero for c in range(4)] for r in range(4)]


def order2_lift(tau, F: BaseField) -> HeisenbergElement:
    """The lift of tau with scalar mu = 1 or i chosen so that it squares to the identity."""
    tau = as_two_torsion(tau)
    mu = F.one if character(tau.xstar, tau.x) == 1 else F.i
    return HeisenbergElement(mu, tau)


def hat_h_element(xstar: int, F: BaseField) -> HeisenbergElement:
    return HeisenbergElement(F.one, TwoTorsion(0, xstar))


def alpha_element(x: int, F: BaseField) -> HeisenbergElement:
    return HeisenbergElement(F.one, TwoTorsion(x, 0))


@dataclass(frozen=True)
class EigenBasis:
    """Columns Lambda0, Lambda1 span the +1 eigenline pair, Lambdabar0, Lambdabar1 the -1 pair."""

    tau: TwoTorsion
    lift: HeisenbergElement
    plus: tuple  # two vectors of length 4
    minus: tuple

    def vectors(self, sign: str):
        if sign == "+":
            return self.plus
        if sign == "-":
            return self.minus
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def eigenbasis(tau, F: BaseField) -> EigenBasis:
    tau = as_two_torsion(tau)
    if tau.is_zero():
        raise ValueError("the zero two-torsion point has no eigenline decomposition")
    lift = order2_lift(tau, F)
    if tau.x == 0:
        plus = [z for z in range(4) if character(tau.xstar, z) == 1]
        minus = [z for z in range(4) if character(tau.xstar, z) == -1]

        def unit(z):
            return tuple(F.one if w == z else F.zero for w in range(4))

        return EigenBasis(tau, lift, tuple(unit(z) for z in plus), tuple(unit(z) for z in minus))
    M = heisenberg_matrix(lift)
    half = F(2).inverse()
    z0 = 2 if tau.x == 1 else 1

    def proj(z, sign):
        v = [F.zero] * 4
        v[z] = v[z] + half
        # column z of M is the image of X_z
        for w in range(4):
            v[w] = v[w] + M[w][z] * half * sign
        return tuple(v)

    return EigenBasis(
        tau,
        lift,
        (proj(0, 1), proj(z0, 1)),
        (proj(0, -1), proj(z0, -1)),
    )


def _form_field(f: MPoly):
    F = f.coefficient_field()
    if F is None:
        raise ValueError("cannot act on a zero form without a coefficient field")
    return F


def linear_substitution(f: MPoly, M: Matrix, names=None, field=None) -> MPoly:
    """f(M v): x_j -> sum_k M[j][k] x_k."""
    K = field or _form_field(f)
    n = len(M[0])
    names = names or f.names
    images = []
    for j in range(len(M)):
        terms = {}
        for k in range(n):
            if M[j][k]:
                e = [0] * n
                e[k] = 1
                terms[tuple(e)] = K.from_base(M[j][k])
        images.append(MPoly(n, terms, names))
    return poly_substitute(f, images, one=K.one)


def act_on_form(g: HeisenbergElement, f: MPoly) -> MPoly:
    """(g . f)(v) = f(U_g^{-1} v)."""
    if not f:
        return f.copy()
    return linear_substitution(f, heisenberg_matrix(g.inverse()))


def restrict_form(f: MPoly, tau, sign: str = "+", field=None) -> MPoly:
    """Binary form f(lambda0*Lambda0 + lambda1*Lambda1) on the chosen eigenline pair."""
    K = field or _form_field(f)
    basis = eigenbasis(tau, BaseField(K.p))
    v0, v1 = basis.vectors(sign)
    M = [[v0[z], v1[z]] for z in range(4)]
    return linear_substitution(f, M, names=LINE_NAMES, field=K)


def lift_generators(F: BaseField) -> dict[str, HeisenbergElement]:
    return {str(t): order2_lift(t, F) for t in all_two_torsion()}
