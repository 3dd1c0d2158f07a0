"""Reconstruction of the Verschiebung forms from their restrictions to the 15 invariant lines.

V00 is written in the basis of H-hat-invariant monomials of degree p:
A_f = y00 * prod(y_i^f_i)^2 with |f| = (p-1)/2 and
B_f = y01 y10 y11 * prod(y_i^f_i)^2 with |f| = (p-3)/2.
On the + line of each nonzero tau the restriction must be a multiple of Q0 evaluated
at omega(tau); eliminating the multiple through the l0^p coefficient leaves a linear
system in the a_f, b_f.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .ecarith import OmegaForm, q0_in_omega
from .errors import InternalInconsistency
from .heisenberg import (
    Y_NAMES,
    act_on_form,
    all_two_torsion,
    alpha_element,
    as_two_torsion,
    hat_h_element,
    restrict_form,
)
from .kummer import KummerCoeffs, omega
from .linalg import row_reduce, solve_unique
from .mpoly import MPoly
from .scalarfield.finitefield import FiniteField
from .scalarfield.primefield import BaseField, check_characteristic


@dataclass(frozen=True, order=True)
class InvariantMonomial:
    kind: str  # "A" or "B"
    f: tuple[int, int, int, int]

    @property
    def label(self) -> str:
        return "".join(str(x) for x in self.f)

    @property
    def name(self) -> str:
        return ("a" if self.kind == "A" else "b") + "_" + self.label

    def exponent(self) -> tuple[int, int, int, int]:
        e = [2 * x for x in self.f]
        if self.kind == "A":
            e[0] += 1
        else:
            e[1] += 1
            e[2] += 1
            e[3] += 1
        return tuple(e)

    def realize(self, one) -> MPoly:
        return MPoly(4, {self.exponent(): one}, Y_NAMES)


def multi_indices(total: int, parts: int = 4):
    if total < 0:
        return []
    out = []
    for combo in itertools.product(range(total + 1), repeat=parts):
        if sum(combo) == total:
            out.append(combo)
    return sorted(out, reverse=True)


def invariant_basis(p: int) -> list[InvariantMonomial]:
    """A-monomials then B-monomials, each in decreasing lexicographic order of f."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime >= 3, got {p}")
    A = [InvariantMonomial("A", f) for f in multi_indices((p - 1) // 2)]
    B = [InvariantMonomial("B", f) for f in multi_indices((p - 3) // 2)]
    return A + B


def leading_monomial(p: int) -> InvariantMonomial:
    return InvariantMonomial("A", ((p - 1) // 2, 0, 0, 0))


def restriction_row(m: InvariantMonomial, tau, sign: str = "+", p: int | None = None) -> MPoly:
    if p is None:
        p = 2 * sum(m.f) + (1 if m.kind == "A" else 3)
    F = BaseField(p)
    return restrict_form(m.realize(F.one), as_two_torsion(tau), sign, field=F)


@dataclass
class VerschiebungMap:
    p: int
    V: dict  # label -> MPoly in Y_NAMES
    coefficients: dict  # InvariantMonomial -> scalar

    @property
    def V00(self) -> MPoly:
        return self.V["00"]

    def forms(self) -> list[MPoly]:
        return [self.V[l] for l in ("00", "01", "10", "11")]

    def map_coeffs(self, fn) -> "VerschiebungMap":
        return VerschiebungMap(
            self.p,
            {l: f.map_coeffs(fn) for l, f in self.V.items()},
            {m: fn(c) for m, c in self.coefficients.items()},
        )


def assemble(p: int, coefficients: dict, field) -> VerschiebungMap:
    terms = {}
    for m, c in coefficients.items():
        if c:
            terms[m.exponent()] = c
    V00 = MPoly(4, terms, Y_NAMES)
    B = BaseField(p)
    V = {"00": V00}
    for x, label in ((1, "01"), (2, "10"), (3, "11")):
        V[label] = act_on_form(alpha_element(x, B), V00)
    return VerschiebungMap(p, V, dict(coefficients))


@lru_cache(maxsize=None)
def _restriction_table(p: int):
    """For each tau: {monomial index: {j: base-field coefficient of l0^(p-2j) l1^(2j)}}."""
    basis = invariant_basis(p)
    table = {}
    for tau in all_two_torsion():
        rows = {}
        for u, m in enumerate(basis):
            r = restriction_row(m, tau, "+", p)
            entry = {}
            for (i, j), c in r.terms.items():
                if j % 2:
                    raise InternalInconsistency("restriction of an invariant monomial has an odd l1 power")
                entry[j // 2] = c
            if entry:
                rows[u] = entry
        table[tau] = rows
    return basis, table


def linear_system(p: int, k: KummerCoeffs, q0: OmegaForm | None = None, scale=None):
    """Rows (dict col -> scalar) of the homogeneous system in the basis coefficients."""
    q0 = q0 or q0_in_omega(p)
    basis, table = _restriction_table(p)
    K = k.field
    rows = []
    labels = []
    for tau in all_two_torsion():
        w = omega(k, tau)
        q = q0.evaluate(w)
        if scale is not None:
            q = [c * scale for c in q]
        q_lead = q[0]
        entries = table[tau]
        for j in range(1, (p - 1) // 2 + 1):
            row = {}
            for u, entry in entries.items():
                c_j = entry.get(j)
                c_0 = entry.get(0)
                v = K.zero
                if c_j is not None:
                    v = v + K.from_base(c_j) * q_lead
                if c_0 is not None:
                    v = v - K.from_base(c_0) * q[j]
                if v:
                    row[u] = v
            rows.append(row)
            labels.append((str(tau), j))
    return basis, rows, labels


def build_and_solve(p: int, k: KummerCoeffs, q0: OmegaForm | None = None, scale=None) -> VerschiebungMap:
    check_characteristic(p)
    basis, rows, _ = linear_system(p, k, q0, scale)
    K = k.field
    lead = basis.index(leading_monomial(p))
    unknowns = [u for u in range(len(basis)) if u != lead]
    col_of = {u: c for c, u in enumerate(unknowns)}
    sys_rows, rhs = [], []
    for row in rows:
        r = {}
        b = K.zero
        for u, v in row.items():
            if u == lead:
                b = -v
            else:
                r[col_of[u]] = v
        sys_rows.append(r)
        rhs.append(b)
    sol = solve_unique(sys_rows, rhs, len(unknowns), K.zero)
    coefficients = {basis[lead]: K.one}
    for c, u in enumerate(unknowns):
        coefficients[basis[u]] = sol[c]
    for m, c in coefficients.items():
        if getattr(c, "has_i_part", lambda: False)():
            raise InternalInconsistency(f"coefficient {m.name} is not defined over F_p")
    return assemble(p, coefficients, K)


def is_hat_h_invariant(f: MPoly, p: int) -> bool:
    B = BaseField(p)
    return all(act_on_form(hat_h_element(xs, B), f) == f for xs in range(4))


# combinatorial kernel of the restriction map


def kernel_relations(r: int) -> tuple[list[tuple], list[dict]]:
    """The 6(r+1) parity-split sums on the unknowns a_f, |f| = r."""
    idx = multi_indices(r)
    col = {f: j for j, f in enumerate(idx)}
    rels = []
    for kk in range(r + 1):
        for pair_sum, parity_of in (
            (lambda f: f[0] + f[1], lambda f: f[1] + f[3]),
            (lambda f: f[0] + f[2], lambda f: f[2] + f[3]),
            (lambda f: f[0] + f[3], lambda f: f[2] + f[3]),
        ):
            for par in (0, 1):
                row = {col[f]: 1 for f in idx if pair_sum(f) == kk and parity_of(f) % 2 == par}
                rels.append(row)
    return idx, rels


def line_data_relations(r: int) -> list[dict]:
    """a_f = 0 whenever two of f01, f10, f11 vanish (forced by the x = 00 lines)."""
    idx = multi_indices(r)
    return [{j: 1} for j, f in enumerate(idx) if sum(1 for e in f[1:] if e == 0) >= 2]


def kernel_dimension(r: int, p: int = 3, with_line_data: bool = False) -> int:
    """Dimension of the space of a_f (|f| = r) killed by the parity relations.

    With ``with_line_data`` the single-monomial constraints coming from the
    x = 00 invariant lines are imposed as well.
    """
    idx, rels = kernel_relations(r)
    if with_line_data:
        rels = rels + line_data_relations(r)
    F = FiniteField(p, 1)
    rows = [{c: F(v) for c, v in row.items()} for row in rels]
    rk = row_reduce(rows, [F.zero] * len(rows), len(idx), F.zero).rank
    return len(idx) - rk


def first_noninjective_r(p: int = 3, limit: int = 12, with_line_data: bool = False) -> int | None:
    for r in range(limit + 1):
        if kernel_dimension(r, p, with_line_data) > 0:
            return r
    return None
