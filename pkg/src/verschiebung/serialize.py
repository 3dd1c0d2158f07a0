"""Canonical JSON documents for polynomials with Kummer-field coefficients.

A coefficient c0 + c1*k00 is written over a common denominator as
{"num0", "num1", "den"}, each a list of [exponents, residue] pairs in
(k01, k10, k11), graded-lex descending, with ``den`` monic.  Equal inputs give
byte-identical output, so the sha256 of the canonical dump pins a result.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .errors import FormatError
from .mpoly import MPoly, grlex_key
from .scalarfield.kummerfield import COEFF_NAMES, KummerField, KummerScalar

FORMAT_VERSION = 1
FORMAT_NAME = "verschiebung-polynomial"


def _poly_terms(poly) -> list:
    items = [(tuple(int(x) for x in e), int(c)) for e, c in poly.to_dict().items() if int(c)]
    items.sort(key=lambda t: grlex_key(t[0]), reverse=True)
    return [[list(e), c] for e, c in items]


def _poly_from_terms(rf, terms):
    p = rf.p
    d = {}
    for e, c in terms:
        if len(e) != rf.nvars:
            raise FormatError(f"exponent vector {e} has the wrong length")
        if not 0 < c < p:
            raise FormatError(f"coefficient {c} is not a nonzero residue mod {p}")
        d[tuple(e)] = c
    return rf.ctx.from_dict(d)


def encode_scalar(s: KummerScalar) -> dict:
    if s.has_i_part():
        raise FormatError("coefficient involves sqrt(-1); only i-free values are serialized")
    c0, c1 = s.c0, s.c1
    g = c0.den.gcd(c1.den)
    den = (c0.den / g) * c1.den
    lc = int(den.leading_coefficient())
    if lc != 1:
        den = den * pow(lc, -1, s.field.p)
    num0 = c0.n0 * (den / c0.den)
    num1 = c1.n0 * (den / c1.den)
    return {"num0": _poly_terms(num0), "num1": _poly_terms(num1), "den": _poly_terms(den)}


def decode_scalar(K: KummerField, data: dict) -> KummerScalar:
    try:
        num0, num1, den = data["num0"], data["num1"], data["den"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed coefficient {data!r}") from exc
    rf = K.rf
    d = _poly_from_terms(rf, den)
    if d.is_zero():
        raise FormatError("zero denominator")
    if int(d.leading_coefficient()) != 1:
        raise FormatError("denominator is not monic")
    c0 = rf.from_polys(_poly_from_terms(rf, num0), d)
    c1 = rf.from_polys(_poly_from_terms(rf, num1), d)
    return KummerScalar(K, c0, c1)


@dataclass(frozen=True)
class PolynomialDocument:
    """One polynomial in named variables with Kummer-field coefficients."""

    p: int
    variables: tuple[str, ...]
    terms: tuple  # ((exponent tuple, KummerScalar), ...) graded-lex descending

    @classmethod
    def from_mpoly(cls, f: MPoly, p: int) -> "PolynomialDocument":
        return cls(p, tuple(f.names), tuple(f.sorted_terms()))

    def to_mpoly(self) -> MPoly:
        return MPoly(len(self.variables), dict(self.terms), self.variables)

    def to_json_obj(self) -> dict:
        return {
            "format": FORMAT_NAME,
            "version": FORMAT_VERSION,
            "p": self.p,
            "variables": list(self.variables),
            "coefficient_variables": list(COEFF_NAMES),
            "terms": [[list(e), encode_scalar(c)] for e, c in self.terms],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PolynomialDocument":
        if obj.get("format") != FORMAT_NAME or obj.get("version") != FORMAT_VERSION:
            raise FormatError("unknown document format or version")
        if list(obj.get("coefficient_variables", [])) != list(COEFF_NAMES):
            raise FormatError("unexpected coefficient variables")
        p = int(obj["p"])
        K = KummerField(p)
        variables = tuple(obj["variables"])
        terms = []
        for e, c in obj["terms"]:
            if len(e) != len(variables):
                raise FormatError(f"exponent vector {e} has the wrong length")
            terms.append((tuple(int(x) for x in e), decode_scalar(K, c)))
        keys = [grlex_key(e) for e, _ in terms]
        if keys != sorted(keys, reverse=True) or len(set(keys)) != len(keys):
            raise FormatError("terms are not in strictly descending graded-lex order")
        return cls(p, variables, tuple(terms))


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def digest(obj) -> str:
    return hashlib.sha256(dumps_canonical(obj).encode()).hexdigest()


def map_to_json_obj(V) -> dict:
    """All four forms of a VerschiebungMap, keyed V00..V11."""
    return {
        "format": FORMAT_NAME + "-map",
        "version": FORMAT_VERSION,
        "p": V.p,
        "forms": {f"V{label}": PolynomialDocument.from_mpoly(V.V[label], V.p).to_json_obj() for label in sorted(V.V)},
    }


def map_from_json_obj(obj: dict) -> dict[str, MPoly]:
    if obj.get("format") != FORMAT_NAME + "-map" or obj.get("version") != FORMAT_VERSION:
        raise FormatError("unknown map document format or version")
    return {name: PolynomialDocument.from_json_obj(doc).to_mpoly() for name, doc in obj["forms"].items()}


def map_to_text(V) -> str:
    lines = [f"# p = {V.p}; coefficients in F_{V.p}(k01,k10,k11)[k00], k00^2 = k01^2+k10^2+k11^2-k01*k10*k11-4"]
    for label in sorted(V.V):
        lines.append(f"V{label} = {V.V[label].to_str(repr)}")
    lines.append("")
    for m, c in sorted(V.coefficients.items(), key=lambda t: (t[0].kind, t[0].name)):
        lines.append(f"{m.name} = {c!r}")
    return "\n".join(lines) + "\n"


__all__ = [
    "PolynomialDocument",
    "decode_scalar",
    "digest",
    "dumps_canonical",
    "encode_scalar",
    "map_from_json_obj",
    "map_to_json_obj",
    "map_to_text",
]
