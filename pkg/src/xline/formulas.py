"""Rational-function formulas with curve-constant coefficients.

A formula is ``Num / Den`` where both are polynomials in the compressed
value(s) ``r`` (kind ``D``) or ``rP, rQ`` (kinds ``A1``/``A2``), and every
coefficient is itself a polynomial in the curve constants with rational
coefficients. This is the exchange format between the search engine, the
stored derived constants and the compression module.

JSON layout::

    {"kind": "D", "family": "edwards", "f": "x^2*y^2", "bounds": [4, 4],
     "constants": ["a", "d"],
     "numerator":   [[{"d^2": "1", "a": "-4"}, [3]], ...],
     "denominator": [[{"1": "1/4"}, [0]], ...]}

Each term pairs a constant polynomial (monomial string -> rational string)
with the exponent list of the ``r`` monomial.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .errors import ConfigError, DivisionByZero

KINDS = ("D", "A1", "A2")


def monomial_str(names, exps):
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def parse_monomial(names, text):
    exps = [0] * len(names)
    if text.strip() == "1":
        return tuple(exps)
    for factor in text.split("*"):
        base, _, power = factor.strip().partition("^")
        try:
            idx = names.index(base)
        except ValueError:
            raise ConfigError(f"unknown constant {base!r} in monomial {text!r}") from None
        exps[idx] += int(power) if power else 1
    return tuple(exps)


def const_poly_value(poly, values, p):
    """Evaluate {const exponents: Fraction} at ``values`` modulo p."""
    total = 0
    for exps, coeff in poly.items():
        den = coeff.denominator % p
        if den == 0:
            raise DivisionByZero(f"coefficient {coeff} has denominator divisible by {p}")
        term = coeff.numerator * pow(den, -1, p)
        for v, e in zip(values, exps):
            term = term * pow(v, e, p)
        total += term
    return total % p


@dataclass
class CandidateFormula:
    """``numerator``/``denominator`` map r-exponents to constant polynomials."""

    kind: str
    bounds: tuple
    constants: tuple
    numerator: dict = field(default_factory=dict)
    denominator: dict = field(default_factory=dict)
    family: str = ""
    f: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(f"formula kind must be one of {KINDS}, got {self.kind!r}")
        self.bounds = tuple(self.bounds)
        self.constants = tuple(self.constants)

    @property
    def arity(self):
        return 1 if self.kind == "D" else 2

    def is_zero(self, part):
        return not any(c for poly in getattr(self, part).values() for c in poly.values())

    def r_coefficients(self, const_values, p):
        """Specialise to one curve: ({r exps: int}, {r exps: int}) modulo p."""
        num = {e: const_poly_value(poly, const_values, p) for e, poly in self.numerator.items()}
        den = {e: const_poly_value(poly, const_values, p) for e, poly in self.denominator.items()}
        return num, den

    def evaluate(self, rs, const_values, p):
        """(Num, Den) at affine r value(s) ``rs`` modulo p."""
        num, den = self.r_coefficients(const_values, p)
        return _eval_r(num, rs, p), _eval_r(den, rs, p)

    # -- serialisation -------------------------------------------------------

    def _terms_json(self, part):
        out = []
        for exps in sorted(part):
            poly = part[exps]
            cp = {monomial_str(self.constants, ce): str(c) for ce, c in sorted(poly.items()) if c}
            if cp:
                out.append([cp, list(exps)])
        return out

    def to_json(self):
        return {
            "kind": self.kind,
            "family": self.family,
            "f": self.f,
            "bounds": list(self.bounds),
            "constants": list(self.constants),
            "numerator": self._terms_json(self.numerator),
            "denominator": self._terms_json(self.denominator),
        }

    @classmethod
    def from_json(cls, doc):
        names = tuple(doc["constants"])

        def terms(items):
            part = {}
            for cp, exps in items:
                poly = {parse_monomial(names, m): Fraction(c) for m, c in cp.items()}
                part[tuple(exps)] = poly
            return part

        return cls(
            kind=doc["kind"],
            bounds=tuple(doc["bounds"]),
            constants=names,
            numerator=terms(doc["numerator"]),
            denominator=terms(doc["denominator"]),
            family=doc.get("family", ""),
            f=doc.get("f", ""),
        )

    def pretty(self):
        rv = ("r",) if self.arity == 1 else ("rP", "rQ")

        def part(p):
            terms = []
            for exps in sorted(p, reverse=True):
                poly = p[exps]
                cs = " + ".join(
                    f"{c}*{monomial_str(self.constants, ce)}" if any(ce) else str(c)
                    for ce, c in sorted(poly.items())
                    if c
                )
                if cs:
                    terms.append(f"({cs})*{monomial_str(rv, exps)}" if any(exps) else f"({cs})")
            return " + ".join(terms) or "0"

        return f"{self.kind}: [{part(self.numerator)}] / [{part(self.denominator)}]"

    def as_sympy(self):
        """(numerator, denominator) as sympy expressions in r/rP,rQ and constants."""
        import sympy

        rv = sympy.symbols("r") if self.arity == 1 else sympy.symbols("rP rQ")
        rv = (rv,) if self.arity == 1 else rv
        cs = sympy.symbols(" ".join(self.constants)) if self.constants else ()
        cs = (cs,) if len(self.constants) == 1 else tuple(cs)

        def build(part):
            expr = sympy.Integer(0)
            for exps, poly in part.items():
                c = sum(
                    (sympy.Rational(v.numerator, v.denominator) * sympy.Mul(*[s ** e for s, e in zip(cs, ce)])
                     for ce, v in poly.items()),
                    sympy.Integer(0),
                )
                expr += c * sympy.Mul(*[s ** e for s, e in zip(rv, exps)])
            return sympy.expand(expr)

        return build(self.numerator), build(self.denominator)


def _eval_r(coeffs, rs, p):
    total = 0
    for exps, c in coeffs.items():
        if c:
            term = c
            for r, e in zip(rs, exps):
                term = term * pow(r, e, p)
            total += term
    return total % p


DERIVED_RESOURCE = "derived_formulas.json"


def load_derived(name=None):
    """Stored oracle-derived formulas (all, or the entry for scheme ``name``)."""
    text = resources.files("xline.data").joinpath(DERIVED_RESOURCE).read_text()
    doc = json.loads(text)
    if name is None:
        return {k: CandidateFormula.from_json(v) for k, v in doc.items()}
    try:
        return CandidateFormula.from_json(doc[name])
    except KeyError:
        raise ConfigError(f"no derived formula stored for {name!r}") from None
