"""Formula discovery by evaluation and nullspace solving.

For a curve family, a compression function ``f`` and a formula kind, the
unknown numerator/denominator coefficients enter linearly in

    target * Den(f(P), f(Q)) - Num(f(P), f(Q)) = 0

so every sampled configuration gives one linear row. Each row uses a fresh
random curve, and every unknown is an (r-monomial, constant-monomial) pair,
which makes the solution an identity in the curve coefficients rather than a
fit to one curve. The system is solved over a 61-bit prime and the nullspace
vector is mapped back to small rationals.
"""

from __future__ import annotations

import itertools
import json
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .curves import GeneralizedHessian, Huff, Montgomery, TwistedEdwards
from .errors import (
    ConfigError,
    DegenerateSampleBudgetExceeded,
    ExceptionalInput,
    NotFound,
    SamplingFailed,
)
from .formulas import KINDS, CandidateFormula, _eval_r, const_poly_value

log = logging.getLogger(__name__)

P61 = (1 << 61) - 1
OVERSAMPLE = 2
MAX_D_BOUND = 10  # doubling bound escalation 1..10
MAX_PAIR_BOUND = 4  # pair formulas default to 4
MAX_CONST_DEGREE = 5
VALIDATION_TRIALS = 1000
VALIDATION_CURVES = 3

KIND_ALIASES = {"dbl": "D", "d": "D", "double": "D", "mul": "A2", "a2": "A2", "prod": "A2",
                "sum": "A1", "a1": "A1"}

# Compression functions as expressions in x, y, one per scheme id.
SCHEME_F = {
    "ed2": "y",
    "ed4": "y^2",
    "ed8": "x^2*y^2",
    "gh2": "x+y",
    "gh6": "x*y",
    "h18": "(x^3*y^3+x^3+y^3)/(x^2*y^2)",
    "hu2": "x*y",
    "hu4": "x*y+1/(x*y)",
    "hu8": "(x^2-1)*(y^2-1)/(x*y)",
    "hu16": "(x^2-1)*(y^2-1)/(x*y)+16*x*y/((x^2-1)*(y^2-1))",
    "mont2": "x",
}


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Family:
    name: str
    constants: tuple
    homogeneous: bool  # constant monomials of exact degree c instead of <= c

    def random_curve(self, p, rng):
        raise NotImplementedError

    def const_values(self, curve):
        return tuple(getattr(curve, n) for n in self.constants)

    def const_monomials(self, c):
        k = len(self.constants)
        if self.homogeneous:
            return [e for e in itertools.product(range(c + 1), repeat=k) if sum(e) == c]
        return sorted(
            (e for e in itertools.product(range(c + 1), repeat=k) if sum(e) <= c),
            key=lambda e: (sum(e), e),
        )


class _Edwards(Family):
    def random_curve(self, p, rng):
        while True:
            a, d = rng.randrange(1, p), rng.randrange(1, p)
            if a != d:
                return TwistedEdwards(p, a=a, d=d)


class _GH(Family):
    def random_curve(self, p, rng):
        while True:
            a, d = rng.randrange(1, p), rng.randrange(p)
            if (d ** 3 - 27 * a) % p:
                return GeneralizedHessian(p, a=a, d=d)


class _Hessian(Family):
    def random_curve(self, p, rng):
        while True:
            d = rng.randrange(p)
            if (d ** 3 - 27) % p:
                return GeneralizedHessian(p, a=1, d=d)

    def const_values(self, curve):
        return (curve.d,)


class _Huff(Family):
    def random_curve(self, p, rng):
        while True:
            a, b = rng.randrange(1, p), rng.randrange(1, p)
            if (a * a - b * b) % p:
                return Huff(p, a=a, b=b)


class _Mont(Family):
    def random_curve(self, p, rng):
        while True:
            A, B = rng.randrange(p), rng.randrange(1, p)
            if (A * A - 4) % p:
                return Montgomery(p, A=A, B=B)


FAMILIES = {
    "edwards": _Edwards("edwards", ("a", "d"), False),
    "gh": _GH("gh", ("a", "d"), False),
    "hessian": _Hessian("hessian", ("d",), False),
    "huff": _Huff("huff", ("a", "b"), True),
    "mont": _Mont("mont", ("A", "B"), False),
}
FAMILY_ALIASES = {
    "ed": "edwards", "twisted_edwards": "edwards", "generalized_hessian": "gh",
    "h": "hessian", "hu": "huff", "montgomery": "mont",
}

# which family each scheme belongs to
SCHEME_FAMILY = {
    "ed2": "edwards", "ed4": "edwards", "ed8": "edwards", "gh2": "gh", "gh6": "gh",
    "h18": "hessian", "hu2": "huff", "hu4": "huff", "hu8": "huff", "hu16": "huff",
    "mont2": "mont",
}


def get_family(name):
    key = str(name).lower()
    key = FAMILY_ALIASES.get(key, key)
    try:
        return FAMILIES[key]
    except KeyError:
        raise ConfigError(f"unknown family {name!r}; expected one of {sorted(FAMILIES)}") from None


def normalize_kind(kind):
    k = str(kind)
    if k in KINDS:
        return k
    try:
        return KIND_ALIASES[k.lower()]
    except KeyError:
        raise ConfigError(f"unknown formula kind {kind!r}; use D/dbl, A2/mul or A1/sum") from None


# ---------------------------------------------------------------------------
# compression-function expressions
# ---------------------------------------------------------------------------


class Expression:
    """A rational function of x, y (and curve constants) evaluated mod p.

    Parsed with sympy; implicit multiplication is accepted, so ``xy`` means
    ``x*y``.
    """

    def __init__(self, text, constants=()):
        import sympy
        from sympy.parsing.sympy_parser import (
            convert_xor,
            implicit_multiplication_application,
            parse_expr,
            standard_transformations,
        )

        self.text = text
        names = ("x", "y") + tuple(constants)
        syms = sympy.symbols(names)
        local = dict(zip(names, syms))
        tf = standard_transformations + (convert_xor, implicit_multiplication_application)
        try:
            expr = parse_expr(str(text), local_dict=local, transformations=tf)
        except (SyntaxError, TypeError, sympy.SympifyError) as exc:
            raise ConfigError(f"cannot parse compression function {text!r}: {exc}") from None
        extra = expr.free_symbols - set(syms)
        if extra:
            raise ConfigError(f"unknown symbol(s) {sorted(map(str, extra))} in {text!r}")
        num, den = sympy.fraction(sympy.together(expr))
        self.num = _poly_terms(num, syms)
        self.den = _poly_terms(den, syms)
        self.n_const = len(constants)

    def __call__(self, x, y, consts, p):
        """f(x, y) modulo p, or None where the denominator vanishes."""
        vals = (x, y) + tuple(consts)
        d = _eval_terms(self.den, vals, p)
        if d == 0:
            return None
        return _eval_terms(self.num, vals, p) * pow(d, -1, p) % p

    def at(self, P, consts):
        if P.Z == 0:
            return None
        x, y = P.xy
        return self(x, y, consts, P.curve.p)


def _poly_terms(expr, syms):
    import sympy

    poly = sympy.Poly(sympy.expand(expr), *syms)
    return [(m, Fraction(int(c.p), int(c.q))) for m, c in poly.terms()]


def _eval_terms(terms, vals, p):
    total = 0
    for exps, c in terms:
        t = c.numerator * pow(c.denominator, -1, p)
        for v, e in zip(vals, exps):
            if e:
                t = t * pow(v, e, p)
        total += t
    return total % p


def resolve_f(f):
    """Accept a scheme id (``hu16``) or a literal expression."""
    return SCHEME_F.get(str(f).lower(), str(f))


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------


@dataclass
class Sample:
    consts: tuple
    rs: tuple
    target: int


class SamplePool:
    """Lazily grown list of (curve constants, f-values, target) samples.

    Systems at different bounds draw from the same pool, so escalation does
    not pay for resampling.
    """

    def __init__(self, family, expr, kind, p=P61, seed=0, degenerate_budget=None):
        self.family, self.expr, self.kind, self.p = family, expr, kind, p
        self.rng = random.Random(f"pool:{family.name}:{expr.text}:{kind}:{seed}")
        self.samples = []
        self.skipped = 0
        self.degenerate_budget = degenerate_budget

    def _one(self):
        fam, ex, p = self.family, self.expr, self.p
        curve = fam.random_curve(p, self.rng)
        consts = fam.const_values(curve)
        P = curve.sample_point(rng=self.rng)
        rP = ex.at(P, consts)
        if rP is None:
            return None
        if self.kind == "D":
            T = ex.at(curve.double(P), consts)
            return None if T is None else Sample(consts, (rP,), T)
        Q = curve.sample_point(rng=self.rng)
        rQ = ex.at(Q, consts)
        if rQ is None:
            return None
        s, d = ex.at(curve.add(P, Q), consts), ex.at(curve.add(P, curve.negate(Q)), consts)
        if s is None or d is None:
            return None
        T = s * d % p if self.kind == "A2" else (s + d) % p
        return Sample(consts, (rP, rQ), T)

    def take(self, n):
        budget = self.degenerate_budget if self.degenerate_budget is not None else 10 * n + 100
        while len(self.samples) < n:
            try:
                s = self._one()
            except (ExceptionalInput, SamplingFailed):
                s = None
            if s is None:
                self.skipped += 1
                if self.skipped > budget:
                    raise DegenerateSampleBudgetExceeded(
                        f"{self.skipped} degenerate samples while collecting {n} rows"
                    )
                continue
            self.samples.append(s)
        return self.samples[:n]


# ---------------------------------------------------------------------------
# linear system
# ---------------------------------------------------------------------------


@dataclass
class LinearSystem:
    kind: str
    bounds: tuple
    const_degree: int
    family: Family
    columns: list  # (part, r_exps, const_exps)
    rows: list = field(default_factory=list)
    p: int = P61
    f: str = ""

    @property
    def n_unknowns(self):
        return len(self.columns)


def r_monomials(kind, bound):
    if kind == "D":
        return [(i,) for i in range(bound + 1)]
    return [(i, j) for i in range(bound + 1) for j in range(bound + 1)]


def make_columns(family, kind, bounds, const_degree):
    cm = family.const_monomials(const_degree)
    cols = []
    for part, b in (("num", bounds[0]), ("den", bounds[1])):
        for re in r_monomials(kind, b):
            for ce in cm:
                cols.append((part, re, ce))
    return cols


def build_system(family, f, kind, bounds, const_degree=0, samples=None, seed=0, p=P61, pool=None):
    """Rows ``target * Den - Num`` at sampled configurations."""
    fam = family if isinstance(family, Family) else get_family(family)
    kind = normalize_kind(kind)
    cols = make_columns(fam, kind, bounds, const_degree)
    need = OVERSAMPLE * len(cols)
    if samples is None:
        samples = need
    if samples < need:
        raise ConfigError(f"{samples} samples is below the required {need} (2x the {len(cols)} unknowns)")
    if pool is None:
        expr = f if isinstance(f, Expression) else Expression(resolve_f(f), fam.constants)
        pool = SamplePool(fam, expr, kind, p=p, seed=seed)
    rows = []
    for s in pool.take(samples):
        row = []
        for part, re, ce in cols:
            v = 1
            for r, e in zip(s.rs, re):
                if e:
                    v = v * pow(r, e, p)
            for c, e in zip(s.consts, ce):
                if e:
                    v = v * pow(c, e, p)
            row.append(v * s.target % p if part == "den" else -v % p)
        rows.append(row)
    return LinearSystem(kind, tuple(bounds), const_degree, fam, cols, rows, p, pool.expr.text)


def nullspace_mod_p(rows, n, p):
    """Basis of {v : M v = 0} over F_p by Gauss-Jordan elimination."""
    m = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        inv = pow(pr[col], -1, p)
        pr = m[rank] = [v * inv % p for v in pr]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                c = m[i][col]
                m[i] = [(a - c * b) % p for a, b in zip(m[i], pr)]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc] % p
        basis.append(v)
    return basis


def rational_reconstruct(a, p):
    """Smallest n/d with n = a*d mod p and |n|, d < sqrt(p/2), or None."""
    a %= p
    if a == 0:
        return Fraction(0)
    bound = int((p // 2) ** 0.5)
    r0, r1, s0, s1 = p, a, 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    return Fraction(r1, s1)


def vector_to_candidate(system, vec):
    """Normalise (first nonzero entry 1), lift to Q, and wrap as a formula."""
    p = system.p
    lead = next(v for v in vec if v)
    inv = pow(lead, -1, p)
    num, den = {}, {}
    for (part, re, ce), v in zip(system.columns, vec):
        v = v * inv % p
        if not v:
            continue
        q = rational_reconstruct(v, p)
        if q is None:
            return None
        target = num if part == "num" else den
        target.setdefault(re, {})[ce] = q
    return CandidateFormula(
        kind=system.kind,
        bounds=system.bounds,
        constants=system.family.constants,
        numerator=num,
        denominator=den,
        family=system.family.name,
        f=system.f,
    )


def solve_nullspace(system):
    """Nullspace basis as normalised CandidateFormulas (empty if trivial)."""
    basis = nullspace_mod_p(system.rows, system.n_unknowns, system.p)
    out = []
    for vec in basis:
        c = vector_to_candidate(system, vec)
        if c is not None:
            out.append(c)
    return out


# ---------------------------------------------------------------------------
# validation and discovery
# ---------------------------------------------------------------------------


def validate_candidate(candidate, family=None, f=None, trials=VALIDATION_TRIALS,
                       curves=VALIDATION_CURVES, seed=7919, p=P61):
    """Check the identity on fresh curves; False on any mismatch.

    ``curves`` is a count of fresh random curves or an explicit list of
    curve models. A denominator that is identically zero is rejected
    without sampling.
    """
    if candidate.is_zero("denominator"):
        return False
    if trials < 1:
        raise ConfigError("trials must be >= 1")
    fam = get_family(family or candidate.family)
    expr = Expression(resolve_f(f or candidate.f), fam.constants)
    rng = random.Random(f"validate:{seed}")
    if isinstance(curves, int):
        models = [fam.random_curve(p, rng) for _ in range(curves)]
    else:
        models = list(curves)
    per_curve = max(1, trials // len(models))
    checked = 0
    for curve in models:
        q = curve.p
        consts = fam.const_values(curve)
        num, den = candidate.r_coefficients(consts, q)
        done = attempts = 0
        while done < per_curve and attempts < 20 * per_curve:
            attempts += 1
            try:
                P = curve.sample_point(rng=rng)
                rP = expr.at(P, consts)
                if rP is None:
                    continue
                if candidate.kind == "D":
                    target, rs = expr.at(curve.double(P), consts), (rP,)
                else:
                    Q = curve.sample_point(rng=rng)
                    rQ = expr.at(Q, consts)
                    if rQ is None:
                        continue
                    s = expr.at(curve.add(P, Q), consts)
                    d = expr.at(curve.add(P, curve.negate(Q)), consts)
                    if s is None or d is None:
                        continue
                    target = s * d % q if candidate.kind == "A2" else (s + d) % q
                    rs = (rP, rQ)
            except (ExceptionalInput, SamplingFailed):
                continue
            if target is None:
                continue
            N, D = _eval_r(num, rs, q), _eval_r(den, rs, q)
            if D == 0 and N == 0:
                continue
            if (target * D - N) % q:
                return False
            done += 1
        checked += done
    return checked > 0


def _bound_schedule(kind, max_bound):
    if kind == "D":
        return [(d, d) for d in range(1, (max_bound or MAX_D_BOUND) + 1)]
    return [(k, k) for k in range(1, (max_bound or MAX_PAIR_BOUND) + 1)]


def discover(family, f, kind, max_bound=None, max_const_degree=MAX_CONST_DEGREE, seed=0,
             p=P61, validate_trials=VALIDATION_TRIALS):
    """Smallest-bound validated formula for (family, f, kind).

    Bounds escalate over (d, d); inside each bound the constant degree
    escalates from 0, so the first hit has minimal r-degree and then minimal
    constant degree.
    """
    fam = get_family(family)
    kind = normalize_kind(kind)
    text = resolve_f(f)
    expr = Expression(text, fam.constants)
    pool = SamplePool(fam, expr, kind, p=p, seed=seed)
    const_range = range(0 if not fam.homogeneous else 0, max_const_degree + 1)
    for bounds in _bound_schedule(kind, max_bound):
        for c in const_range:
            system = build_system(fam, expr, kind, bounds, c, p=p, pool=pool)
            cands = solve_nullspace(system)
            log.debug("bounds %s const degree %d: nullspace %d", bounds, c, len(cands))
            if not cands:
                continue
            for cand in cands:
                if validate_candidate(cand, fam.name, text, trials=validate_trials, seed=seed + 1):
                    return cand
    raise NotFound(
        f"no {kind} formula for f = {text} on {fam.name} within bounds "
        f"{_bound_schedule(kind, max_bound)[-1]} and constant degree {max_const_degree}",
        max_bound_reached=True,
    )


def discover_scheme(scheme_id, kind, **kw):
    sid = str(scheme_id).lower()
    if sid not in SCHEME_FAMILY:
        raise ConfigError(f"unknown scheme {scheme_id!r}")
    return discover(SCHEME_FAMILY[sid], SCHEME_F[sid], kind, **kw)


# ---------------------------------------------------------------------------
# comparison against a reference rational function
# ---------------------------------------------------------------------------


def projectively_equal(c1, c2):
    """N1*D2 == N2*D1 as polynomials over Q(constants)."""
    import sympy

    n1, d1 = c1.as_sympy()
    n2, d2 = _as_sympy_pair(c2, c1)
    return sympy.expand(n1 * d2 - n2 * d1) == 0


def _as_sympy_pair(ref, like):
    if isinstance(ref, CandidateFormula):
        return ref.as_sympy()
    import sympy

    names = ("r",) if like.arity == 1 else ("rP", "rQ")
    local = {n: sympy.Symbol(n) for n in names + tuple(like.constants)}
    n, d = ref
    return sympy.sympify(n, locals=local), sympy.sympify(d, locals=local)


def derive_stored(seed=0):
    """Recompute the frozen doubling formulas kept in data/derived_formulas.json."""
    return {
        "ed8": discover("edwards", SCHEME_F["ed8"], "D", seed=seed),
        "hu16": discover("huff", SCHEME_F["hu16"], "D", seed=seed),
    }


def write_stored(path, formulas):
    doc = {k: v.to_json() for k, v in formulas.items()}
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def formula_value(candidate, rs, curve, family=None):
    """Evaluate a candidate on one curve at affine r value(s); None at a pole."""
    fam = get_family(family or candidate.family)
    consts = fam.const_values(curve)
    N = sum(
        const_poly_value(poly, consts, curve.p) * _eval_r({e: 1}, rs, curve.p)
        for e, poly in candidate.numerator.items()
    ) % curve.p
    D = sum(
        const_poly_value(poly, consts, curve.p) * _eval_r({e: 1}, rs, curve.p)
        for e, poly in candidate.denominator.items()
    ) % curve.p
    if D == 0:
        return None
    return N * pow(D, -1, curve.p) % curve.p
