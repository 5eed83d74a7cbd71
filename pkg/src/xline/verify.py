"""Correctness harness: compressed formulas against full point arithmetic.

Exhaustive mode enumerates the curve and sweeps every point and every pair;
sampled mode draws seeded points at any field size. Degenerate inputs
(undefined compression values, (0:0) outputs, equal inputs where the formula
is singular, oracle exceptional inputs) are skipped and counted. Only a real
disagreement is a failure.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field

from .compression import (
    CompressedValue,
    SchemeDescriptor,
    compress,
    diff_add_mul,
    diff_add_sum,
    double_compressed,
    fiber,
)
from .curves import curve_to_json
from .errors import (
    ConfigError,
    DegenerateOutput,
    ExceptionalInput,
    FieldTooLarge,
    UndefinedAtPoint,
)
from .ladder import scalar_mul_compressed

SCHEMA = "xline.verification/1"
EXHAUSTIVE_LIMIT = 1 << 14
MAX_EXAMPLES = 5
LADDER_MAX_N = 64
LADDER_BASES = 16

@dataclass
class CheckResult:
    name: str
    pairs_tested: int = 0
    failures: int = 0
    skipped_degenerate: int = 0
    skip_bound: int | None = None
    examples: list = field(default_factory=list)
    note: str = ""

    def fail(self, msg):
        self.failures += 1
        if len(self.examples) < MAX_EXAMPLES:
            self.examples.append(msg)

    @property
    def passed(self):
        return self.failures == 0


@dataclass
class VerificationReport:
    scheme_id: str
    p: int
    curve: dict
    mode: str
    seed: int | None = None
    checks: list = field(default_factory=list)

    @property
    def verdict(self):
        return "pass" if all(c.passed for c in self.checks) else "fail"

    @property
    def passed(self):
        return self.verdict == "pass"

    def check(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self):
        return {
            "schema": SCHEMA,
            "scheme_id": self.scheme_id,
            "p": str(self.p),
            "curve": self.curve,
            "mode": self.mode,
            "seed": self.seed,
            "checks": [asdict(c) for c in self.checks],
            "verdict": self.verdict,
        }

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, doc):
        if doc.get("schema") != SCHEMA:
            raise ConfigError(f"not a verification report: schema {doc.get('schema')!r}")
        rep = cls(doc["scheme_id"], int(doc["p"]), doc["curve"], doc["mode"], doc.get("seed"))
        rep.checks = [CheckResult(**c) for c in doc["checks"]]
        return rep

    def table(self):
        lines = [f"{self.scheme_id} over p={self.p} ({self.mode}): {self.verdict}"]
        lines.append(f"  {'check':<14}{'tested':>10}{'failures':>10}{'skipped':>10}")
        for c in self.checks:
            lines.append(f"  {c.name:<14}{c.pairs_tested:>10}{c.failures:>10}{c.skipped_degenerate:>10}"
                         + (f"  {c.note}" if c.note else ""))
        return "\n".join(lines)


def _resolve(scheme, model):
    if isinstance(scheme, SchemeDescriptor):
        if model is not None and model != scheme.model:
            raise ConfigError("scheme descriptor is bound to a different curve")
        return scheme
    if model is None:
        raise ConfigError("a curve model is required with a scheme id")
    return SchemeDescriptor(scheme, model)


def _try_compress(S, P):
    try:
        return compress(S, P)
    except UndefinedAtPoint:
        return None


def _product(S, a, b):
    if a is None or b is None:
        return None
    X, Z = a.X * b.X % S.p, a.Z * b.Z % S.p
    if X == 0 and Z == 0:
        return None
    return CompressedValue(X, Z, S)


def _sum(S, a, b):
    if a is None or b is None:
        return None
    X, Z = (a.X * b.Z + b.X * a.Z) % S.p, a.Z * b.Z % S.p
    if X == 0 and Z == 0:
        return None
    return CompressedValue(X, Z, S)


def _apply_bound(check, bound):
    check.skip_bound = bound
    if check.skipped_degenerate > bound:
        check.fail(f"skipped {check.skipped_degenerate} inputs, above the bound {bound}")


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------


def _check_doubling(S, items, double_of, name):
    chk = CheckResult(name)
    for P, rP in items:
        if rP is None:
            chk.skipped_degenerate += 1
            continue
        try:
            want = _try_compress(S, double_of(P))
        except ExceptionalInput:
            want = None
        if want is None:
            chk.skipped_degenerate += 1
            continue
        try:
            got = double_compressed(S, rP)
        except DegenerateOutput:
            chk.skipped_degenerate += 1
            continue
        chk.pairs_tested += 1
        if got != want:
            chk.fail(f"P={P}: D({rP}) = {got}, expected {want}")
    return chk


def _check_pairs(S, pairs, name, kind):
    """pairs yields (P, Q, rP, rQ, r(P+Q), r(P-Q))."""
    chk = CheckResult(name)
    fn = diff_add_mul if kind == "A2" else diff_add_sum
    comb = _product if kind == "A2" else _sum
    for P, Q, rP, rQ, rs, rd in pairs:
        want = comb(S, rs, rd) if rP is not None and rQ is not None else None
        if want is None:
            chk.skipped_degenerate += 1
            continue
        try:
            got = fn(S, rP, rQ)
        except DegenerateOutput:
            chk.skipped_degenerate += 1
            continue
        chk.pairs_tested += 1
        if got != want:
            chk.fail(f"P={P}, Q={Q}: {kind} = {got}, expected {want}")
    return chk


def _check_fiber(S, items, preimage=None):
    chk = CheckResult("fiber")
    omega_missing = S.needs_omega and S.model.field.cube_root_of_unity() is None
    if omega_missing:
        chk.note = "p != 1 mod 3: only the omega-free part of each fiber is checked"
    for P, rP in items:
        if rP is None:
            chk.skipped_degenerate += 1
            continue
        try:
            F = fiber(S, P, require_omega=False)
        except UndefinedAtPoint:
            chk.skipped_degenerate += 1
            continue
        chk.pairs_tested += 1
        if P not in F:
            chk.fail(f"P={P} missing from its own fiber")
        if len(F) > S.degree:
            chk.fail(f"P={P}: fiber has {len(F)} > {S.degree} members")
        for Q in F:
            rQ = _try_compress(S, Q)
            if rQ != rP:
                chk.fail(f"P={P}: fiber member {Q} has f = {rQ}, expected {rP}")
                break
        if preimage is not None:
            pre = preimage[rP]
            if len(pre) > S.degree:
                chk.fail(f"value {rP} has {len(pre)} > {S.degree} preimages")
            if not F <= pre:
                chk.fail(f"P={P}: predicted fiber is not inside the preimage")
            elif len(F) == S.degree and pre != F:
                chk.fail(f"P={P}: full fiber of size {S.degree} differs from the preimage")
    return chk


def _check_ladder(S, cases):
    """cases yields (P, n, expected-point-or-None)."""
    chk = CheckResult("ladder")
    for P, n, R in cases:
        rP = _try_compress(S, P)
        want = _try_compress(S, R) if R is not None else None
        if rP is None or want is None:
            chk.skipped_degenerate += 1
            continue
        try:
            got = scalar_mul_compressed(S, rP, n)
        except DegenerateOutput:
            chk.skipped_degenerate += 1
            continue
        chk.pairs_tested += 1
        if got != want:
            chk.fail(f"P={P}, n={n}: ladder {got}, oracle {want}")
    return chk


# ---------------------------------------------------------------------------
# drivers
# ---------------------------------------------------------------------------


def _safe(fn, *args):
    try:
        return fn(*args)
    except ExceptionalInput:
        return None


def verify_scheme_exhaustive(scheme, model=None, ladder_bases=LADDER_BASES, seed=0):
    """Every point and every pair of a small curve."""
    S = _resolve(scheme, model)
    c = S.model
    if c.p > EXHAUSTIVE_LIMIT:
        raise FieldTooLarge(f"exhaustive verification needs p <= 2^14, got {c.p}")
    pts = c.enumerate_points()
    n_pts = len(pts)
    index = {P: i for i, P in enumerate(pts)}
    vals = [_try_compress(S, P) for P in pts]
    neg = [index[c.negate(P)] for P in pts]
    # sum table through the oracle; None marks an exceptional pair
    add = [[None] * n_pts for _ in range(n_pts)]
    for i, P in enumerate(pts):
        for j in range(i, n_pts):
            R = _safe(c.add, P, pts[j])
            add[i][j] = add[j][i] = None if R is None else index[R]

    rep = VerificationReport(S.scheme_id, c.p, curve_to_json(c), "exhaustive", seed)

    closure = CheckResult("closure")
    for i in range(n_pts):
        for j in range(n_pts):
            if add[i][j] is None:
                closure.skipped_degenerate += 1
            else:
                closure.pairs_tested += 1
    rep.checks.append(closure)

    preimage = {}
    for P, v in zip(pts, vals):
        if v is not None:
            preimage.setdefault(v, set()).add(P)
    items = list(zip(pts, vals))
    rep.checks.append(_check_fiber(S, items, preimage))

    labels = S.labels
    rep.checks.append(_check_doubling(S, items, lambda P: pts[add[index[P]][index[P]]]
                                      if add[index[P]][index[P]] is not None else c.double(P), labels["D"]))

    def pairs():
        for i, P in enumerate(pts):
            for j, Q in enumerate(pts):
                s, d = add[i][j], add[i][neg[j]]
                yield (P, Q, vals[i], vals[j],
                       vals[s] if s is not None else None, vals[d] if d is not None else None)

    rep.checks.append(_check_pairs(S, pairs(), labels["A2"], "A2"))
    if S.has_a1:
        rep.checks.append(_check_pairs(S, pairs(), labels["A1"], "A1"))

    order = n_pts
    rng = random.Random(f"ladder:{seed}")
    bases = [P for P, v in zip(pts, vals) if v is not None]
    rng.shuffle(bases)
    cases = []
    used = 0
    for P in bases:
        if used >= ladder_bases:
            break
        k = _safe(c.point_order, P, order)
        if k is None or k <= 4 * S.degree:
            continue
        used += 1
        R = P
        for n in range(1, min(k, LADDER_MAX_N)):
            cases.append((P, n, R))
            R = _safe(c.add, R, P)
            if R is None:  # the oracle itself has no law here
                break
    lad = _check_ladder(S, cases)
    if used == 0:
        lad.note = f"no base point of order > {4 * S.degree}"
    rep.checks.append(lad)

    for chk in rep.checks:
        bound = (S.degree + 4) * n_pts
        if chk.name in (labels["A2"], labels.get("A1"), "closure"):
            # pair sweeps: the degenerate set is a union of O(degree) curves
            bound *= S.degree + 4
        _apply_bound(chk, bound)
    return rep


def verify_scheme_sampled(scheme, model=None, trials=1000, seed=0, max_scalar=1 << 32):
    """Seeded random points, pairs and scalars at any field size."""
    S = _resolve(scheme, model)
    if isinstance(trials, bool) or not isinstance(trials, int) or trials < 1:
        raise ConfigError(f"trials must be a positive integer, got {trials!r}")
    c = S.model
    rng = random.Random(f"sampled:{S.scheme_id}:{c.p}:{seed}")
    rep = VerificationReport(S.scheme_id, c.p, curve_to_json(c), "sampled", seed)
    Ps = [c.sample_point(rng=rng) for _ in range(trials)]
    Qs = [c.sample_point(rng=rng) for _ in range(trials)]
    ns = [rng.randrange(1, max_scalar) for _ in range(trials)]
    vP = [_try_compress(S, P) for P in Ps]
    vQ = [_try_compress(S, Q) for Q in Qs]
    items = list(zip(Ps, vP))

    rep.checks.append(_check_fiber(S, items))
    labels = S.labels
    rep.checks.append(_check_doubling(S, items, c.double, labels["D"]))

    sums = [_safe(c.add, P, Q) for P, Q in zip(Ps, Qs)]
    difs = [_safe(c.add, P, c.negate(Q)) for P, Q in zip(Ps, Qs)]

    def pairs():
        for P, Q, a, b, s, d in zip(Ps, Qs, vP, vQ, sums, difs):
            yield (P, Q, a, b, _try_compress(S, s) if s else None, _try_compress(S, d) if d else None)

    rep.checks.append(_check_pairs(S, pairs(), labels["A2"], "A2"))
    if S.has_a1:
        rep.checks.append(_check_pairs(S, pairs(), labels["A1"], "A1"))
    rep.checks.append(_check_ladder(S, ((P, n, _safe(c.scalar_mul, P, n)) for P, n in zip(Ps, ns))))
    for chk in rep.checks:
        # a handful of unlucky samples is expected; most must be usable
        _apply_bound(chk, max(trials // 10, 5))
    return rep


def verify(scheme, model=None, trials=1000, seed=0, exhaustive_limit=512):
    """Exhaustive for small p, sampled otherwise."""
    S = _resolve(scheme, model)
    if S.p <= exhaustive_limit:
        return verify_scheme_exhaustive(S, seed=seed)
    return verify_scheme_sampled(S, trials=trials, seed=seed)


__all__ = [
    "CheckResult", "VerificationReport", "verify", "verify_scheme_exhaustive",
    "verify_scheme_sampled",
]
