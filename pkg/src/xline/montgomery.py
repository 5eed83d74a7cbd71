"""Montgomery XZ arithmetic and birational maps into Montgomery form.

If ``phi = (W_x, W_y)`` maps a curve E onto a Montgomery curve, then
``g2 = x o W_x`` is a degree-2 compression function on E whose doubling and
differential addition are exactly Montgomery's xDBL / xADD. Two maps are
shipped:

twisted Edwards  a x^2 + y^2 = 1 + d x^2 y^2
    u = (1 + y) / (1 - y),  v = u / x,
    A = 2(a + d)/(a - d),  B = 4/(a - d).

Huff  a x (y^2 - 1) = b y (x^2 - 1)
    u = (a y - b x) / (a x - b y),  v = (a^2 - b^2) / (a x - b y),
    A = (a^2 + b^2)/(ab),  B = 1/(ab).
    Inverse: x = (a + b u)/v,  y = (b + a u)/v.
    The Huff map follows from x y (a y - b x) = a x - b y on the curve.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .compression import CompressedValue, SchemeDescriptor
from .curves import Huff, Montgomery, TwistedEdwards
from .errors import ConfigError, DegenerateOutput, PoleOfMap, XlineError
from .ops import CountingOps, ModOps


class MontgomeryXFormulas:
    """Classical xDBL / xADD on (X:Z) for B y^2 = x^3 + A x^2 + x."""

    def __init__(self, model: Montgomery):
        if not isinstance(model, Montgomery):
            raise ConfigError("MontgomeryXFormulas needs a Montgomery curve")
        self.model = model
        p = model.p
        self.A24 = (model.A + 2) * pow(4, -1, p) % p
        self.scheme = SchemeDescriptor("mont2", model)

    def value(self, X, Z=1):
        return CompressedValue(X, Z, self.scheme)

    def xdbl(self, x, ops=None):
        ops = ops or self.scheme.ops
        AA = ops.sqr(ops.add(x.X, x.Z))
        BB = ops.sqr(ops.sub(x.X, x.Z))
        C = ops.sub(AA, BB)
        X2 = ops.mul(AA, BB)
        Z2 = ops.mul(C, ops.add(BB, ops.cmul(self.A24, C)))
        return _value(self.scheme, X2, Z2)

    def xadd(self, xP, xQ, xPmQ, ops=None):
        ops = ops or self.scheme.ops
        DA = ops.mul(ops.sub(xP.X, xP.Z), ops.add(xQ.X, xQ.Z))
        CB = ops.mul(ops.add(xP.X, xP.Z), ops.sub(xQ.X, xQ.Z))
        X = ops.mul(xPmQ.Z, ops.sqr(ops.add(DA, CB)))
        Z = ops.mul(xPmQ.X, ops.sqr(ops.sub(DA, CB)))
        return _value(self.scheme, X, Z)

    def ladder(self, x, n, ops=None):
        """x([n]P) with the same bit schedule as the compressed ladder."""
        if n < 1:
            raise ConfigError(f"scalar must be >= 1, got {n}")
        if n == 1:
            return x
        x1, x2 = x, self.xdbl(x, ops)
        for i in range(n.bit_length() - 2, -1, -1):
            if (n >> i) & 1:
                x1, x2 = self.xadd(x1, x2, x, ops), self.xdbl(x2, ops)
            else:
                x1, x2 = self.xdbl(x1, ops), self.xadd(x1, x2, x, ops)
        return x1


def _value(scheme, X, Z):
    if X % scheme.p == 0 and Z % scheme.p == 0:
        raise DegenerateOutput("Montgomery formula produced (0:0)")
    return CompressedValue(X, Z, scheme)


def mont_xdbl(x: CompressedValue) -> CompressedValue:
    return MontgomeryXFormulas(x.scheme.model).xdbl(x)


def mont_xadd(xP: CompressedValue, xQ: CompressedValue, xPmQ: CompressedValue) -> CompressedValue:
    return MontgomeryXFormulas(xP.scheme.model).xadd(xP, xQ, xPmQ)


# ---------------------------------------------------------------------------
# rational maps
# ---------------------------------------------------------------------------


@dataclass
class RationalMap:
    """phi: source -> target with W_x, W_y given projectively.

    ``W_x`` and ``W_y`` take the source triple (X, Y, Z) and return a
    (numerator, denominator) pair. ``limits`` lists source points where the
    formulas give 0/0 together with the image of the continuous extension.
    """

    name: str
    source: object
    target: Montgomery
    W_x: object
    W_y: object
    inverse_xy: object
    limits: dict = field(default_factory=dict)
    derivation: str = ""

    def __post_init__(self):
        self.xz = MontgomeryXFormulas(self.target)

    # -- evaluation ----------------------------------------------------------

    def apply(self, P):
        """phi(P) as a target point."""
        if P.curve != self.source:
            raise ConfigError(f"{P} is not on the source curve {self.source}")
        if P in self.limits:
            return self.limits[P]
        nx, dx = self.W_x(P.X, P.Y, P.Z)
        ny, dy = self.W_y(P.X, P.Y, P.Z)
        p = self.target.p
        nx, dx, ny, dy = nx % p, dx % p, ny % p, dy % p
        if (nx == 0 and dx == 0) or (ny == 0 and dy == 0):
            raise PoleOfMap(f"{self.name} has no value at {P}")
        if dx == 0 or dy == 0:
            return self.target.neutral
        return self.target.point(nx * pow(dx, -1, p), ny * pow(dy, -1, p))

    def g2(self, P):
        """g2(P) = x(phi(P)) as an (X:Z) value; (1:0) at the neutral."""
        if P.curve != self.source:
            raise ConfigError(f"{P} is not on the source curve {self.source}")
        if P in self.limits:
            Q = self.limits[P]
            return self.xz.value(1, 0) if Q.Z == 0 else self.xz.value(Q.X, 1)
        nx, dx = self.W_x(P.X, P.Y, P.Z)
        if nx % self.target.p == 0 and dx % self.target.p == 0:
            raise PoleOfMap(f"{self.name}: W_x is 0/0 at {P}")
        return self.xz.value(nx, dx)

    def invert(self, Q):
        """phi^-1(Q) for affine target points off the listed limits."""
        for P, img in self.limits.items():
            if img == Q:
                return P
        if Q.Z == 0:
            raise PoleOfMap(f"{self.name}: no stored preimage for {Q}")
        x, y = self.inverse_xy(*Q.xy)
        return self.source.point(x, y)

    def validate(self, samples=100, seed=0):
        """Map on-curve and inverse-identity checks on sampled points."""
        rng = random.Random(f"map:{self.name}:{seed}")
        done = 0
        for _ in range(samples * 4):
            P = self.source.sample_point(rng=rng)
            try:
                Q = self.apply(P)
                back = self.invert(Q)
            except (PoleOfMap, ZeroDivisionError, ValueError):
                continue
            if not self.target.on_curve(Q) or back != P:
                return False
            done += 1
            if done >= samples:
                break
        for P, Q in self.limits.items():
            if not (self.source.on_curve(P) and self.target.on_curve(Q)):
                return False
        return done > 0


def edwards_to_montgomery(curve: TwistedEdwards, validate=True) -> RationalMap:
    if not isinstance(curve, TwistedEdwards):
        raise ConfigError("edwards_to_montgomery needs a twisted Edwards curve")
    p, a, d = curve.p, curve.a, curve.d
    inv = pow(a - d, -1, p)
    target = Montgomery(curve.field, A=2 * (a + d) * inv, B=4 * inv)

    def inverse_xy(u, v):
        return u * pow(v, -1, p), (u - 1) * pow(u + 1, -1, p)

    m = RationalMap(
        name="edwards->montgomery",
        source=curve,
        target=target,
        W_x=lambda X, Y, Z: (Z + Y, Z - Y),
        W_y=lambda X, Y, Z: ((Z + Y) * Z, (Z - Y) * X),
        inverse_xy=inverse_xy,
        limits={
            curve.point(0, 1): target.neutral,
            curve.point(0, -1): target.point(0, 0),
        },
        derivation="u = (1+y)/(1-y), v = u/x; A = 2(a+d)/(a-d), B = 4/(a-d)",
    )
    if validate and not m.validate():
        raise XlineError("edwards->montgomery map failed its sampled self-check")
    return m


def huff_to_montgomery(curve: Huff, validate=True) -> RationalMap:
    if not isinstance(curve, Huff):
        raise ConfigError("huff_to_montgomery needs a Huff curve")
    p, a, b = curve.p, curve.a, curve.b
    iab = pow(a * b, -1, p)
    target = Montgomery(curve.field, A=(a * a + b * b) * iab, B=iab)
    T1, T2, T3 = curve.two_torsion

    def inverse_xy(u, v):
        iv = pow(v, -1, p)
        return (a + b * u) * iv, (b + a * u) * iv

    m = RationalMap(
        name="huff->montgomery",
        source=curve,
        target=target,
        W_x=lambda X, Y, Z: (a * Y - b * X, a * X - b * Y),
        W_y=lambda X, Y, Z: ((a * a - b * b) * Z, a * X - b * Y),
        inverse_xy=inverse_xy,
        limits={
            curve.neutral: target.neutral,
            T1: target.point(-b * pow(a, -1, p), 0),
            T2: target.point(-a * pow(b, -1, p), 0),
            T3: target.point(0, 0),
        },
        derivation="u = (ay - bx)/(ax - by), v = (a^2 - b^2)/(ax - by); A = (a^2+b^2)/(ab), B = 1/(ab)",
    )
    if validate and not m.validate():
        raise XlineError("huff->montgomery map failed its sampled self-check")
    return m


MAPS = {"edwards": edwards_to_montgomery, "huff": huff_to_montgomery}


def map_for(curve, validate=True):
    try:
        return MAPS[curve.model](curve, validate=validate)
    except KeyError:
        raise ConfigError(f"no Montgomery map shipped for {curve.model} curves") from None


def induced_g2(phi: RationalMap, P) -> CompressedValue:
    return phi.g2(P)


def theorem_check(phi: RationalMap, n=None, seed=0, samples=1, max_scalar=1 << 32):
    """g2-ladder over Montgomery xDBL/xADD equals g2 of the source oracle.

    With ``n`` None each sample draws its own scalar in [1, max_scalar).
    """
    rng = random.Random(f"theorem:{phi.name}:{seed}")
    src = phi.source
    for _ in range(samples):
        P = src.sample_point(rng=rng)
        k = n if n is not None else rng.randrange(1, max_scalar)
        got = phi.xz.ladder(phi.g2(P), k)
        want = phi.g2(src.scalar_mul(P, k))
        if got != want:
            return False
    return True


def ladder_step_counts(phi: RationalMap, seed=0):
    """Field-op counts of one g2 ladder step (xADD + xDBL)."""
    rng = random.Random(seed)
    P = phi.source.sample_point(rng=rng)
    x = phi.g2(P)
    x2 = phi.xz.xdbl(x)
    ops = CountingOps(phi.target.p)
    phi.xz.xadd(x, x2, x, ops)
    phi.xz.xdbl(x2, ops)
    return ops.snapshot()


def op_count_delta(phi: RationalMap, seed=0):
    """g2 step counts minus the mont2 compressed-ladder step counts."""
    from .ladder import LadderState, ladder_step

    g2 = ladder_step_counts(phi, seed)
    scheme = SchemeDescriptor("mont2", phi.target)
    rng = random.Random(seed)
    Q = phi.target.sample_point(rng=rng)
    from .compression import compress, double_compressed

    r = compress(scheme, Q)
    ops = CountingOps(phi.target.p)
    ladder_step(LadderState(r, double_compressed(scheme, r), r), 1, ops=ops)
    base = ops.snapshot()
    return {k: g2[k] - base[k] for k in g2}, g2, base


__all__ = [
    "MontgomeryXFormulas", "RationalMap", "mont_xdbl", "mont_xadd", "edwards_to_montgomery",
    "huff_to_montgomery", "map_for", "induced_g2", "theorem_check", "ladder_step_counts",
    "op_count_delta", "ModOps",
]
