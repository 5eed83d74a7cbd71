"""Curve models, full point arithmetic and the brute-force oracle.

Points are stored projectively and normalised so that the last nonzero
coordinate is 1; equality of normalised triples is projective equality.
Each model exposes its addition laws individually (``law_*`` methods returning
a raw triple, or None when a denominator vanishes) so they can be cross-tested,
and ``add`` tries them in order before falling back to torsion translations.
"""

from __future__ import annotations

import math
import random

from .errors import ConfigError, ExceptionalInput, FieldTooLarge, InvalidCurve, SamplingFailed
from .field import FieldCtx, FieldElement

ENUMERATION_LIMIT = 1 << 20
SAMPLING_TRIALS = 1000


def _as_int(F, v):
    if isinstance(v, FieldElement):
        if v.ctx != F:
            raise ConfigError("coefficient from a different field")
        return v.value
    if isinstance(v, str):
        v = int(v, 0)
    if isinstance(v, bool) or not isinstance(v, int):
        raise ConfigError(f"coefficient must be an integer, got {v!r}")
    return v % F.p


class Point:
    """A point of ``curve`` in normalised projective coordinates."""

    __slots__ = ("curve", "X", "Y", "Z")

    def __init__(self, curve, X, Y, Z):
        self.curve = curve
        self.X, self.Y, self.Z = X, Y, Z

    @property
    def coords(self):
        return (self.X, self.Y, self.Z)

    @property
    def is_infinity(self):
        return self.Z == 0

    @property
    def xy(self):
        if self.Z == 0:
            raise ValueError(f"{self} is a point at infinity and has no affine form")
        return self.X, self.Y

    @property
    def x(self):
        return self.xy[0]

    @property
    def y(self):
        return self.xy[1]

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.coords == other.coords and self.curve == other.curve

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"({self.X}:{self.Y}:{self.Z})"

    def __add__(self, other):
        return self.curve.add(self, other)

    def __neg__(self):
        return self.curve.negate(self)

    def __sub__(self, other):
        return self.curve.add(self, self.curve.negate(other))

    def __rmul__(self, n):
        return self.curve.scalar_mul(self, n)

    __mul__ = __rmul__

    def on_curve(self):
        return self.curve.on_curve(self)


class CurveModel:
    """Base class for the five supported models."""

    model = ""
    coefficient_names = ()
    addition_laws = ()
    doubling_laws = ()

    def __init__(self, field, **coefficients):
        if not isinstance(field, FieldCtx):
            field = FieldCtx(field)
        self.field = field
        for name in self.coefficient_names:
            setattr(self, name, _as_int(field, coefficients[name]))
        self._validate()
        self._neutral = self.point(*self.neutral_coords)

    def _validate(self):
        pass

    # -- identity ------------------------------------------------------------

    @property
    def p(self):
        return self.field.p

    def coefficients(self):
        return {name: getattr(self, name) for name in self.coefficient_names}

    def _key(self):
        return (type(self), self.p, tuple(self.coefficients().values()))

    def __eq__(self, other):
        return isinstance(other, CurveModel) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        params = ", ".join(f"{k}={v}" for k, v in self.coefficients().items())
        return f"{type(self).__name__}(p={self.p}, {params})"

    # -- points ----------------------------------------------------------------

    def normalize(self, X, Y, Z):
        p = self.p
        X, Y, Z = X % p, Y % p, Z % p
        if Z:
            if Z != 1:
                inv = pow(Z, -1, p)
                X, Y, Z = X * inv % p, Y * inv % p, 1
        elif Y:
            X, Y = X * pow(Y, -1, p) % p, 1
        elif X:
            X = 1
        else:
            raise ValueError("(0:0:0) is not a projective point")
        return X, Y, Z

    def point(self, X, Y, Z=1, check=True):
        F = self.field
        X, Y, Z = (_as_int(F, c) for c in (X, Y, Z))
        pt = Point(self, *self.normalize(X, Y, Z))
        if check and not self.on_curve(pt):
            raise ValueError(f"{pt} is not on {self}")
        return pt

    def _pt(self, triple):
        return Point(self, *self.normalize(*triple))

    @property
    def neutral(self):
        return self._neutral

    def equation(self, X, Y, Z):
        raise NotImplementedError

    def on_curve(self, P):
        return P.curve == self and self.equation(P.X, P.Y, P.Z) % self.p == 0

    # -- group law -------------------------------------------------------------

    def negate(self, P):
        return self._pt(self._neg(P.X, P.Y, P.Z))

    def _try_laws(self, names, P, Q):
        for name in names:
            out = getattr(self, name)(P, Q)
            if out is not None and any(c % self.p for c in out):
                return self._pt(out)
        return None

    def add(self, P, Q):
        """P + Q using the unified law first and split laws as fallback."""
        if P == self._neutral:
            return Q
        if Q == self._neutral:
            return P
        laws = self.addition_laws + (self.doubling_laws if P == Q else ())
        R = self._try_laws(laws, P, Q)
        if R is None:
            R = self._fallback_add(P, Q)
        if R is None:
            raise ExceptionalInput(f"no addition law applies to {P} + {Q} on {self}")
        return R

    def double(self, P):
        if P == self._neutral:
            return P
        R = self._try_laws(self.doubling_laws + self.addition_laws, P, P)
        if R is None:
            R = self._fallback_add(P, P)
        if R is None:
            raise ExceptionalInput(f"no doubling law applies to {P} on {self}")
        return R

    def _fallback_add(self, P, Q):
        return None

    def apply_law(self, name, P, Q):
        """Evaluate one named law; None when it is not applicable."""
        return self._try_laws((name,), P, Q)

    def scalar_mul(self, P, n):
        """[n]P by left-to-right double-and-add (the reference oracle)."""
        if n < 0:
            return self.scalar_mul(self.negate(P), -n)
        R = self._neutral
        for bit in bin(n)[2:]:
            R = self.double(R)
            if bit == "1":
                R = self.add(R, P)
        return R

    def point_order(self, P, group_order=None, bound=None):
        """Order of P; uses the divisors of ``group_order`` when given."""
        O = self._neutral
        if group_order is not None:
            n = group_order
            for q in _prime_factors(group_order):
                while n % q == 0 and self.scalar_mul(P, n // q) == O:
                    n //= q
            return n
        R, k = P, 1
        bound = bound or 2 * self.p + 2
        while R != O:
            R = self.add(R, P)
            k += 1
            if k > bound:
                raise ValueError(f"order of {P} exceeds {bound}")
        return k

    # -- enumeration and sampling ---------------------------------------------

    def _y_roots(self, x):
        """Affine y values above x."""
        raise NotImplementedError

    def infinity_points(self):
        return []

    def enumerate_points(self):
        """Every point, including the points at infinity, sorted."""
        if self.p > ENUMERATION_LIMIT:
            raise FieldTooLarge(f"p = {self.p} exceeds enumeration limit 2^20")
        if self.p < 1 << 16:
            self.field.build_sqrt_table()
        pts = [Point(self, x, y, 1) for x in range(self.p) for y in self._y_roots(x)]
        pts.extend(self.infinity_points())
        return sorted(pts, key=lambda P: (P.Z, P.X, P.Y), reverse=False)

    def sample_point(self, seed=None, rng=None):
        """Deterministic (given seed) random affine point."""
        rng = rng or random.Random(seed)
        for _ in range(SAMPLING_TRIALS):
            x = rng.randrange(self.p)
            ys = self._y_roots(x)
            if ys:
                return Point(self, x, ys[rng.randrange(len(ys))], 1)
        raise SamplingFailed(f"no point found on {self} after {SAMPLING_TRIALS} trials")

    def group_order(self):
        return len(self.enumerate_points())


def _prime_factors(n):
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


class TwistedEdwards(CurveModel):
    """a*x^2 + y^2 = 1 + d*x^2*y^2, neutral (0, 1).

    Only affine points are representable; when d/a is a square the affine
    points do not form a group and additions landing at infinity raise.
    """

    model = "edwards"
    coefficient_names = ("a", "d")
    addition_laws = ("law_unified", "law_dedicated")
    doubling_laws = ("law_unified_double", "law_dedicated_double")
    neutral_coords = (0, 1, 1)

    def _validate(self):
        a, d, p = self.a, self.d, self.p
        if a * d * (a - d) % p == 0:
            raise InvalidCurve("twisted Edwards curve needs a*d*(a-d) != 0")

    def equation(self, X, Y, Z):
        if Z % self.p == 0:
            return 1  # singular points at infinity are not model points
        Z2 = Z * Z
        return self.a * X * X * Z2 + Y * Y * Z2 - Z2 * Z2 - self.d * X * X * Y * Y

    def _neg(self, X, Y, Z):
        return (-X, Y, Z)

    def law_unified(self, P, Q):
        p, (x1, y1), (x2, y2) = self.p, P.xy, Q.xy
        t = self.d * x1 * x2 * y1 * y2 % p
        den_x, den_y = (1 + t) % p, (1 - t) % p
        if den_x == 0 or den_y == 0:
            return None
        return ((x1 * y2 + y1 * x2) * den_y, (y1 * y2 - self.a * x1 * x2) * den_x, den_x * den_y)

    def law_dedicated(self, P, Q):
        p, (x1, y1), (x2, y2) = self.p, P.xy, Q.xy
        den_x = (y1 * y2 + self.a * x1 * x2) % p
        den_y = (x1 * y2 - y1 * x2) % p
        if den_x == 0 or den_y == 0:
            return None
        return ((x1 * y1 + x2 * y2) * den_y, (x1 * y1 - x2 * y2) * den_x, den_x * den_y)

    def law_unified_double(self, P, Q):
        return self.law_unified(P, P)

    def law_dedicated_double(self, P, Q):
        p, (x, y) = self.p, P.xy
        ax2, y2 = self.a * x * x, y * y
        den_x, den_y = (y2 + ax2) % p, (2 - y2 - ax2) % p
        if den_x == 0 or den_y == 0:
            return None
        return (2 * x * y * den_y, (y2 - ax2) * den_x, den_x * den_y)

    def _fallback_add(self, P, Q):
        # (P + T) + (Q + T) with T = (0, -1) of order 2
        P2 = self._pt((-P.X, -P.Y, P.Z))
        Q2 = self._pt((-Q.X, -Q.Y, Q.Z))
        return self._try_laws(self.addition_laws, P2, Q2)

    def _y_roots(self, x):
        F = self.field
        x2 = x * x % F.p
        den = (1 - self.d * x2) % F.p
        if den == 0:
            return []
        s = F.sqrt((1 - self.a * x2) * F.inv(den))
        if s is None:
            return []
        return [s] if s == 0 else [s, F.p - s]


class GeneralizedHessian(CurveModel):
    """x^3 + y^3 + a = d*x*y, neutral (1:-1:0), -P = (y, x)."""

    model = "generalized_hessian"
    coefficient_names = ("a", "d")
    addition_laws = ("law_unified", "law_add")
    doubling_laws = ("law_double",)
    neutral_coords = (1, -1, 0)

    def _validate(self):
        a, d, p = self.a, self.d, self.p
        if a % p == 0 or (d ** 3 - 27 * a) % p == 0:
            raise InvalidCurve("generalized Hessian curve needs a != 0 and d^3 != 27a")

    def equation(self, X, Y, Z):
        return X ** 3 + Y ** 3 + self.a * Z ** 3 - self.d * X * Y * Z

    def _neg(self, X, Y, Z):
        return (Y, X, Z)

    def law_unified(self, P, Q):
        (X1, Y1, Z1), (X2, Y2, Z2), a = P.coords, Q.coords, self.a
        return (
            a * Y1 * Z1 * Z2 * Z2 - X1 * X1 * X2 * Y2,
            X1 * Y1 * Y2 * Y2 - a * X2 * Z1 * Z1 * Z2,
            X1 * X2 * X2 * Z1 - Y1 * Y1 * Y2 * Z2,
        )

    def law_add(self, P, Q):
        (X1, Y1, Z1), (X2, Y2, Z2) = P.coords, Q.coords
        return (
            Y1 * Y1 * X2 * Z2 - Y2 * Y2 * X1 * Z1,
            X1 * X1 * Y2 * Z2 - X2 * X2 * Y1 * Z1,
            X2 * Y2 * Z1 * Z1 - X1 * Y1 * Z2 * Z2,
        )

    def law_double(self, P, Q):
        X, Y, Z = P.coords
        X3, Y3, aZ3 = X ** 3, Y ** 3, self.a * Z ** 3
        return (Y * (aZ3 - X3), X * (Y3 - aZ3), Z * (X3 - Y3))

    def _y_roots(self, x):
        F = self.field
        return F.roots([x ** 3 + self.a, -self.d * x, 0, 1])

    def infinity_points(self):
        w = self.field.cube_root_of_unity()
        zetas = [1] if w is None else [1, w, w * w % self.p]
        return [self._pt((1, -z, 0)) for z in zetas]

    def to_twisted(self):
        """Remark-3 isomorphism target: swap X and Z."""
        return TwistedHessian(self.field, a=self.a, d=self.d)

    def map_to_twisted(self, P):
        return self.to_twisted().point(P.Z, P.Y, P.X)


class TwistedHessian(CurveModel):
    """a*x^3 + y^3 + 1 = d*x*y, neutral (0, -1), -P = (x/y, 1/y)."""

    model = "twisted_hessian"
    coefficient_names = ("a", "d")
    addition_laws = ("law_add", "law_standard")
    doubling_laws = ("law_double",)
    neutral_coords = (0, -1, 1)

    def _validate(self):
        a, d, p = self.a, self.d, self.p
        if a % p == 0 or (d ** 3 - 27 * a) % p == 0:
            raise InvalidCurve("twisted Hessian curve needs a != 0 and d^3 != 27a")

    def equation(self, X, Y, Z):
        return self.a * X ** 3 + Y ** 3 + Z ** 3 - self.d * X * Y * Z

    def _neg(self, X, Y, Z):
        return (X, Z, Y)

    def law_add(self, P, Q):
        (X1, Y1, Z1), (X2, Y2, Z2), a = P.coords, Q.coords, self.a
        return (
            X1 * Z1 * Z2 * Z2 - Y1 * Y1 * X2 * Y2,
            Y1 * Y2 * Y2 * Z1 - a * X1 * X1 * X2 * Z2,
            a * X1 * Y1 * X2 * X2 - Y2 * Z1 * Z1 * Z2,
        )

    def law_standard(self, P, Q):
        (X1, Y1, Z1), (X2, Y2, Z2) = P.coords, Q.coords
        return (
            X1 * X1 * Y2 * Z2 - X2 * X2 * Y1 * Z1,
            Z1 * Z1 * X2 * Y2 - Z2 * Z2 * X1 * Y1,
            Y1 * Y1 * X2 * Z2 - Y2 * Y2 * X1 * Z1,
        )

    def law_double(self, P, Q):
        X, Y, Z = P.coords
        aX3, Y3, Z3 = self.a * X ** 3, Y ** 3, Z ** 3
        return (X * (Z3 - Y3), Z * (Y3 - aX3), Y * (aX3 - Z3))

    def _y_roots(self, x):
        return self.field.roots([self.a * x ** 3 + 1, -self.d * x, 0, 1])

    def infinity_points(self):
        return [self._pt((1, y, 0)) for y in self.field.cube_roots(-self.a)]


class Huff(CurveModel):
    """a*x*(y^2 - 1) = b*y*(x^2 - 1), neutral (0, 0), -P = (-x, -y).

    The projective equation is the degree-3 homogenisation
    aX(Y^2 - Z^2) = bY(X^2 - Z^2). The three points at infinity
    T1 = (1:0:0), T2 = (0:1:0), T3 = (a:b:0) have order 2.
    """

    model = "huff"
    coefficient_names = ("a", "b")
    addition_laws = ("law_complete", "law_add")
    doubling_laws = ("law_double",)
    neutral_coords = (0, 0, 1)

    def _validate(self):
        a, b, p = self.a, self.b, self.p
        if a % p == 0 or b % p == 0 or (a * a - b * b) % p == 0:
            raise InvalidCurve("Huff curve needs a, b != 0 and a^2 != b^2")

    def equation(self, X, Y, Z):
        return self.a * X * (Y * Y - Z * Z) - self.b * Y * (X * X - Z * Z)

    def _neg(self, X, Y, Z):
        return (-X, -Y, Z)

    @property
    def two_torsion(self):
        """(T1, T2, T3)."""
        return (self._pt((1, 0, 0)), self._pt((0, 1, 0)), self._pt((self.a, self.b, 0)))

    def infinity_points(self):
        return list(self.two_torsion)

    @staticmethod
    def _frac_pair(n1, d1, n2, d2):
        if d1 == 0 or d2 == 0:
            return None
        return (n1 * d2, n2 * d1, d1 * d2)

    def law_complete(self, P, Q):
        if P.Z == 0 or Q.Z == 0:
            return None
        p, (x1, y1), (x2, y2) = self.p, P.xy, Q.xy
        xx, yy = x1 * x2 % p, y1 * y2 % p
        return self._frac_pair(
            (x1 + x2) * (1 + yy), (1 + xx) * (1 - yy) % p,
            (y1 + y2) * (1 + xx), (1 - xx) * (1 + yy) % p,
        )

    def law_add(self, P, Q):
        if P.Z == 0 or Q.Z == 0:
            return None
        p, (x1, y1), (x2, y2) = self.p, P.xy, Q.xy
        return self._frac_pair(
            (x1 - x2) * (y1 + y2), (1 - x1 * x2) * (y1 - y2) % p,
            (y1 - y2) * (x1 + x2), (1 - y1 * y2) * (x1 - x2) % p,
        )

    def law_double(self, P, Q):
        if P.Z == 0:
            return None
        # Denominators (1 + x^2)(1 - y^2) and (1 - x^2)(1 + y^2); the variant
        # with both signs flipped computes -[2]P instead.
        p, (x, y) = self.p, P.xy
        x2, y2 = x * x % p, y * y % p
        return self._frac_pair(
            (2 * y2 + 2) * x, (x2 + 1) * (1 - y2) % p,
            (2 * x2 + 2) * y, (1 - x2) * (y2 + 1) % p,
        )

    def translate(self, P, i):
        """P + T_i for i in {1, 2, 3}: (1/x, -y), (-x, 1/y), (-1/x, -1/y)."""
        T = self.two_torsion
        O = self._neutral
        if P == O:
            return T[i - 1]
        if P.Z == 0:
            j = T.index(P) + 1
            if j == i:
                return O
            return T[6 - i - j - 1]
        x, y = P.xy
        if i == 1:
            return self._pt((1, -y * x, x))
        if i == 2:
            return self._pt((-x * y, 1, y))
        # T3 = T1 + T2, so P + T3 = (-1/x, -1/y)
        return self._pt((-y, -x, x * y))

    def _fallback_add(self, P, Q):
        T = self.two_torsion
        if P.Z == 0:
            return self.translate(Q, T.index(P) + 1)
        if Q.Z == 0:
            return self.translate(P, T.index(Q) + 1)
        minus_p = self.negate(P)
        if Q == minus_p:
            return self._neutral
        for i in (1, 2, 3):
            if Q == self.translate(minus_p, i):
                return T[i - 1]
            if Q == self.translate(P, i):
                return self.translate(self.double(P), i)
        for i in (1, 2):
            Pi, Qi = self.translate(P, i), self.translate(Q, i)
            laws = self.addition_laws + (self.doubling_laws if Pi == Qi else ())
            R = self._try_laws(laws, Pi, Qi)
            if R is not None:
                return R
        return None

    def _y_roots(self, x):
        # a*x*y^2 - b*(x^2 - 1)*y - a*x = 0
        F = self.field
        p = F.p
        qa, qb, qc = self.a * x % p, -self.b * (x * x - 1) % p, -self.a * x % p
        if qa == 0:
            # x == 0: -b*(-1)*y = 0 -> y = 0
            return [0] if qb else []
        disc = (qb * qb - 4 * qa * qc) % p
        s = F.sqrt(disc)
        if s is None:
            return []
        inv = F.inv(2 * qa)
        roots = {(-qb + s) * inv % p, (-qb - s) * inv % p}
        return sorted(roots)


class Montgomery(CurveModel):
    """B*y^2 = x^3 + A*x^2 + x, neutral (0:1:0)."""

    model = "montgomery"
    coefficient_names = ("A", "B")
    addition_laws = ("law_chord_tangent",)
    doubling_laws = ()
    neutral_coords = (0, 1, 0)

    def _validate(self):
        A, B, p = self.A, self.B, self.p
        if B * (A * A - 4) % p == 0:
            raise InvalidCurve("Montgomery curve needs B*(A^2 - 4) != 0")

    def equation(self, X, Y, Z):
        return self.B * Y * Y * Z - (X ** 3 + self.A * X * X * Z + X * Z * Z)

    def _neg(self, X, Y, Z):
        return (X, -Y, Z)

    def law_chord_tangent(self, P, Q):
        F, p = self.field, self.p
        if P.Z == 0:
            return Q.coords
        if Q.Z == 0:
            return P.coords
        (x1, y1), (x2, y2) = P.xy, Q.xy
        A, B = self.A, self.B
        if x1 == x2:
            if (y1 + y2) % p == 0:
                return (0, 1, 0)
            lam = (3 * x1 * x1 + 2 * A * x1 + 1) * F.inv(2 * B * y1) % p
        else:
            lam = (y2 - y1) * F.inv(x2 - x1) % p
        x3 = (B * lam * lam - A - x1 - x2) % p
        return (x3, lam * (x1 - x3) - y1, 1)

    def _y_roots(self, x):
        F = self.field
        rhs = (x ** 3 + self.A * x * x + x) % F.p
        s = F.sqrt(rhs * F.inv(self.B))
        if s is None:
            return []
        return [s] if s == 0 else [s, F.p - s]

    def infinity_points(self):
        return [self._neutral]

    def a24(self):
        return (self.A + 2) * self.field.inv(4) % self.p


MODELS = {
    cls.model: cls
    for cls in (TwistedEdwards, GeneralizedHessian, TwistedHessian, Huff, Montgomery)
}


def make_curve(model, p, **coefficients):
    try:
        cls = MODELS[model]
    except KeyError:
        raise ConfigError(f"unknown curve model {model!r}; expected one of {sorted(MODELS)}") from None
    F = p if isinstance(p, FieldCtx) else FieldCtx(int(p))
    missing = set(cls.coefficient_names) - set(coefficients)
    if missing:
        raise ConfigError(f"{model} curve is missing coefficient(s) {sorted(missing)}")
    return cls(F, **coefficients)


def curve_from_json(doc):
    """Build a curve from {"model": ..., "p": "<decimal>", <coefficients>}."""
    if not isinstance(doc, dict):
        raise ConfigError("curve config must be a JSON object")
    model = doc.get("model")
    if model not in MODELS:
        raise ConfigError(f"unknown curve model {model!r}; expected one of {sorted(MODELS)}")
    cls = MODELS[model]
    allowed = {"model", "p", *cls.coefficient_names}
    unknown = set(doc) - allowed
    if unknown:
        raise ConfigError(f"unknown key(s) for {model}: {sorted(unknown)}")
    if "p" not in doc:
        raise ConfigError("curve config needs 'p'")
    try:
        p = int(str(doc["p"]), 10)
        coeffs = {k: int(str(doc[k]), 10) for k in cls.coefficient_names if k in doc}
    except ValueError as exc:
        raise ConfigError(f"curve config values must be decimal integers: {exc}") from None
    return make_curve(model, p, **coeffs)


def curve_to_json(curve):
    doc = {"model": curve.model, "p": str(curve.p)}
    doc.update({k: str(v) for k, v in curve.coefficients().items()})
    return doc


def hessian_exceptional_set(curve):
    """Rational members of {(-z:0:1) : z^3 = a}, where the unified law fails."""
    if not isinstance(curve, GeneralizedHessian):
        raise ConfigError("exceptional set is defined for generalized Hessian curves")
    return {curve.point(-z, 0, 1) for z in curve.field.cube_roots(curve.a)}


def hasse_interval(p):
    w = 2 * math.isqrt(p) + 2
    return p + 1 - w, p + 1 + w


# Functional aliases matching the operation names used in the docs.
def on_curve(P):
    return P.curve.on_curve(P)


def add_points(P, Q):
    return P.curve.add(P, Q)


def negate(P):
    return P.curve.negate(P)


def double_point(P):
    return P.curve.double(P)


def scalar_mul_oracle(P, n):
    return P.curve.scalar_mul(P, n)


def enumerate_points(curve):
    return curve.enumerate_points()


def sample_point(curve, seed=None):
    return curve.sample_point(seed)
