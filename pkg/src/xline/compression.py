"""Compression functions and their doubling / differential-addition maps.

A compression function ``f`` of degree ``2n`` is constant on the orbit of
``P`` under ``[-1]`` and translation by a small torsion subgroup. Every
scheme here supplies

* ``compress``: ``f(P)`` as a projective pair ``(X:Z)``, inversion free;
* ``fiber``: the predicted orbit (rational members only);
* ``D``: ``f([2]P)`` from ``f(P)``;
* ``A2``: ``f(P+Q) * f(P-Q)`` from ``f(P), f(Q)``;
* ``A1``: ``f(P+Q) + f(P-Q)`` where available (gh2 only).

The D/A maps are straight-line programs over an ops object (see
:mod:`xline.ops`), so the ladder and the op-count bench share one source.
Formula constants are folded once per curve in ``SchemeDescriptor``.
"""

from __future__ import annotations

from .curves import GeneralizedHessian, Huff, Montgomery, TwistedEdwards
from .errors import (
    ConfigError,
    DegenerateOutput,
    EqualInputs,
    InvalidCurve,
    OmegaUnavailable,
    UndefinedAtPoint,
    UnsupportedScheme,
    ZeroBaseValue,
)
from .formulas import load_derived
from .ops import ModOps

SCHEME_IDS = ("ed2", "ed4", "ed8", "gh2", "gh6", "h18", "hu2", "hu4", "hu8", "hu16", "mont2")


def _inv(p, v):
    return pow(v % p, -1, p)


class CompressedValue:
    """Projective value ``X/Z`` of a compression function; ``(1:0)`` is infinity."""

    __slots__ = ("X", "Z", "scheme")

    def __init__(self, X, Z, scheme):
        p = scheme.p
        X, Z = X % p, Z % p
        if X == 0 and Z == 0:
            raise DegenerateOutput("(0:0) is not a compressed value")
        self.X, self.Z, self.scheme = X, Z, scheme

    @property
    def value(self):
        """Affine value as an int, or None for infinity."""
        if self.Z == 0:
            return None
        return self.X * _inv(self.scheme.p, self.Z) % self.scheme.p

    def normalized(self):
        v = self.value
        return (1, 0) if v is None else (v, 1)

    def __eq__(self, other):
        if not isinstance(other, CompressedValue):
            return NotImplemented
        p = self.scheme.p
        return other.scheme.p == p and (self.X * other.Z - other.X * self.Z) % p == 0

    def __hash__(self):
        return hash((self.scheme.p, self.normalized()))

    def __repr__(self):
        v = self.value
        return f"<{self.scheme.scheme_id} {'inf' if v is None else v}>"


# ---------------------------------------------------------------------------
# scheme definitions
# ---------------------------------------------------------------------------


def _cross(ops, XP, ZP, XQ, ZQ):
    """u = XP*XQ, v = XP*ZQ + ZP*XQ, w = ZP*ZQ, delta = XP*ZQ - ZP*XQ."""
    u = ops.mul(XP, XQ)
    w = ops.mul(ZP, ZQ)
    c1 = ops.mul(XP, ZQ)
    c2 = ops.mul(ZP, XQ)
    return u, ops.add(c1, c2), w, ops.sub(c1, c2)


def _poly_doubling(ops, k, X, Z):
    """Homogeneous evaluation of a stored D = Num(r)/Den(r)."""
    nc, dc = k["dbl_num"], k["dbl_den"]
    deg = len(nc) - 1
    xp, zp = [1, X], [1, Z]
    for i in range(2, deg + 1):
        xp.append(ops.sqr(xp[i // 2]) if i % 2 == 0 else ops.mul(xp[i - 1], X))
        zp.append(ops.sqr(zp[i // 2]) if i % 2 == 0 else ops.mul(zp[i - 1], Z))
    mono = []
    for i in range(deg + 1):
        j = deg - i
        if i == 0:
            mono.append(zp[j])
        elif j == 0:
            mono.append(xp[i])
        else:
            mono.append(ops.mul(xp[i], zp[j]))
    N = D = 0
    for i in range(deg + 1):
        if nc[i]:
            N = ops.add(N, ops.cmul(nc[i], mono[i]))
        if dc[i]:
            D = ops.add(D, ops.cmul(dc[i], mono[i]))
    return N, D


class _Scheme:
    scheme_id = ""
    model = None
    degree = 0
    needs_omega = False
    # True when A2 has (rP - rQ)^2 as its denominator
    equal_inputs_singular = False
    undefined_locus = ""
    labels = {}

    def constants(self, curve):
        return {}

    def check_curve(self, curve):
        pass

    def compress(self, curve, X, Y, Z):
        raise NotImplementedError

    def fiber_affine(self, curve, x, y, omega):
        raise NotImplementedError

    def dbl(self, ops, k, X, Z):
        raise NotImplementedError

    def a2(self, ops, k, XP, ZP, XQ, ZQ):
        raise NotImplementedError

    a1 = None


class _ED2(_Scheme):
    scheme_id, model, degree = "ed2", TwistedEdwards, 2
    undefined_locus = "none (defined on every affine point)"
    labels = {"D": "doub2ED", "A2": "dadd2ED"}

    def constants(self, c):
        p = c.p
        return {"a": c.a, "d": c.d, "2a": 2 * c.a % p, "2d": 2 * c.d % p}

    def compress(self, c, X, Y, Z):
        return Y, Z

    def fiber_affine(self, c, x, y, omega):
        return [(x, y), (-x, y)]

    def dbl(self, ops, k, X, Z):
        X2, Z2 = ops.sqr(X), ops.sqr(Z)
        X4, Z4 = ops.sqr(X2), ops.sqr(Z2)
        XZ2 = ops.mul(X2, Z2)
        t = ops.add(ops.cmul(k["d"], X4), ops.cmul(k["a"], Z4))
        return ops.sub(ops.cmul(k["2a"], XZ2), t), ops.sub(t, ops.cmul(k["2d"], XZ2))

    def a2(self, ops, k, XP, ZP, XQ, ZQ):
        u, w = ops.mul(XP, XQ), ops.mul(ZP, ZQ)
        s1, s4 = ops.sqr(u), ops.sqr(w)
        m = ops.add(ops.sqr(ops.mul(XP, ZQ)), ops.sqr(ops.mul(ZP, XQ)))
        N = ops.sub(ops.cmul(k["a"], ops.sub(m, s4)), ops.cmul(k["d"], s1))
        D = ops.add(ops.cmul(k["d"], ops.sub(s1, m)), ops.cmul(k["a"], s4))
        return N, D


class _ED4(_Scheme):
    scheme_id, model, degree = "ed4", TwistedEdwards, 4
    undefined_locus = "none (defined on every affine point)"
    labels = {"D": "doub4ED", "A2": "dadd4ED"}

    def constants(self, c):
        p = c.p
        return {"a": c.a, "d": c.d, "2a": 2 * c.a % p, "2d": 2 * c.d % p}

    def compress(self, c, X, Y, Z):
        return Y * Y, Z * Z

    def fiber_affine(self, c, x, y, omega):
        return [(x, y), (-x, y), (x, -y), (-x, -y)]

    def dbl(self, ops, k, X, Z):
        # D(r) = ((d r^2 - 2a r + a) / (d r^2 - 2d r + a))^2
        X2, Z2, XZ = ops.sqr(X), ops.sqr(Z), ops.mul(X, Z)
        base = ops.add(ops.cmul(k["d"], X2), ops.cmul(k["a"], Z2))
        n = ops.sub(base, ops.cmul(k["2a"], XZ))
        m = ops.sub(base, ops.cmul(k["2d"], XZ))
        return ops.sqr(n), ops.sqr(m)

    def a2(self, ops, k, XP, ZP, XQ, ZQ):
        # ((d t - a s + a) / (d t - d s + a))^2 with t = rP rQ, s = rP + rQ
        u, v, w, _ = _cross(ops, XP, ZP, XQ, ZQ)
        du, aw = ops.cmul(k["d"], u), ops.cmul(k["a"], w)
        n = ops.add(ops.sub(du, ops.cmul(k["a"], v)), aw)
        m = ops.add(ops.sub(du, ops.cmul(k["d"], v)), aw)
        return ops.sqr(n), ops.sqr(m)


class _ED8(_Scheme):
    scheme_id, model, degree = "ed8", TwistedEdwards, 8
    undefined_locus = "none (defined on every affine point)"
    labels = {"D": "doub8ED", "A2": "dadd8ED"}

    def constants(self, c):
        k = {"d2": c.d * c.d % c.p}
        k.update(_derived_doubling("ed8", (c.a, c.d), c.p))
        return k

    def compress(self, c, X, Y, Z):
        return X * X * Y * Y, Z ** 4

    def fiber_affine(self, c, x, y, omega):
        pts = [(x, y), (-x, y), (x, -y), (-x, -y)]
        s = c.field.sqrt(c.a)
        if s is not None:
            # P + (1/sqrt(a), 0) = (y/sqrt(a), -sqrt(a) x)
            yx, sx = y * _inv(c.p, s), s * x
            pts += [(yx, sx), (-yx, sx), (yx, -sx), (-yx, -sx)]
        return pts

    dbl = staticmethod(lambda ops, k, X, Z: _poly_doubling(ops, k, X, Z))

    def a2(self, ops, k, XP, ZP, XQ, ZQ):
        u, _, w, delta = _cross(ops, XP, ZP, XQ, ZQ)
        return ops.sqr(delta), ops.sqr(ops.sub(ops.cmul(k["d2"], u), w))


class _GH2(_Scheme):
    scheme_id, model, degree = "gh2", GeneralizedHessian, 2
    undefined_locus = "Z = 0 (points at infinity)"
    labels = {"D": "doub2GH", "A2": "dadd2MultGH", "A1": "dadd2AddGH"}

    def constants(self, c):
        p, a, d = c.p, c.a, c.d
        return {
            "a": a, "d": d, "3a": 3 * a % p, "12a": 12 * a % p, "2ad": 2 * a * d % p,
            "ad2": a * d * d % p, "d2": d * d % p, "6a": 6 * a % p,
        }

    def compress(self, c, X, Y, Z):
        return X + Y, Z

    def fiber_affine(self, c, x, y, omega):
        return [(x, y), (y, x)]

    def dbl(self, ops, k, X, Z):
        # -(r^4 + 4a r + a d) / (2 r^3 + d r^2 - a), signs moved to the denominator
        X2, Z2 = ops.sqr(X), ops.sqr(Z)
        Z3 = ops.mul(Z2, Z)
        fourX = ops.add(ops.add(X, X), ops.add(X, X))
        N = ops.add(ops.sqr(X2), ops.mul(ops.cmul(k["a"], Z3), ops.add(fourX, ops.cmul(k["d"], Z))))
        t = ops.mul(X2, ops.add(ops.add(X, X), ops.cmul(k["d"], Z)))
        return N, ops.mul(Z, ops.sub(ops.cmul(k["a"], Z3), t))

    @staticmethod
    def _uvw(ops, XP, ZP, XQ, ZQ):
        u, v, w, _ = _cross(ops, XP, ZP, XQ, ZQ)
        return u, v, w, ops.mul(u, w), ops.mul(v, w), ops.mul(u, v)

    @staticmethod
    def _den(ops, k, u, v, w, uw, uv, v2, w2):
        # 3uv + d v^2 - d uw - 3a w^2
        t = ops.add(ops.add(uv, ops.add(uv, uv)), ops.cmul(k["d"], ops.sub(v2, uw)))
        return ops.sub(t, ops.cmul(k["3a"], w2))

    def a2(self, ops, k, XP, ZP, XQ, ZQ):
        u, v, w, uw, vw, uv = self._uvw(ops, XP, ZP, XQ, ZQ)
        u2, v2, w2 = ops.sqr(u), ops.sqr(v), ops.sqr(w)
        # d u^2 - 3a v^2 + 12a uw + 2ad vw + a d^2 w^2
        N = ops.sub(ops.cmul(k["d"], u2), ops.cmul(k["3a"], v2))
        N = ops.add(N, ops.cmul(k["12a"], uw))
        N = ops.add(N, ops.cmul(k["2ad"], vw))
        N = ops.add(N, ops.cmul(k["ad2"], w2))
        return N, self._den(ops, k, u, v, w, uw, uv, v2, w2)

    def a1(self, ops, k, XP, ZP, XQ, ZQ):
        u, v, w, uw, vw, uv = self._uvw(ops, XP, ZP, XQ, ZQ)
        u2, v2, w2 = ops.sqr(u), ops.sqr(v), ops.sqr(w)
        # -(3u^2 + d uv + d^2 uw + 6a vw + 2ad w^2) / den
        N = ops.add(ops.add(u2, ops.add(u2, u2)), ops.cmul(k["d"], uv))
        N = ops.add(N, ops.cmul(k["d2"], uw))
        N = ops.add(N, ops.cmul(k["6a"], vw))
        N = ops.add(N, ops.cmul(k["2ad"], w2))
        D = self._den(ops, k, u, v, w, uw, uv, v2, w2)
        return N, ops.sub(0, D)


class _GH6(_Scheme):
    scheme_id, model, degree = "gh6", GeneralizedHessian, 6
    needs_omega = True
    equal_inputs_singular = True
    undefined_locus = "Z = 0 (points at infinity)"
    labels = {"D": "doub6", "A2": "dadd6"}

    def constants(self, c):
        p, a, d = c.p, c.a, c.d
        return {"a": a, "d": d, "ad": a * d % p, "2a2": 2 * a * a % p, "a2": a * a % p}

    def compress(self, c, X, Y, Z):
        return X * Y, Z * Z

    def fiber_affine(self, c, x, y, omega):
        pts = [(x, y), (y, x)]
        if omega is not None:
            w, w2 = omega, omega * omega
            pts += [(w * x, w2 * y), (w2 * x, w * y), (w * y, w2 * x), (w2 * y, w * x)]
        return pts

    def dbl(self, ops, k, X, Z):
        # r (-r^3 + a d r - 2a^2) / ((d r - a)^2 - 4 r^3)
        X2, Z2 = ops.sqr(X), ops.sqr(Z)
        X3, Z3 = ops.mul(X2, X), ops.mul(Z2, Z)
        inner = ops.sub(ops.cmul(k["ad"], ops.mul(X, Z2)), ops.add(X3, ops.cmul(k["2a2"], Z3)))
        N = ops.mul(X, inner)
        lin = ops.sqr(ops.sub(ops.cmul(k["d"], X), ops.cmul(k["a"], Z)))
        fourX3 = ops.add(ops.add(X3, X3), ops.add(X3, X3))
        return N, ops.mul(Z, ops.sub(ops.mul(lin, Z), fourX3))

    def a2(self, ops, k, XP, ZP, XQ, ZQ):
        # (t^2 - ad t + a^2 s) / (rP - rQ)^2
        u, v, w, delta = _cross(ops, XP, ZP, XQ, ZQ)
        N = ops.sub(ops.sqr(u), ops.cmul(k["ad"], ops.mul(u, w)))
        N = ops.add(N, ops.cmul(k["a2"], ops.mul(v, w)))
        return N, ops.sqr(delta)


class _H18(_Scheme):
    scheme_id, model, degree = "h18", GeneralizedHessian, 18
    needs_omega = True
    equal_inputs_singular = True
    undefined_locus = "X*Y*Z = 0"
    labels = {"D": "doub18", "A2": "dadd18"}

    def check_curve(self, c):
        if c.a != 1:
            raise InvalidCurve("h18 needs the Hessian curve x^3 + y^3 + 1 = d*x*y (a = 1)")

    def constants(self, c):
        p, d = c.p, c.d
        d2, d3 = d * d % p, d ** 3 % p
        return {
            "9d": 9 * d % p, "8d3+54": (8 * d3 + 54) % p, "d5+27d2": (d2 * d3 + 27 * d2) % p,
            "d2": d2, "18d": 18 * d % p, "4d3+27": (4 * d3 + 27) % p,
        }

    def compress(self, c, X, Y, Z):
        X3, Y3, Z3 = X ** 3, Y ** 3, Z ** 3
        return X3 * Y3 + X3 * Z3 + Y3 * Z3, X * X * Y * Y * Z * Z

    def fiber_affine(self, c, x, y, omega):
        p = c.p
        ix, iy = _inv(p, x), _inv(p, y)
        base = [(x, y), (x * iy, iy), (y, x), (y * ix, ix), (iy, x * iy), (ix, y * ix)]
        pts = list(base)
        if omega is not None:
            w, w2 = omega, omega * omega
            pts += [(w * u, w2 * v) for u, v in base] + [(w2 * u, w * v) for u, v in base]
        return pts

    def dbl(self, ops, k, X, Z):
        # 4*D: (r^4 + 9d r^2 - (8d^3+54) r + d^5 + 27d^2) /
        #      (4r^3 - d^2 r^2 - 18d r + 4d^3 + 27)
        X2, Z2, XZ = ops.sqr(X), ops.sqr(Z), ops.mul(X, Z)
        Z3 = ops.mul(Z2, Z)
        N = ops.add(ops.sqr(X2), ops.cmul(k["9d"], ops.mul(X2, Z2)))
        N = ops.sub(N, ops.cmul(k["8d3+54"], ops.mul(XZ, Z2)))
        N = ops.add(N, ops.cmul(k["d5+27d2"], ops.sqr(Z2)))
        X3 = ops.mul(X2, X)
        D = ops.sub(ops.add(ops.add(X3, X3), ops.add(X3, X3)), ops.cmul(k["d2"], ops.mul(X2, Z)))
        D = ops.sub(D, ops.cmul(k["18d"], ops.mul(X, Z2)))
        D = ops.add(D, ops.cmul(k["4d3+27"], Z3))
        return N, ops.mul(Z, D)

    def a2(self, ops, k, XP, ZP, XQ, ZQ):
        u, v, w, delta = _cross(ops, XP, ZP, XQ, ZQ)
        N = ops.add(ops.sqr(u), ops.cmul(k["9d"], ops.mul(u, w)))
        N = ops.sub(N, ops.cmul(k["4d3+27"], ops.mul(v, w)))
        N = ops.add(N, ops.cmul(k["d5+27d2"], ops.sqr(w)))
        return N, ops.sqr(delta)


def _huff_A(c):
    p = c.p
    return (c.a * c.a + c.b * c.b) * _inv(p, c.a * c.b) % p


class _HU2(_Scheme):
    scheme_id, model, degree = "hu2", Huff, 2
    undefined_locus = "Z = 0 (points at infinity)"
    labels = {"D": "doub2HU", "A2": "dadd2HU"}

    def constants(self, c):
        p = c.p
        return {"a24": (_huff_A(c) + 2) * _inv(p, 4) % p}

    def compress(self, c, X, Y, Z):
        return X * Y, Z * Z

    def fiber_affine(self, c, x, y, omega):
        return [(x, y), (-x, -y)]

    def dbl(self, ops, k, X, Z):
        # 4r(r^2 + A r + 1) / (r^2 - 1)^2 in Montgomery xDBL shape
        s2, t2 = ops.sqr(ops.add(X, Z)), ops.sqr(ops.sub(X, Z))
        T = ops.sub(s2, t2)
        return ops.mul(T, ops.add(t2, ops.cmul(k["a24"], T))), ops.mul(s2, t2)

    def a2(self, ops, k, XP, ZP, XQ, ZQ):
        # ((rP - rQ) / (rP rQ - 1))^2
        e1 = ops.mul(ops.sub(XP, ZP), ops.add(XQ, ZQ))
        e2 = ops.mul(ops.add(XP, ZP), ops.sub(XQ, ZQ))
        return ops.sqr(ops.sub(e1, e2)), ops.sqr(ops.add(e1, e2))


class _HuffHigh(_Scheme):
    model = Huff
    equal_inputs_singular = True

    def fiber_affine(self, c, x, y, omega):
        return _huff8_orbit(c.p, x, y)


def _huff8_orbit(p, x, y):
    """(x, y) moved by [-1] and T1, T2, T3; members with x*y = 0 are dropped."""
    if x % p == 0 or y % p == 0:
        return [(x, y), (-x, -y)]
    ix, iy = _inv(p, x), _inv(p, y)
    return [
        (x, y), (-x, -y), (ix, -y), (-ix, y),
        (-x, iy), (x, -iy), (ix, iy), (-ix, -iy),
    ]


class _HU4(_HuffHigh):
    scheme_id, degree = "hu4", 4
    undefined_locus = "X*Y*Z = 0"
    labels = {"D": "doubhu4", "A2": "daddhu4"}

    def constants(self, c):
        p, A = c.p, _huff_A(c)
        return {"A": A, "32A": 32 * A % p, "16A2": 16 * A * A % p, "16A": 16 * A % p}

    def compress(self, c, X, Y, Z):
        Z2 = Z * Z
        return X * X * Y * Y + Z2 * Z2, X * Y * Z2

    def fiber_affine(self, c, x, y, omega):
        p = c.p
        ix, iy = _inv(p, x), _inv(p, y)
        return [(x, y), (-x, -y), (ix, iy), (-ix, -iy)]

    def dbl(self, ops, k, X, Z):
        # ((r^2+4)^2 + 32A r + 16A^2) / (4 (r + A)(r^2 - 4))
        X2, Z2 = ops.sqr(X), ops.sqr(Z)
        fourZ2 = ops.add(ops.add(Z2, Z2), ops.add(Z2, Z2))
        N = ops.sqr(ops.add(X2, fourZ2))
        N = ops.add(N, ops.cmul(k["32A"], ops.mul(ops.mul(X, Z), Z2)))
        N = ops.add(N, ops.cmul(k["16A2"], ops.sqr(Z2)))
        D = ops.mul(ops.mul(Z, ops.add(X, ops.cmul(k["A"], Z))), ops.sub(X2, fourZ2))
        return N, ops.add(ops.add(D, D), ops.add(D, D))

    def a2(self, ops, k, XP, ZP, XQ, ZQ):
        # ((t + 4)^2 + 16A s + 16A^2) / (rP - rQ)^2
        u, v, w, delta = _cross(ops, XP, ZP, XQ, ZQ)
        four_w = ops.add(ops.add(w, w), ops.add(w, w))
        N = ops.add(ops.sqr(ops.add(u, four_w)), ops.cmul(k["16A"], ops.mul(v, w)))
        N = ops.add(N, ops.cmul(k["16A2"], ops.sqr(w)))
        return N, ops.sqr(delta)


class _HU8(_HuffHigh):
    scheme_id, degree = "hu8", 8
    undefined_locus = "X*Y*Z = 0"
    labels = {"D": "doubhu8", "A2": "daddhu8"}

    def constants(self, c):
        p = c.p
        return {"4": 4, "16": 16, "c": (_huff_A(c) + 2) * _inv(p, 4) % p}

    def compress(self, c, X, Y, Z):
        Z2 = Z * Z
        return (X * X - Z2) * (Y * Y - Z2), X * Y * Z2

    def dbl(self, ops, k, X, Z):
        # (r^2 - 16)^2 / (4r (r^2 + 4A r + 16)) with U = X + 4Z, V = X - 4Z:
        # U^2 V^2 = (X^2 - 16Z^2)^2 and U^2 - V^2 = 16XZ
        Z4 = ops.cmul(k["4"], Z)
        U2, V2 = ops.sqr(ops.add(X, Z4)), ops.sqr(ops.sub(X, Z4))
        T = ops.sub(U2, V2)
        return ops.cmul(k["4"], ops.mul(U2, V2)), ops.mul(T, ops.add(V2, ops.cmul(k["c"], T)))

    def a2(self, ops, k, XP, ZP, XQ, ZQ):
        # (rP rQ - 16)^2 / (rP - rQ)^2; e1 + e2 = 2(u - 16w), e1 - e2 = 8 delta
        ZP4, ZQ4 = ops.cmul(k["4"], ZP), ops.cmul(k["4"], ZQ)
        e1 = ops.mul(ops.sub(XP, ZP4), ops.add(XQ, ZQ4))
        e2 = ops.mul(ops.add(XP, ZP4), ops.sub(XQ, ZQ4))
        return ops.cmul(k["16"], ops.sqr(ops.add(e1, e2))), ops.sqr(ops.sub(e1, e2))


class _HU16(_HuffHigh):
    scheme_id, degree = "hu16", 16
    undefined_locus = "X*Y*Z*(X^2 - Z^2)*(Y^2 - Z^2) = 0"
    labels = {"D": "doubhu16", "A2": "daddhu16"}

    def constants(self, c):
        p, A = c.p, _huff_A(c)
        k = {"64": 64, "1024A": 1024 * A % p, "4096A2": 4096 * A * A % p}
        k.update(_derived_doubling("hu16", (c.a, c.b), c.p))
        return k

    def compress(self, c, X, Y, Z):
        # f16 = u + 16/u with u = (x^2 - 1)(y^2 - 1)/(xy), the hu8 value
        Z2 = Z * Z
        U = (X * X - Z2) * (Y * Y - Z2)
        XYZ2 = X * Y * Z2
        return U * U + 16 * XYZ2 * XYZ2, XYZ2 * U

    def fiber_affine(self, c, x, y, omega):
        p = c.p
        pts = _huff8_orbit(p, x, y)
        if (x * x - 1) % p and (y * y - 1) % p:
            # image under (x, y) -> ((y+1)/(1-y), (x+1)/(1-x)), then the hu8 orbit
            x2 = (y + 1) * _inv(p, 1 - y) % p
            y2 = (x + 1) * _inv(p, 1 - x) % p
            pts += _huff8_orbit(p, x2, y2)
        return pts

    dbl = staticmethod(lambda ops, k, X, Z: _poly_doubling(ops, k, X, Z))

    def a2(self, ops, k, XP, ZP, XQ, ZQ):
        # ((t + 64)^2 + 1024A s + 4096A^2) / (rP - rQ)^2
        u, v, w, delta = _cross(ops, XP, ZP, XQ, ZQ)
        N = ops.sqr(ops.add(u, ops.cmul(k["64"], w)))
        N = ops.add(N, ops.cmul(k["1024A"], ops.mul(v, w)))
        N = ops.add(N, ops.cmul(k["4096A2"], ops.sqr(w)))
        return N, ops.sqr(delta)


class _MONT2(_Scheme):
    scheme_id, model, degree = "mont2", Montgomery, 2
    equal_inputs_singular = True
    undefined_locus = "Z = 0 (the neutral point)"
    labels = {"D": "mont_xdbl", "A2": "mont_xadd"}

    def constants(self, c):
        return {"a24": c.a24()}

    def compress(self, c, X, Y, Z):
        return X, Z

    def fiber_affine(self, c, x, y, omega):
        return [(x, y), (x, -y)]

    def dbl(self, ops, k, X, Z):
        s2, t2 = ops.sqr(ops.add(X, Z)), ops.sqr(ops.sub(X, Z))
        T = ops.sub(s2, t2)
        return ops.mul(s2, t2), ops.mul(T, ops.add(t2, ops.cmul(k["a24"], T)))

    def a2(self, ops, k, XP, ZP, XQ, ZQ):
        # ((rP rQ - 1) / (rP - rQ))^2
        e1 = ops.mul(ops.sub(XP, ZP), ops.add(XQ, ZQ))
        e2 = ops.mul(ops.add(XP, ZP), ops.sub(XQ, ZQ))
        return ops.sqr(ops.add(e1, e2)), ops.sqr(ops.sub(e1, e2))


_SCHEMES = {s.scheme_id: s for s in (
    _ED2(), _ED4(), _ED8(), _GH2(), _GH6(), _H18(), _HU2(), _HU4(), _HU8(), _HU16(), _MONT2()
)}


def _derived_doubling(name, const_values, p):
    """Coefficient lists of the stored, oracle-derived doubling formula."""
    formula = load_derived(name)
    num, den = formula.r_coefficients(const_values, p)
    deg = max(e[0] for e in list(num) + list(den))
    nc, dc = [0] * (deg + 1), [0] * (deg + 1)
    for (i,), c in num.items():
        nc[i] = c
    for (i,), c in den.items():
        dc[i] = c
    return {"dbl_num": nc, "dbl_den": dc}


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------


class SchemeDescriptor:
    """A compression scheme bound to one curve, with constants folded in.

    Immutable after construction; ``with_constant`` returns a modified copy
    (used to check that the harness catches a corrupted formula).
    """

    def __init__(self, scheme_id, curve):
        sid = str(scheme_id).lower()
        if sid not in _SCHEMES:
            raise ConfigError(f"unknown scheme {scheme_id!r}; expected one of {', '.join(SCHEME_IDS)}")
        impl = _SCHEMES[sid]
        if not isinstance(curve, impl.model):
            raise ConfigError(
                f"scheme {sid} needs a {impl.model.model} curve, got {curve.model}"
            )
        impl.check_curve(curve)
        self._impl = impl
        self.scheme_id = sid
        self.model = curve
        self.degree = impl.degree
        self.constants = impl.constants(curve)
        self.ops = ModOps(curve.p)

    @property
    def p(self):
        return self.model.p

    @property
    def labels(self):
        return dict(self._impl.labels)

    @property
    def has_a1(self):
        return self._impl.a1 is not None

    @property
    def needs_omega(self):
        return self._impl.needs_omega

    @property
    def equal_inputs_singular(self):
        return self._impl.equal_inputs_singular

    @property
    def undefined_locus(self):
        return self._impl.undefined_locus

    def with_constant(self, name, value):
        if name not in self.constants:
            raise ConfigError(f"scheme {self.scheme_id} has no constant {name!r}")
        clone = object.__new__(SchemeDescriptor)
        clone.__dict__.update(self.__dict__)
        clone.constants = dict(self.constants)
        clone.constants[name] = value
        return clone

    def value(self, X, Z=1):
        return CompressedValue(X, Z, self)

    def __repr__(self):
        return f"SchemeDescriptor({self.scheme_id}, {self.model})"


def make_scheme(scheme_id, curve):
    return SchemeDescriptor(scheme_id, curve)


def compress(scheme, P):
    """f(P) as a projective pair; raises UndefinedAtPoint on the undefined locus."""
    if P.curve != scheme.model:
        raise ConfigError(f"{P} is not a point of {scheme.model}")
    X, Z = scheme._impl.compress(scheme.model, P.X, P.Y, P.Z)
    if Z % scheme.p == 0:
        raise UndefinedAtPoint(
            f"{scheme.scheme_id} is undefined at {P}: denominator {scheme.undefined_locus}"
        )
    return CompressedValue(X, Z, scheme)


def compress_value(scheme, P):
    """compress() as an int, or None where f is undefined."""
    try:
        return compress(scheme, P).value
    except UndefinedAtPoint:
        return None


def fiber(scheme, P, require_omega=True):
    """Predicted preimage of f(P): the rational orbit members, as points.

    With ``require_omega=False`` the cube-root-of-unity members are simply
    left out when p != 1 mod 3 instead of raising OmegaUnavailable.
    """
    curve = scheme.model
    omega = curve.field.cube_root_of_unity() if scheme.needs_omega else None
    if scheme.needs_omega and omega is None and require_omega:
        raise OmegaUnavailable(f"{scheme.scheme_id} fibers need p = 1 mod 3, got p = {curve.p}")
    if P.Z == 0:
        raise UndefinedAtPoint(f"fiber of a point at infinity {P} is not defined for {scheme.scheme_id}")
    x, y = P.xy
    try:
        raw = scheme._impl.fiber_affine(curve, x, y, omega)
    except ValueError:  # modular inverse of zero: P is on the undefined locus
        raise UndefinedAtPoint(f"{scheme.scheme_id} fiber undefined at {P}") from None
    out = set()
    for u, v in raw:
        Q = curve.point(u, v, 1, check=False)
        if curve.on_curve(Q):
            out.add(Q)
    return out


def _check(scheme, N, D):
    if N % scheme.p == 0 and D % scheme.p == 0:
        raise DegenerateOutput(f"{scheme.scheme_id} formula produced (0:0)")
    return CompressedValue(N, D, scheme)


def double_compressed(scheme, rP, ops=None):
    """f([2]P) from f(P)."""
    ops = ops or scheme.ops
    N, D = scheme._impl.dbl(ops, scheme.constants, rP.X, rP.Z)
    return _check(scheme, N, D)


def _guard_equal(scheme, rP, rQ):
    if scheme.equal_inputs_singular and rP == rQ:
        raise EqualInputs(f"{scheme.scheme_id} differential addition needs f(P) != f(Q)")


def diff_add_mul(scheme, rP, rQ, ops=None):
    """f(P+Q) * f(P-Q) from f(P), f(Q) (the A2 map)."""
    _guard_equal(scheme, rP, rQ)
    ops = ops or scheme.ops
    N, D = scheme._impl.a2(ops, scheme.constants, rP.X, rP.Z, rQ.X, rQ.Z)
    return _check(scheme, N, D)


def diff_add_sum(scheme, rP, rQ, ops=None):
    """f(P+Q) + f(P-Q) from f(P), f(Q) (the A1 map)."""
    if not scheme.has_a1:
        raise UnsupportedScheme(f"{scheme.scheme_id} has no sum-form differential addition")
    ops = ops or scheme.ops
    N, D = scheme._impl.a1(ops, scheme.constants, rP.X, rP.Z, rQ.X, rQ.Z)
    return _check(scheme, N, D)


ROUTES = ("A2", "A1")


def ladder_add(scheme, rP, rQ, rPmQ, route="A2", ops=None):
    """f(P+Q) from f(P), f(Q), f(P-Q).

    ``route="A2"`` divides A2(rP, rQ) by f(P-Q); ``route="A1"`` subtracts
    f(P-Q) from A1(rP, rQ). Both are done by projective cross-multiplication.
    """
    ops = ops or scheme.ops
    if route == "A2":
        if rPmQ.X == 0:
            raise ZeroBaseValue(f"{scheme.scheme_id}: f(P-Q) = 0 cannot divide A2")
        _guard_equal(scheme, rP, rQ)
        N, D = scheme._impl.a2(ops, scheme.constants, rP.X, rP.Z, rQ.X, rQ.Z)
        return _check(scheme, ops.mul(N, rPmQ.Z), ops.mul(D, rPmQ.X))
    if route == "A1":
        if not scheme.has_a1:
            raise UnsupportedScheme(f"{scheme.scheme_id} has no sum-form differential addition")
        N, D = scheme._impl.a1(ops, scheme.constants, rP.X, rP.Z, rQ.X, rQ.Z)
        X = ops.sub(ops.mul(N, rPmQ.Z), ops.mul(D, rPmQ.X))
        return _check(scheme, X, ops.mul(D, rPmQ.Z))
    raise ConfigError(f"route must be one of {ROUTES}, got {route!r}")


# ---------------------------------------------------------------------------
# polynomial relations from the degree arguments
# ---------------------------------------------------------------------------


def edwards_y2_relation(P):
    """a*x^2 + r = 1 + d*x^2*r at r = y^2, as x^2 (d r - a) - r + 1."""
    c = P.curve
    x, y = P.xy
    r = y * y
    return (x * x * (r * c.d - c.a) - r + 1) % c.p


def edwards_x2y2_relation(P):
    """a x^4 - (d r + 1) x^2 + r at r = x^2 y^2."""
    c = P.curve
    x, y = P.xy
    r, x2 = x * x * y * y, x * x
    return (c.a * x2 * x2 - (c.d * r + 1) * x2 + r) % c.p


def huff_deg4_relation(P):
    """t^2 - r t + 1 at t = xy, r = f4(P)."""
    c = P.curve
    x, y = P.xy
    t = x * y % c.p
    r = (t + _inv(c.p, t)) % c.p
    return (t * t - r * t + 1) % c.p


def huff_deg8_relation(P):
    """ab t^4 - ab r t^3 - (a^2 r + b^2 r + 2ab) t^2 - ab r t + ab at t = xy, r = f8(P)."""
    c = P.curve
    p, a, b = c.p, c.a, c.b
    x, y = P.xy
    t = x * y % p
    r = ((x * x - 1) * (y * y - 1) * _inv(p, t)) % p
    ab = a * b
    return (ab * t ** 4 - ab * r * t ** 3 - (a * a * r + b * b * r + 2 * ab) * t * t - ab * r * t + ab) % p


def hessian_deg18_relation(P):
    """-r^3 + R r^2 - d r + 1 at r = xy, R = f18(P), on x^3 + y^3 + 1 = dxy."""
    c = P.curve
    p = c.p
    x, y = P.xy
    r = x * y % p
    R = (x ** 3 * y ** 3 + x ** 3 + y ** 3) * _inv(p, r * r) % p
    return (-r ** 3 + R * r * r - c.d * r + 1) % p
