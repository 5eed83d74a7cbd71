"""Prime-field arithmetic.

Two layers live here. ``FieldCtx`` works on plain Python ints in ``[0, p)``
and is what the curve and compression code uses in hot loops. ``FieldElement``
wraps a residue together with its context for the public, operator-based API.
"""

from __future__ import annotations

import operator
import random

from .errors import ConfigError, DivisionByZero

WORD_BITS = 64

# Deterministic Miller-Rabin witnesses for n < 3.3e24 (covers all of 2^64).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_probable_prime(n, rounds=24, rng=None):
    """Miller-Rabin; deterministic below 2^64, probabilistic above."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def witness(a):
        x = pow(a, d, n)
        if x in (1, n - 1):
            return False
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                return False
        return True

    bases = list(_MR_BASES)
    if n.bit_length() > WORD_BITS:
        rng = rng or random.Random(n)
        bases += [rng.randrange(2, n - 1) for _ in range(rounds)]
    return not any(witness(a) for a in bases)


class FieldCtx:
    """Arithmetic modulo an odd prime ``p >= 5``.

    ``backend`` is ``"word"`` for moduli below 2^64 and ``"bignum"`` otherwise.
    Both use Python ints; the tag only records which regime the caller is in
    (exhaustive desk-scale checks vs. cryptographic-size spot checks).
    """

    __slots__ = ("p", "backend", "_omega", "_sqrt_table")

    def __init__(self, p):
        if isinstance(p, bool) or not isinstance(p, int):
            raise ConfigError(f"modulus must be an int, got {type(p).__name__}")
        if p < 5:
            raise ConfigError(f"modulus must be >= 5, got {p}")
        if not is_probable_prime(p):
            raise ConfigError(f"modulus {p} is not prime")
        self.p = p
        self.backend = "word" if p.bit_length() <= WORD_BITS else "bignum"
        self._omega = False  # lazily computed; False = not yet looked up
        self._sqrt_table = None

    def __repr__(self):
        return f"FieldCtx({self.p})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and other.p == self.p

    def __hash__(self):
        return hash(("FieldCtx", self.p))

    def __call__(self, value):
        return FieldElement(self, value)

    # -- int-level arithmetic ------------------------------------------------

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def is_square(self, a):
        a %= self.p
        return a == 0 or pow(a, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, a):
        """Smaller of the two square roots of ``a``, or None for a non-residue."""
        p = self.p
        a %= p
        if a == 0:
            return 0
        if self._sqrt_table is not None:
            return self._sqrt_table.get(a)
        if pow(a, (p - 1) // 2, p) != 1:
            return None
        if p % 4 == 3:
            s = pow(a, (p + 1) // 4, p)
        else:
            s = self._tonelli_shanks(a)
        return min(s, p - s)

    def _tonelli_shanks(self, a):
        p = self.p
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
        return r

    def build_sqrt_table(self):
        """Precompute all square roots; only sensible for small p."""
        if self._sqrt_table is None:
            table = {}
            p = self.p
            for s in range((p - 1) // 2, 0, -1):
                table[s * s % p] = s
            self._sqrt_table = table
        return self

    def cube_root_of_unity(self):
        """Smaller primitive cube root of unity, or None when p != 1 mod 3."""
        if self._omega is False:
            if self.p % 3 != 1:
                self._omega = None
            else:
                s = self.sqrt(-3)
                w1 = (s - 1) * self.inv(2) % self.p
                w2 = w1 * w1 % self.p
                self._omega = min(w1, w2)
        return self._omega

    def cube_roots(self, a):
        """All ``x`` with ``x^3 = a``, ascending."""
        return self.roots([-a, 0, 0, 1])

    def random(self, rng):
        return rng.randrange(self.p)

    def random_nonzero(self, rng):
        return rng.randrange(1, self.p)

    # -- univariate polynomials (coefficient lists, low degree first) ---------

    def poly_eval(self, coeffs, x):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def roots(self, coeffs):
        """Distinct roots in F_p of a polynomial, ascending.

        Uses gcd with x^p - x and deterministic equal-degree splitting, so
        the cost is polylogarithmic in p.
        """
        p = self.p
        f = _trim([c % p for c in coeffs])
        if len(f) <= 1:
            if f and f[0]:
                return []
            raise ValueError("zero polynomial has every element as a root")
        found = []
        if f[0] == 0:
            found.append(0)
            while f[0] == 0:
                f = f[1:]
        if len(f) == 1:
            return found
        xp = _poly_powmod(self, [0, 1], p, f)
        g = _poly_gcd(self, f, _poly_sub(self, xp, [0, 1]))
        found.extend(self._split(g))
        return sorted(found)

    def _split(self, g):
        p = self.p
        g = _monic(self, g)
        deg = len(g) - 1
        if deg == 0:
            return []
        if deg == 1:
            return [-g[0] % p]
        if deg == 2:
            disc = (g[1] * g[1] - 4 * g[0]) % p
            s = self.sqrt(disc)
            inv2 = self.inv(2)
            return [(-g[1] + s) * inv2 % p, (-g[1] - s) * inv2 % p]
        delta = 1
        while True:
            h = _poly_powmod(self, [delta, 1], (p - 1) // 2, g)
            h = _poly_sub(self, h, [1])
            d = _poly_gcd(self, g, h)
            if 0 < len(d) - 1 < deg:
                q = _poly_divmod(self, g, d)[0]
                return self._split(d) + self._split(q)
            delta += 1


def _trim(f):
    while f and f[-1] == 0:
        f = f[:-1]
    return f


def _monic(F, f):
    inv = F.inv(f[-1])
    return [c * inv % F.p for c in f]


def _poly_sub(F, f, g):
    n = max(len(f), len(g))
    f = f + [0] * (n - len(f))
    g = g + [0] * (n - len(g))
    return _trim([(x - y) % F.p for x, y in zip(f, g)])


def _poly_mul(F, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(g):
                out[i + j] += x * y
    return _trim([c % F.p for c in out])


def _poly_divmod(F, f, g):
    p = F.p
    f = list(f)
    inv = F.inv(g[-1])
    dg = len(g) - 1
    q = [0] * max(len(f) - dg, 1)
    while len(f) - 1 >= dg and f:
        c = f[-1] * inv % p
        shift = len(f) - 1 - dg
        q[shift] = c
        for i, y in enumerate(g):
            f[shift + i] = (f[shift + i] - c * y) % p
        f = _trim(f)
    return _trim(q), f


def _poly_gcd(F, f, g):
    while g:
        f, g = g, _poly_divmod(F, f, g)[1]
    return _monic(F, f) if f else f


def _poly_powmod(F, base, e, mod):
    result = [1]
    base = _poly_divmod(F, base, mod)[1]
    while e:
        if e & 1:
            result = _poly_divmod(F, _poly_mul(F, result, base), mod)[1]
        base = _poly_divmod(F, _poly_mul(F, base, base), mod)[1]
        e >>= 1
    return result


class FieldElement:
    """Immutable canonical residue modulo ``ctx.p``."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx, value):
        if isinstance(value, FieldElement):
            if value.ctx != ctx:
                raise ConfigError("field element from a different field")
            value = value.value
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "value", int(value) % ctx.p)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise ConfigError("mixed fields in arithmetic")
            return other.value
        if isinstance(other, int):
            return other % self.ctx.p
        return NotImplemented

    def _binary(op):
        def forward(self, other):
            o = self._coerce(other)
            if o is NotImplemented:
                return o
            return FieldElement(self.ctx, op(self.ctx, self.value, o))

        def backward(self, other):
            o = self._coerce(other)
            if o is NotImplemented:
                return o
            return FieldElement(self.ctx, op(self.ctx, o, self.value))

        return forward, backward

    __add__, __radd__ = _binary(FieldCtx.add)
    __sub__, __rsub__ = _binary(FieldCtx.sub)
    __mul__, __rmul__ = _binary(FieldCtx.mul)
    __truediv__, __rtruediv__ = _binary(FieldCtx.div)
    del _binary

    def __neg__(self):
        return FieldElement(self.ctx, -self.value)

    def __pow__(self, e):
        return FieldElement(self.ctx, self.ctx.pow(self.value, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.ctx.p
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.p, self.value))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.ctx.p})"

    def inverse(self):
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def sqrt(self):
        s = self.ctx.sqrt(self.value)
        return None if s is None else FieldElement(self.ctx, s)

    def is_square(self):
        return self.ctx.is_square(self.value)


_OPS = {"add": operator.add, "sub": operator.sub, "mul": operator.mul, "div": operator.truediv}


def fe_arith(a, b, op):
    """Apply ``op`` in {"add", "sub", "mul", "div"} to two field elements."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ConfigError(f"unknown field operation {op!r}") from None
    return fn(a, b)


def fe_sqrt(a):
    """Smaller square root of ``a`` or None (no root)."""
    return a.sqrt()


def find_cube_root_of_unity(ctx):
    """Smaller root of w^2 + w + 1 as a FieldElement, or None if absent."""
    w = ctx.cube_root_of_unity()
    return None if w is None else ctx(w)
