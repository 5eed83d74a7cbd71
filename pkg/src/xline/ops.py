"""Field-operation back ends for straight-line formula programs.

Every projective D/A formula is written once against the small interface
below (``mul``, ``sqr``, ``cmul``, ``add``, ``sub``). ``ModOps`` evaluates it;
``CountingOps`` evaluates it *and* tallies the operation mix, which is what
the bench numbers are built from.
"""

from __future__ import annotations

from collections import Counter


class ModOps:
    """Plain arithmetic modulo p on canonical ints."""

    __slots__ = ("p",)

    def __init__(self, p):
        self.p = p

    def mul(self, a, b):
        return a * b % self.p

    def sqr(self, a):
        return a * a % self.p

    def cmul(self, c, a):
        """Multiplication by a curve or formula constant."""
        return c * a % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p


class CountingOps(ModOps):
    """ModOps that also records how many of each operation ran.

    Counter keys: ``M`` (general multiplication), ``S`` (squaring),
    ``C`` (multiplication by a constant), ``a`` (addition or subtraction).
    """

    __slots__ = ("counts",)

    def __init__(self, p):
        super().__init__(p)
        self.counts = Counter()

    def mul(self, a, b):
        self.counts["M"] += 1
        return a * b % self.p

    def sqr(self, a):
        self.counts["S"] += 1
        return a * a % self.p

    def cmul(self, c, a):
        self.counts["C"] += 1
        return c * a % self.p

    def add(self, a, b):
        self.counts["a"] += 1
        return (a + b) % self.p

    def sub(self, a, b):
        self.counts["a"] += 1
        return (a - b) % self.p

    def snapshot(self):
        return {k: self.counts.get(k, 0) for k in ("M", "S", "C", "a")}

    def reset(self):
        self.counts.clear()
