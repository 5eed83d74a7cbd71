import random

import pytest

from xline.curves import GeneralizedHessian, Huff, Montgomery, TwistedEdwards
from xline.field import FieldCtx

P61 = (1 << 61) - 1


def nonsquares(p, start=2):
    F = FieldCtx(p)
    return (v for v in range(start, p) if not F.is_square(v))


def complete_edwards(p, a=1):
    """a square, d/a a non-square: the addition law has no exceptions."""
    F = FieldCtx(p)
    assert F.is_square(a)
    for n in nonsquares(p):
        d = a * n % p
        if d != a:
            return TwistedEdwards(p, a=a, d=d)


def curve_for(scheme_id, p, variant=0):
    """Admissible test curve for a scheme; ``variant`` picks a second one."""
    fam = scheme_id[:2]
    if fam == "ed":
        return complete_edwards(p, a=[1, 4][variant])
    if scheme_id == "h18":
        return GeneralizedHessian(p, a=1, d=[7, 11][variant])
    if fam == "gh":
        return GeneralizedHessian(p, a=[2, 3][variant], d=[5, 7][variant])
    if fam == "hu":
        return Huff(p, a=[2, 3][variant], b=[5, 7][variant])
    return Montgomery(p, A=[6, 10][variant], B=[1, 3][variant])


@pytest.fixture
def rng():
    return random.Random(12345)
