import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xline.compression import (
    SCHEME_IDS,
    CompressedValue,
    SchemeDescriptor,
    compress,
    diff_add_mul,
    diff_add_sum,
    double_compressed,
    edwards_x2y2_relation,
    edwards_y2_relation,
    fiber,
    hessian_deg18_relation,
    huff_deg4_relation,
    huff_deg8_relation,
    ladder_add,
)
from xline.curves import GeneralizedHessian, Huff, Montgomery, TwistedEdwards
from xline.errors import (
    ConfigError,
    DegenerateOutput,
    EqualInputs,
    InvalidCurve,
    OmegaUnavailable,
    UndefinedAtPoint,
    UnsupportedScheme,
    ZeroBaseValue,
)
from xline.formulas import load_derived

from conftest import P61, curve_for

DEGREES = {"ed2": 2, "ed4": 4, "ed8": 8, "gh2": 2, "gh6": 6, "h18": 18,
           "hu2": 2, "hu4": 4, "hu8": 8, "hu16": 16, "mont2": 2}


def scheme(sid, p=P61, variant=0):
    return SchemeDescriptor(sid, curve_for(sid, p, variant))


def test_descriptor_invariants():
    for sid in SCHEME_IDS:
        S = scheme(sid)
        assert S.degree == DEGREES[sid]
    with pytest.raises(ConfigError):
        SchemeDescriptor("hu8", TwistedEdwards(101, a=1, d=3))
    with pytest.raises(ConfigError):
        SchemeDescriptor("xx", Huff(101, a=2, b=5))
    with pytest.raises(InvalidCurve):
        SchemeDescriptor("h18", GeneralizedHessian(101, a=2, d=5))


def test_compressed_value_projective_equality():
    S = scheme("hu2", 101)
    assert S.value(3, 1) == S.value(6, 2)
    assert S.value(1, 0) == S.value(5, 0)
    assert S.value(1, 0).value is None
    with pytest.raises(DegenerateOutput):
        CompressedValue(0, 0, S)


def test_compress_neutral_examples():
    H = Huff(10007, a=2, b=5)
    assert compress(SchemeDescriptor("hu2", H), H.neutral).normalized() == (0, 1)
    E = TwistedEdwards(10007, a=1, d=3)
    assert compress(SchemeDescriptor("ed2", E), E.neutral).normalized() == (1, 1)


def test_h18_matches_affine_evaluation():
    G = GeneralizedHessian(10007, a=1, d=7)
    S = SchemeDescriptor("h18", G)
    rng = random.Random(4)
    p = 10007
    for _ in range(50):
        P = G.sample_point(rng=rng)
        x, y = P.xy
        if x * y % p == 0:
            continue
        want = (x**3 * y**3 + x**3 + y**3) * pow(x * x * y * y, -1, p) % p
        assert compress(S, P).value == want


@pytest.mark.parametrize("sid,pt", [("hu4", (0, 0)), ("hu8", (0, 0)), ("h18", None)])
def test_undefined_locus(sid, pt):
    S = scheme(sid, 103)
    c = S.model
    P = c.point(*pt) if pt else c.point(1, -1, 0)
    with pytest.raises(UndefinedAtPoint):
        compress(S, P)


def test_hu16_undefined_at_x_pm1():
    H = Huff(103, a=2, b=5)
    S = SchemeDescriptor("hu16", H)
    with pytest.raises(UndefinedAtPoint):
        compress(S, H.point(1, 1))


def test_doubling_fixed_points():
    S = scheme("ed2", 10007)
    assert double_compressed(S, S.value(1)) == S.value(1)
    S = scheme("hu2", 10007)
    assert double_compressed(S, S.value(0)) == S.value(0)


def test_gh6_doubling_matches_oracle():
    G = GeneralizedHessian(10007, a=2, d=5)
    S = SchemeDescriptor("gh6", G)
    rng = random.Random(8)
    for _ in range(100):
        P = G.sample_point(rng=rng)
        assert double_compressed(S, compress(S, P)) == compress(S, G.double(P))


@pytest.mark.parametrize("sid", ["gh6", "h18", "hu4", "hu8", "hu16", "ed8", "hu2", "ed2", "ed4", "mont2", "gh2"])
def test_a2_is_symmetric(sid):
    S = scheme(sid)
    rng = random.Random(sid)
    for _ in range(20):
        a, b = S.value(rng.randrange(P61)), S.value(rng.randrange(P61))
        assert diff_add_mul(S, a, b) == diff_add_mul(S, b, a)


@pytest.mark.parametrize("sid", ["gh6", "h18", "hu4", "hu8", "hu16", "mont2"])
def test_equal_inputs_rejected(sid):
    S = scheme(sid)
    with pytest.raises(EqualInputs):
        diff_add_mul(S, S.value(5), S.value(10, 2))


def test_gh2_sum_form():
    G = GeneralizedHessian(10007, a=2, d=5)
    S = SchemeDescriptor("gh2", G)
    rng = random.Random(6)
    for _ in range(100):
        P, Q = G.sample_point(rng=rng), G.sample_point(rng=rng)
        try:
            rP, rQ = compress(S, P), compress(S, Q)
            s, d = compress(S, P + Q), compress(S, P - Q)
        except UndefinedAtPoint:
            continue
        got = diff_add_sum(S, rP, rQ)
        assert got == S.value(s.X * d.Z + d.X * s.Z, s.Z * d.Z)
        assert diff_add_sum(S, rQ, rP) == got
        assert ladder_add(S, rP, rQ, d, route="A1") == ladder_add(S, rP, rQ, d, route="A2") == s


def test_sum_form_unsupported_elsewhere():
    with pytest.raises(UnsupportedScheme):
        diff_add_sum(scheme("ed8"), scheme("ed8").value(2), scheme("ed8").value(3))


def test_ladder_add_neutral_and_zero_base():
    S = scheme("ed4", 10007)
    rP = compress(S, S.model.sample_point(seed=3))
    r_o = compress(S, S.model.neutral)
    assert ladder_add(S, rP, r_o, rP) == rP
    H = SchemeDescriptor("hu8", Huff(10007, a=2, b=5))
    with pytest.raises(ZeroBaseValue):
        ladder_add(H, H.value(3), H.value(7), H.value(0))
    with pytest.raises(ConfigError):
        ladder_add(H, H.value(3), H.value(7), H.value(2), route="A3")


def test_hu8_ladder_add_matches_oracle():
    H = Huff(10007, a=2, b=5)
    S = SchemeDescriptor("hu8", H)
    rng = random.Random(10)
    for _ in range(100):
        P, Q = H.sample_point(rng=rng), H.sample_point(rng=rng)
        try:
            got = ladder_add(S, compress(S, P), compress(S, Q), compress(S, P - Q))
            want = compress(S, P + Q)
        except (UndefinedAtPoint, DegenerateOutput):
            continue
        assert got == want


def test_with_constant_returns_a_copy():
    S = scheme("gh6", 103)
    M = S.with_constant("ad", 1)
    assert S.constants["ad"] != 1 and M.constants["ad"] == 1
    with pytest.raises(ConfigError):
        S.with_constant("nope", 1)


def test_stored_doublings_are_wired_in():
    for sid, consts in (("ed8", ("a", "d")), ("hu16", ("a", "b"))):
        S = scheme(sid)
        f = load_derived(sid)
        num, den = f.r_coefficients(tuple(getattr(S.model, n) for n in consts), S.p)
        assert S.constants["dbl_num"] == [num.get((i,), 0) for i in range(len(S.constants["dbl_num"]))]
        assert S.constants["dbl_den"] == [den.get((i,), 0) for i in range(len(S.constants["dbl_den"]))]


def test_fiber_examples():
    G = GeneralizedHessian(10009, a=2, d=5)
    S = SchemeDescriptor("gh6", G)
    P = G.sample_point(seed=1)
    F = fiber(S, P)
    assert G.negate(P) in F and len(F) == 6
    G2 = GeneralizedHessian(10007, a=2, d=5)  # 10007 = 2 mod 3
    with pytest.raises(OmegaUnavailable):
        fiber(SchemeDescriptor("gh6", G2), G2.sample_point(seed=1))
    E = TwistedEdwards(10009, a=4, d=3)
    S8 = SchemeDescriptor("ed8", E)
    Q = E.sample_point(seed=2)
    F8 = fiber(S8, Q)
    assert len(F8) <= 8
    assert {compress(S8, R) for R in F8} == {compress(S8, Q)}


def test_omega_free_fiber_when_requested():
    G = GeneralizedHessian(10007, a=1, d=7)
    S = SchemeDescriptor("h18", G)
    P = G.sample_point(seed=4)
    F = fiber(S, P, require_omega=False)
    assert len(F) == 6
    assert {compress(S, Q) for Q in F} == {compress(S, P)}


# -- polynomial relations ---------------------------------------------------


@pytest.mark.parametrize("a", [1, 4])
def test_edwards_relations_exhaustive(a):
    E = curve_for("ed4", 101, 0 if a == 1 else 1)
    for P in E.enumerate_points():
        assert edwards_y2_relation(P) == 0
        assert edwards_x2y2_relation(P) == 0


def test_printed_edwards_quadratic_lacks_a_constant():
    # x^2 (r d - 1) - r is off by exactly -1 at every point (a = 1)
    E = TwistedEdwards(101, a=1, d=3)
    for P in E.enumerate_points():
        x, y = P.xy
        r = y * y
        assert (x * x * (r * E.d - 1) - r) % 101 == 100


def test_huff_and_hessian_relations_exhaustive():
    H = Huff(103, a=3, b=7)
    for P in H.enumerate_points():
        if P.Z and P.X and P.Y:
            assert huff_deg4_relation(P) == 0
            assert huff_deg8_relation(P) == 0
    G = GeneralizedHessian(103, a=1, d=7)
    for P in G.enumerate_points():
        if P.Z and P.X and P.Y:
            assert hessian_deg18_relation(P) == 0


# -- identity transport on random large-field points -------------------------


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SCHEME_IDS), st.integers(min_value=0, max_value=2**40))
def test_identities_random_points(sid, seed):
    S = scheme(sid)
    c = S.model
    rng = random.Random(seed)
    P, Q = c.sample_point(rng=rng), c.sample_point(rng=rng)
    try:
        rP, rQ = compress(S, P), compress(S, Q)
        r2, s, d = compress(S, c.double(P)), compress(S, P + Q), compress(S, P - Q)
    except UndefinedAtPoint:
        return
    assert double_compressed(S, rP) == r2
    assert diff_add_mul(S, rP, rQ) == S.value(s.X * d.X, s.Z * d.Z)
    assert ladder_add(S, rP, rQ, d) == s
    for R in fiber(S, P, require_omega=False):
        assert compress(S, R) == rP
