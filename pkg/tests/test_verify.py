import json

import pytest

from xline.compression import SchemeDescriptor
from xline.curves import GeneralizedHessian, Huff, TwistedEdwards
from xline.errors import ConfigError, FieldTooLarge
from xline.verify import (
    VerificationReport,
    verify,
    verify_scheme_exhaustive,
    verify_scheme_sampled,
)

from conftest import P61


def test_gh6_exhaustive_pass():
    rep = verify_scheme_exhaustive("gh6", GeneralizedHessian(103, a=2, d=5))
    assert rep.verdict == "pass"
    names = [c.name for c in rep.checks]
    assert {"closure", "fiber", "doub6", "dadd6", "ladder"} <= set(names)
    for c in rep.checks:
        assert c.skipped_degenerate <= c.skip_bound


def test_scheme_model_mismatch():
    with pytest.raises(ConfigError):
        verify_scheme_exhaustive("hu8", TwistedEdwards(101, a=1, d=3))


def test_corrupted_constant_is_caught():
    S = SchemeDescriptor("gh6", GeneralizedHessian(103, a=2, d=5))
    bad = S.with_constant("2a2", (S.constants["2a2"] + 1) % 103)
    rep = verify_scheme_exhaustive(bad)
    assert rep.verdict == "fail"
    doub = rep.check("doub6")
    assert doub.failures > 0 and doub.examples
    assert rep.check("dadd6").failures == 0


def test_sampled_hu8_large_prime():
    rep = verify_scheme_sampled("hu8", Huff(P61, a=2, b=5), trials=1000, seed=1)
    assert rep.verdict == "pass"
    assert rep.check("daddhu8").pairs_tested >= 990


def test_sampled_is_deterministic():
    H = Huff(10007, a=2, b=5)
    a = verify_scheme_sampled("hu4", H, trials=50, seed=3).to_dict()
    b = verify_scheme_sampled("hu4", H, trials=50, seed=3).to_dict()
    assert a == b


@pytest.mark.parametrize("trials", [0, -1])
def test_trials_must_be_positive(trials):
    with pytest.raises(ConfigError):
        verify_scheme_sampled("hu4", Huff(10007, a=2, b=5), trials=trials)


def test_exhaustive_size_guard():
    with pytest.raises(FieldTooLarge):
        verify_scheme_exhaustive("hu2", Huff(20011, a=2, b=5))


def test_report_json_roundtrip():
    rep = verify("ed4", TwistedEdwards(101, a=1, d=3))
    doc = json.loads(rep.to_json())
    assert doc["schema"] == "xline.verification/1"
    assert doc["verdict"] == "pass"
    back = VerificationReport.from_dict(doc)
    assert back.to_dict() == rep.to_dict()
    assert "doub4ED" in rep.table()
    with pytest.raises(ConfigError):
        VerificationReport.from_dict({"schema": "other"})


def test_auto_mode_selection():
    assert verify("hu2", Huff(101, a=2, b=5)).mode == "exhaustive"
    assert verify("hu2", Huff(10007, a=2, b=5), trials=20).mode == "sampled"


def test_omega_note_when_missing():
    rep = verify_scheme_exhaustive("gh6", GeneralizedHessian(101, a=2, d=5))
    assert rep.verdict == "pass"
    assert "omega" in rep.check("fiber").note
