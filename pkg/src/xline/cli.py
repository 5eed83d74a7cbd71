"""Command-line entry point: ``xline verify|ladder|search|bench``.

Exit codes: 0 success, 1 semantic failure (verification failed, degenerate
ladder, formula not found, oracle mismatch), 2 usage or configuration error.
"""

from __future__ import annotations

import json
import random
import sys

import click

from .compression import SCHEME_IDS, SchemeDescriptor, compress
from .curves import curve_from_json, make_curve
from .errors import ConfigError, DegenerateOutput, InvalidScalar, NotFound, UndefinedAtPoint, XlineError
from .ladder import LadderState, ladder_step, scalar_mul_compressed
from .ops import CountingOps

P61 = (1 << 61) - 1

SCHEME_MODEL = {
    "ed2": "edwards", "ed4": "edwards", "ed8": "edwards",
    "gh2": "generalized_hessian", "gh6": "generalized_hessian", "h18": "generalized_hessian",
    "hu2": "huff", "hu4": "huff", "hu8": "huff", "hu16": "huff", "mont2": "montgomery",
}

# curves used by ``bench`` when no coefficients are given
BENCH_DEFAULTS = {
    "edwards": {"a": 1, "d": 3},
    "generalized_hessian": {"a": 2, "d": 5},
    "huff": {"a": 2, "b": 5},
    "montgomery": {"A": 6, "B": 1},
}


class UsageFailure(click.ClickException):
    exit_code = 2


class SemanticFailure(click.ClickException):
    exit_code = 1


def _int(text, what):
    if text is None:
        return None
    try:
        return int(str(text), 0)
    except ValueError:
        raise UsageFailure(f"{what} must be a decimal or 0x-hex integer, got {text!r}") from None


def _emit(doc, text, fmt, out):
    body = json.dumps(doc, indent=2) if fmt == "json" else text
    if out:
        with open(out, "w") as fh:
            fh.write(body + "\n")
    else:
        click.echo(body)


def build_curve(scheme_id, p, coeffs, curve_path):
    """Curve from a JSON file or from --p and coefficient flags."""
    model = SCHEME_MODEL[scheme_id]
    if curve_path:
        try:
            with open(curve_path) as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read curve config {curve_path}: {exc}") from None
        return curve_from_json(doc)
    if p is None:
        raise ConfigError("--p (or --curve) is required")
    given = {k: v for k, v in coeffs.items() if v is not None}
    if scheme_id == "h18":
        given.setdefault("a", 1)
    return make_curve(model, p, **given)


def _scheme(scheme_id, p, coeffs, curve_path, mutate=None):
    sid = scheme_id.lower()
    if sid not in SCHEME_IDS:
        raise ConfigError(f"unknown scheme {scheme_id!r}; expected one of {', '.join(SCHEME_IDS)}")
    S = SchemeDescriptor(sid, build_curve(sid, p, coeffs, curve_path))
    if mutate:
        name, _, value = mutate.partition("=")
        S = S.with_constant(name, _int(value, "mutated constant") % S.p)
    return S


def _coeff_options(fn):
    for flag, dest in (("--a", "a"), ("--b", "b"), ("--d", "d"), ("--A", "A_"), ("--B", "B_")):
        fn = click.option(flag, dest, default=None, help=f"curve coefficient {flag[2:]}")(fn)
    return fn


def _coeffs(a, b, d, A_, B_):
    vals = {"a": a, "b": b, "d": d, "A": A_, "B": B_}
    return {k: _int(v, f"--{k}") for k, v in vals.items()}


def _guard(fn):
    """Map library errors onto the exit-code contract."""

    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except click.ClickException:
            raise
        except (ConfigError, InvalidScalar) as exc:
            raise UsageFailure(str(exc)) from None
        except (DegenerateOutput, UndefinedAtPoint, NotFound) as exc:
            raise SemanticFailure(str(exc)) from None
        except XlineError as exc:
            raise SemanticFailure(f"{type(exc).__name__}: {exc}") from None

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@click.group()
@click.version_option(package_name="xline")
def main():
    """Compressed elliptic-curve arithmetic: verification, ladders, formula search."""


@main.command()
@click.option("--scheme", required=True, help="scheme id: " + ", ".join(SCHEME_IDS))
@click.option("--p", "p", default=None, help="field prime")
@_coeff_options
@click.option("--curve", "curve_path", default=None, help="curve JSON file instead of --p/coefficients")
@click.option("--trials", default=1000, show_default=True, type=int)
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--out", default=None, help="write the report here instead of stdout")
@click.option("--format", "fmt", type=click.Choice(["json", "table"]), default="json", show_default=True)
@click.option("--exhaustive-limit", default=512, show_default=True, type=int,
              help="enumerate every point and pair when p is at most this")
@click.option("--mutate-constant", default=None, hidden=True)
@_guard
def verify(scheme, p, a, b, d, A_, B_, curve_path, trials, seed, out, fmt, exhaustive_limit, mutate_constant):
    """Check D / A2 / A1, fibers and the ladder against full arithmetic."""
    from .verify import verify as run

    if trials < 1:
        raise UsageFailure("--trials must be >= 1")
    S = _scheme(scheme, _int(p, "--p"), _coeffs(a, b, d, A_, B_), curve_path, mutate_constant)
    rep = run(S, trials=trials, seed=seed, exhaustive_limit=exhaustive_limit)
    _emit(rep.to_dict(), rep.table(), fmt, out)
    if not rep.passed:
        sys.exit(1)


@main.command()
@click.option("--scheme", required=True)
@click.option("--p", "p", default=None)
@_coeff_options
@click.option("--curve", "curve_path", default=None)
@click.option("--n", "n", required=True, help="scalar, decimal or 0x-hex")
@click.option("--x", "x", default=None, help="affine x of the base point")
@click.option("--y", "y", default=None, help="affine y of the base point")
@click.option("--seed", default=0, show_default=True, type=int, help="samples the base point when --x/--y are absent")
@click.option("--check", is_flag=True, help="also compute f([n]P) with full arithmetic")
@click.option("--out", default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "table"]), default="json", show_default=True)
@_guard
def ladder(scheme, p, a, b, d, A_, B_, curve_path, n, x, y, seed, check, out, fmt):
    """f([n]P) by the compressed Montgomery ladder."""
    k = _int(n, "--n")
    if k < 1:
        raise UsageFailure(f"--n must be >= 1, got {k}")
    S = _scheme(scheme, _int(p, "--p"), _coeffs(a, b, d, A_, B_), curve_path)
    c = S.model
    if (x is None) != (y is None):
        raise UsageFailure("give both --x and --y, or neither")
    if x is not None:
        try:
            P = c.point(_int(x, "--x"), _int(y, "--y"))
        except ValueError as exc:
            raise UsageFailure(str(exc)) from None
    else:
        P = c.sample_point(rng=random.Random(seed))
    rP = compress(S, P)
    result = scalar_mul_compressed(S, rP, k)
    doc = {
        "scheme": S.scheme_id,
        "p": str(c.p),
        "n": str(k),
        "point": [str(v) for v in P.xy],
        "f_P": _fmt_value(rP),
        "f_nP": _fmt_value(result),
    }
    ok = True
    if check:
        oracle = compress(S, c.scalar_mul(P, k))
        doc["oracle"] = _fmt_value(oracle)
        doc["match"] = ok = oracle == result
    text = "\n".join(f"{key}: {val}" for key, val in doc.items())
    _emit(doc, text, fmt, out)
    if not ok:
        sys.exit(1)


def _fmt_value(v):
    val = v.value
    return "inf" if val is None else str(val)


@main.command()
@click.option("--family", default=None, help="edwards, gh, hessian, huff or mont")
@click.option("--f", "f", default=None, help="compression function in x, y (e.g. xy) or a scheme id")
@click.option("--kind", default="dbl", show_default=True, help="dbl (D), mul (A2) or sum (A1)")
@click.option("--scheme", default=None, help="take family and f from a scheme id")
@click.option("--max-bound", default=None, type=int)
@click.option("--trials", default=1000, show_default=True, type=int, help="validation trials")
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--out", default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "table"]), default="json", show_default=True)
@_guard
def search(family, f, kind, scheme, max_bound, trials, seed, out, fmt):
    """Rediscover a doubling or differential-addition formula."""
    from .search import SCHEME_F, SCHEME_FAMILY, discover

    if scheme:
        sid = scheme.lower()
        if sid not in SCHEME_FAMILY:
            raise UsageFailure(f"unknown scheme {scheme!r}")
        family = family or SCHEME_FAMILY[sid]
        f = f or SCHEME_F[sid]
    if not family or not f:
        raise UsageFailure("give --family and --f, or --scheme")
    cand = discover(family, f, kind, max_bound=max_bound, seed=seed, validate_trials=trials)
    doc = cand.to_json()
    doc["pretty"] = cand.pretty()
    _emit(doc, cand.pretty(), fmt, out)


def step_counts(S, seed=0):
    """Field-op counts of one compressed ladder step (A then D)."""
    rng = random.Random(seed)
    for _ in range(100):
        P = S.model.sample_point(rng=rng)
        try:
            r = compress(S, P)
            state = LadderState(r, scalar_mul_compressed(S, r, 2), r)
            ops = CountingOps(S.p)
            ladder_step(state, 1, ops=ops)
        except XlineError:
            continue
        return ops.snapshot()
    raise ConfigError(f"no usable sample point for {S.scheme_id}")


def bench_rows(p=P61, schemes=SCHEME_IDS, seed=0, include_maps=True):
    from .montgomery import edwards_to_montgomery, huff_to_montgomery, ladder_step_counts

    rows = []
    for sid in schemes:
        model = SCHEME_MODEL[sid]
        coeffs = dict(BENCH_DEFAULTS[model])
        if sid == "h18":
            coeffs["a"] = 1
        S = SchemeDescriptor(sid, make_curve(model, p, **coeffs))
        rows.append({"scheme": sid, **step_counts(S, seed)})
    if include_maps:
        for name, fn, model in (("g2-edwards", edwards_to_montgomery, "edwards"),
                                ("g2-huff", huff_to_montgomery, "huff")):
            phi = fn(make_curve(model, p, **BENCH_DEFAULTS[model]))
            rows.append({"scheme": name, **ladder_step_counts(phi, seed)})
    for r in rows:
        r["M+S"] = r["M"] + r["S"]
    return rows


@main.command()
@click.option("--scheme", default=None, help="comma-separated scheme ids (default: all)")
@click.option("--p", "p", default=None, help=f"field prime (default 2^61-1)")
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--out", default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "table"]), default="table", show_default=True)
@_guard
def bench(scheme, p, seed, out, fmt):
    """Per-ladder-step field operation counts."""
    ids = SCHEME_IDS
    if scheme:
        ids = tuple(s.strip().lower() for s in scheme.split(","))
        bad = [s for s in ids if s not in SCHEME_IDS]
        if bad:
            raise UsageFailure(f"unknown scheme(s) {bad}")
    rows = bench_rows(_int(p, "--p") or P61, ids, seed, include_maps=not scheme)
    cols = ("scheme", "M", "S", "C", "a", "M+S")
    lines = ["".join(f"{c:>12}" for c in cols)]
    lines += ["".join(f"{r[c]!s:>12}" for c in cols) for r in rows]
    _emit({"rows": rows, "columns": list(cols)}, "\n".join(lines), fmt, out)


if __name__ == "__main__":  # pragma: no cover
    main()
