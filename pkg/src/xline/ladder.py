"""Montgomery ladder over compressed values."""

from __future__ import annotations

from dataclasses import dataclass

from .compression import CompressedValue, SchemeDescriptor, double_compressed, ladder_add
from .errors import ConfigError, DegenerateLadderState, DegenerateOutput, InvalidScalar


@dataclass(frozen=True)
class LadderState:
    """(x1, x2) = (f([m]P), f([m+1]P)); ``base`` is f(P)."""

    x1: CompressedValue
    x2: CompressedValue
    base: CompressedValue

    def __post_init__(self):
        s = self.base.scheme
        if self.x1.scheme is not s or self.x2.scheme is not s:
            raise ConfigError("ladder state values must share one scheme")


def _cswap(bit, a, b):
    # XOR-mask swap on the coordinates; no data-dependent branch
    mask = -bit
    X = (a.X ^ b.X) & mask
    Z = (a.Z ^ b.Z) & mask
    return (a.X ^ X, a.Z ^ Z), (b.X ^ X, b.Z ^ Z)


def ladder_step(state: LadderState, bit: int, route="A2", ops=None) -> LadderState:
    """bit 1: (A(x1, x2, base), D(x2)); bit 0: (D(x1), A(x1, x2, base))."""
    if bit not in (0, 1):
        raise ConfigError(f"ladder bit must be 0 or 1, got {bit!r}")
    scheme = state.base.scheme
    (X1, Z1), (X2, Z2) = _cswap(bit, state.x1, state.x2)
    try:
        x1 = CompressedValue(X1, Z1, scheme)
        x2 = CompressedValue(X2, Z2, scheme)
        added = ladder_add(scheme, x1, x2, state.base, route=route, ops=ops)
        doubled = double_compressed(scheme, x1, ops=ops)
    except DegenerateOutput as exc:
        raise DegenerateLadderState(f"ladder step degenerated: {exc}") from exc
    (X1, Z1), (X2, Z2) = _cswap(bit, doubled, added)
    return LadderState(CompressedValue(X1, Z1, scheme), CompressedValue(X2, Z2, scheme), state.base)


def scalar_mul_compressed(scheme: SchemeDescriptor, rP: CompressedValue, n: int, route="A2", ops=None):
    """f([n]P) from f(P)."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidScalar(f"scalar must be an int, got {type(n).__name__}")
    if n < 1:
        raise InvalidScalar(f"scalar must be >= 1, got {n}")
    if rP.scheme is not scheme:
        rP = CompressedValue(rP.X, rP.Z, scheme)
    if n == 1:
        return rP
    try:
        x2 = double_compressed(scheme, rP, ops=ops)
    except DegenerateOutput as exc:
        raise DegenerateLadderState(f"initial doubling degenerated: {exc}") from exc
    state = LadderState(rP, x2, rP)
    for i in range(n.bit_length() - 2, -1, -1):
        state = ladder_step(state, (n >> i) & 1, route=route, ops=ops)
    return state.x1


def scalar_mul_via_chain(scheme, rP, a, b, rAmB, route="A2"):
    """f([a+b]P) = A(f([a]P), f([b]P), f([a-b]P))."""
    ra = scalar_mul_compressed(scheme, rP, a, route=route)
    rb = scalar_mul_compressed(scheme, rP, b, route=route)
    return ladder_add(scheme, ra, rb, rAmB, route=route)
