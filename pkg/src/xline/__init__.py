"""Compressed (x-line style) elliptic-curve arithmetic with an oracle harness."""

from .compression import (
    SCHEME_IDS,
    CompressedValue,
    SchemeDescriptor,
    compress,
    diff_add_mul,
    diff_add_sum,
    double_compressed,
    fiber,
    ladder_add,
    make_scheme,
)
from .curves import GeneralizedHessian, Huff, Montgomery, Point, TwistedEdwards, TwistedHessian, make_curve
from .field import FieldCtx, FieldElement

__version__ = "0.1.0"
