"""Scalars of the max-plus semiring: finite floats plus an explicit bottom.

A scalar is either a Python ``float`` or the singleton :data:`BOTTOM`.
Bottom is deliberately *not* ``float('-inf')`` so that support computations
never depend on IEEE infinity arithmetic.
"""

from __future__ import annotations

import math
from typing import Union

DEFAULT_TOL = 1e-9


class _Bottom:
    """The additive identity of (max, +); sorts below every finite value."""

    _instance = None
    __slots__ = ()

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "BOTTOM"

    def __str__(self):
        return "-inf"

    def __reduce__(self):
        return (_Bottom, ())

    def __bool__(self):
        return True


BOTTOM = _Bottom()

Scalar = Union[float, _Bottom]


def scalar(value) -> Scalar:
    """Coerce ``value`` to a tropical scalar.

    ``None`` and ``float('-inf')`` map to :data:`BOTTOM`; NaN and ``+inf`` are
    rejected since they are not elements of the semiring.
    """
    if value is BOTTOM or value is None:
        return BOTTOM
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, bool):
        raise TypeError("booleans are not tropical scalars")
    x = float(value)
    if math.isnan(x):
        raise ValueError("NaN is not a tropical scalar")
    if x == math.inf:
        raise ValueError("+inf is not a tropical scalar")
    if x == -math.inf:
        return BOTTOM
    return x


def is_bottom(a: Scalar) -> bool:
    return a is BOTTOM


def is_finite(a: Scalar) -> bool:
    return a is not BOTTOM


def oplus(a: Scalar, b: Scalar) -> Scalar:
    if a is BOTTOM:
        return b
    if b is BOTTOM:
        return a
    return a if a >= b else b


def otimes(a: Scalar, b: Scalar) -> Scalar:
    if a is BOTTOM or b is BOTTOM:
        return BOTTOM
    return a + b


def trop_eq(a: Scalar, b: Scalar, tol: float = DEFAULT_TOL) -> bool:
    """Equality up to ``tol``; bottom only ever equals bottom."""
    if a is BOTTOM or b is BOTTOM:
        return a is b
    return abs(a - b) <= tol


def trop_leq(a: Scalar, b: Scalar, tol: float = DEFAULT_TOL) -> bool:
    """``a <= b + tol`` in the order where bottom is least."""
    if a is BOTTOM:
        return True
    if b is BOTTOM:
        return False
    return a <= b + tol


def neg(a: Scalar) -> float:
    """Multiplicative inverse of a finite scalar."""
    if a is BOTTOM:
        raise ValueError("bottom has no multiplicative inverse")
    return -a


def to_float(a: Scalar) -> float:
    return -math.inf if a is BOTTOM else a


def parse_scalar(text: str) -> Scalar:
    token = text.strip()
    if token.lower() in ("-inf", "-infinity", "bottom"):
        return BOTTOM
    try:
        x = float(token)
    except ValueError:
        raise ValueError(f"not a number: {text!r}") from None
    return scalar(x)


def format_scalar(a: Scalar, digits: int = 12) -> str:
    if a is BOTTOM:
        return "-inf"
    if a == 0:
        return "0"
    return f"{a:.{digits}g}"
