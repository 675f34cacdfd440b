"""Finitely generated tropical cones: span, support, scaling and extremality.

Positions are 0-based.  A "vector set" is any sequence of :class:`TropVector`
of equal dimension; duplicates are kept, so independence can detect them.
"""

from __future__ import annotations

from typing import Sequence

from tropcommute.matrix import DimensionError, TropVector, bottom_vector, vec_oplus, vec_shift
from tropcommute.semiring import BOTTOM, DEFAULT_TOL, Scalar, trop_eq, trop_leq


class DegenerateInputError(ValueError):
    """The all-bottom vector was given where a nonzero vector is required."""


class PreconditionError(ValueError):
    pass


def support(v: Sequence[Scalar]) -> tuple[int, ...]:
    return tuple(i for i, e in enumerate(v) if e is not BOTTOM)


def scale(v: TropVector) -> TropVector:
    """Shift ``v`` so that its first finite entry is 0."""
    for e in v:
        if e is not BOTTOM:
            return vec_shift(-e, v)
    raise DegenerateInputError("cannot scale the all-bottom vector")


def is_scaled(v: TropVector, tol: float = DEFAULT_TOL) -> bool:
    for e in v:
        if e is not BOTTOM:
            return abs(e) <= tol
    return False


def shift_set(S: Sequence[TropVector], u: TropVector, t: int) -> list[TropVector]:
    """Members of ``S`` supported at ``t``, each shifted to agree with ``u`` there."""
    ut = u[t]
    if ut is BOTTOM:
        raise PreconditionError(f"position {t} is not in the support of {u}")
    return [vec_shift(ut - v[t], v) for v in S if v[t] is not BOTTOM]


def is_leq(u: Sequence[Scalar], v: Sequence[Scalar], tol: float = DEFAULT_TOL) -> bool:
    if len(u) != len(v):
        raise DimensionError(f"vector dims {len(u)} and {len(v)} differ")
    return all(trop_leq(a, b, tol) for a, b in zip(u, v))


def _eq(u, v, tol):
    return all(trop_eq(a, b, tol) for a, b in zip(u, v))


def is_minimal(v: TropVector, S: Sequence[TropVector], tol: float = DEFAULT_TOL) -> bool:
    """No member of ``S`` lies below ``v`` without being equal to it.

    ``v`` itself need not belong to ``S``.
    """
    return not any(is_leq(u, v, tol) and not _eq(u, v, tol) for u in S)


def is_extremal(v: TropVector, S: Sequence[TropVector], tol: float = DEFAULT_TOL) -> bool:
    """Extremality of ``v`` in the cone generated by ``S``, via minimality.

    ``v`` is extremal iff for some position ``t`` in its support, ``v`` is
    minimal among the generators supported at ``t`` rescaled to match ``v_t``.
    Assumes ``v`` lies in the span of ``S``.
    """
    supp = support(v)
    if not supp:
        raise DegenerateInputError("the all-bottom vector is never extremal")
    return any(is_minimal(v, shift_set(S, v, t), tol) for t in supp)


def span_lambda(v: Sequence[Scalar], w: Sequence[Scalar]) -> Scalar:
    """Greatest ``lam`` with ``lam ⊗ w <= v`` (bottom if ``w`` is zero there too).

    For the all-bottom ``w`` any ``lam`` works; bottom is returned since it
    contributes nothing to a combination.
    """
    if len(v) != len(w):
        raise DimensionError(f"vector dims {len(v)} and {len(w)} differ")
    lam = None
    for a, b in zip(v, w):
        if b is BOTTOM:
            continue
        if a is BOTTOM:
            return BOTTOM
        d = a - b
        if lam is None or d < lam:
            lam = d
    return BOTTOM if lam is None else lam


def principal_combination(v: Sequence[Scalar], S: Sequence[TropVector]) -> TropVector:
    """The largest combination of ``S`` lying below ``v``."""
    acc = bottom_vector(len(v))
    for w in S:
        lam = span_lambda(v, w)
        if lam is not BOTTOM:
            acc = vec_oplus(acc, vec_shift(lam, w))
    return acc


def in_span(v: TropVector, S: Sequence[TropVector], tol: float = DEFAULT_TOL) -> bool:
    if not support(v):
        return True
    return _eq(principal_combination(v, S), v, tol)


def is_independent(S: Sequence[TropVector], tol: float = DEFAULT_TOL) -> bool:
    S = list(S)
    return not any(in_span(v, S[:i] + S[i + 1:], tol) for i, v in enumerate(S))


def combine(coeffs: Sequence[Scalar], S: Sequence[TropVector]) -> TropVector:
    """Tropical linear combination ``⊕ coeffs[i] ⊗ S[i]``."""
    if len(coeffs) != len(S):
        raise DimensionError(f"{len(coeffs)} coefficients for {len(S)} vectors")
    if not S:
        raise DimensionError("empty vector set has no dimension")
    acc = bottom_vector(len(S[0]))
    for lam, w in zip(coeffs, S):
        acc = vec_oplus(acc, vec_shift(lam, w))
    return acc


def extract_basis(S: Sequence[TropVector], tol: float = DEFAULT_TOL) -> list[TropVector]:
    """Scaled extremals among the generators ``S``, without repeats.

    By the usual basis theorem for finitely generated cones this is the
    unique basis of ``span(S)`` up to scaling.
    """
    out: list[TropVector] = []
    for v in S:
        if not support(v):
            continue
        sv = scale(v)
        if any(_eq(sv, u, tol) for u in out):
            continue
        if is_extremal(sv, S, tol):
            out.append(sv)
    return out
