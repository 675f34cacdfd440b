import itertools

import pytest
from hypothesis import assume, given, strategies as st

from conftest import int_scalars, small_scalars, vectors
from tropcommute.cone import (
    DegenerateInputError,
    PreconditionError,
    combine,
    extract_basis,
    in_span,
    is_extremal,
    is_independent,
    is_leq,
    is_minimal,
    is_scaled,
    scale,
    shift_set,
    span_lambda,
    support,
)
from tropcommute.matrix import TropVector, vec_oplus, vec_shift
from tropcommute.semiring import BOTTOM

B = BOTTOM
V = TropVector

# above-diagonal basis of the running 2x2 example
A1, A2 = -0.14, -1.621
b1 = V((0, B, B, 0))
b2 = V((0, A1, B, 0))
b3 = V((0, B, A2, 0))
b4 = V((0, 0.695, -0.786, B))
BASIS = [b1, b2, b3, b4]


def test_support():
    assert support(b1) == (0, 3)
    assert support(V((B, 3, 0, B))) == (1, 2)
    assert support(V((B, B))) == ()


def test_scale():
    assert scale(V((0.166, 0.861, -0.62, B))) == V((0, 0.861 - 0.166, -0.62 - 0.166, B))
    assert scale(V((B, 2, 5, 2))) == V((B, 0, 3, 0))
    with pytest.raises(DegenerateInputError):
        scale(V((B, B, B)))


def test_shift_set_equal_diagonal_position():
    # generators of the equal-diagonal cone supported at the second position
    a11, a12, a21 = 0.0, -2.0, -3.0
    S = [V((0, B, B, 0)), V((a21, a11, B, a21)), V((a11, a12, a21, B)), V((B, a12, a21, a11)),
         V((B, a12, a21, B)), V((a12, B, a11, a12))]
    shifted = shift_set(S, V((a21, a11, B, a21)), 1)
    assert len(shifted) == 4
    assert all(w[1] == a11 for w in shifted)
    assert V((a11 - a12, a11, a21 - a12 + a11, B)) in shifted


def test_shift_set_requires_support():
    with pytest.raises(PreconditionError):
        shift_set(BASIS, b2, 2)


def test_order_and_minimality():
    assert is_leq(V((B, 1)), V((0, 1)))
    assert not is_leq(V((0, 1)), V((B, 1)))
    assert is_minimal(b1, [b1, b2])
    assert not is_minimal(V((0, 0, 0)), [V((0, B, 0))])


def test_extremality_examples():
    for v in BASIS:
        assert is_extremal(v, BASIS)
    assert not is_extremal(vec_oplus(b2, b3), BASIS)
    assert not is_extremal(V((0, A1, A2, 0)), BASIS)


def test_extremal_rejects_bottom():
    with pytest.raises(DegenerateInputError):
        is_extremal(V((B, B, B, B)), BASIS)


def test_span_lambda_and_membership():
    assert span_lambda(V((0, 1)), V((-2, 0))) == 1
    assert span_lambda(V((B, 1)), V((0, 0))) is B
    assert span_lambda(V((1, 1)), V((B, B))) is B
    assert in_span(V((3, 3 + A1, 3 + A2, 3)), BASIS)
    assert not in_span(V((0, 0, 0, 0)), [b1, b2, b3])
    assert in_span(V((B, B, B, B)), [])


def test_independence_examples():
    assert is_independent(BASIS)
    assert not is_independent([b1, b2, vec_oplus(b2, b3)] + [b3])
    assert not is_independent([b1, vec_shift(2.0, b1)])


def test_singleton_support_vectors():
    e = [V(tuple(0.0 if i == j else B for i in range(3))) for j in range(3)]
    assert is_independent(e)
    assert all(is_extremal(v, e) for v in e)
    assert in_span(V((1, B, -4)), e)


def test_extract_basis_prunes_and_scales():
    S = [vec_shift(5.0, b1), b2, b3, vec_oplus(b2, b3), b4, b2]
    got = extract_basis(S)
    assert set(got) == set(BASIS)
    assert len(got) == 4


@given(st.lists(vectors(3, small_scalars), min_size=1, max_size=4), vectors(3, small_scalars))
def test_span_lambda_is_optimal(S, v):
    for w in S:
        lam = span_lambda(v, w)
        if lam is B:
            continue
        assert is_leq(vec_shift(lam, w), v)
        assert not is_leq(vec_shift(lam + 1e-6, w), v, tol=0)


@given(st.lists(vectors(3, int_scalars), min_size=1, max_size=4),
       st.lists(int_scalars, min_size=4, max_size=4))
def test_combinations_lie_in_span(S, coeffs):
    x = combine(coeffs[:len(S)], S)
    assert in_span(x, S)
    assert in_span(x, S + [V((0, 0, 0))])


@given(vectors(4, small_scalars))
def test_scale_idempotent(v):
    assume(support(v))
    assert scale(scale(v)) == scale(v)
    assert is_scaled(scale(v))


@given(st.lists(vectors(3, int_scalars), min_size=1, max_size=5))
def test_extract_basis_spans_and_is_independent(S):
    assume(any(support(v) for v in S))
    basis = extract_basis(S)
    assert is_independent(basis)
    assert all(in_span(v, basis) for v in S)


# --- definition-based extremality oracle ----------------------------------

_LAMBDAS = [B] + [float(k) for k in range(-5, 6)]


def _extremal_by_definition(v, S):
    """``v`` is extremal iff it is not a join of cone elements strictly below it.

    With integer data the coefficients needed in any decomposition are
    integers in a small window, so enumerating them is exhaustive.  The join
    of every element strictly below ``v`` reaches ``v`` exactly when some
    pair ``u ⊕ w = v`` with ``u, w != v`` exists.
    """
    below = set()
    for lams in itertools.product(_LAMBDAS, repeat=len(S)):
        u = combine(lams, S)
        if u != v and all(a is B or (b is not B and a <= b) for a, b in zip(u, v)):
            below.add(u)
    join = V((B,) * len(v))
    for u in below:
        join = vec_oplus(join, u)
    return join != v


_entries = st.sampled_from([B, 0.0, 1.0, 2.0])
_coeffs = st.sampled_from([B, -1.0, 0.0, 1.0])


@given(st.integers(2, 4).flatmap(lambda d: st.lists(vectors(d, _entries), min_size=1, max_size=3)),
       st.lists(_coeffs, min_size=3, max_size=3))
def test_is_extremal_matches_definition(S, coeffs):
    v = combine(coeffs[:len(S)], S)
    assume(support(v))
    assert is_extremal(v, S) == _extremal_by_definition(v, S)
