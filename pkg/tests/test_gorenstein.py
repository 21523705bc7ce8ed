from math import gcd

import pytest
from hypothesis import assume, given, settings, strategies as st

from lecture_hall.core import Sequence, cone_contains, cone_points_up_to, sequence_from_u
from lecture_hall.gorenstein import (
    certify,
    detect_u_generated,
    geometric_gorenstein_point,
    gorenstein_point,
    gorenstein_recurrence,
)
from lecture_hall.oracle import verify_gorenstein_shift

S = lambda *xs: Sequence(xs)

u_vectors = st.lists(st.integers(2, 4), min_size=0, max_size=3).map(tuple)


def test_detect_examples():
    assert detect_u_generated(S(1, 2, 3, 4)) == (3, 2, 2)
    assert detect_u_generated(S(2, 3, 4, 5)) == (2, 2, 2)
    assert detect_u_generated(S(3, 4)) is None
    assert detect_u_generated(S(1, 2, 4)) is None
    assert detect_u_generated(S(5,)) == ()


def test_point_examples():
    assert gorenstein_point(S(1, 2, 3, 4), (3, 2, 2)).c == (1, 3, 5, 7)
    assert gorenstein_point(S(2, 3, 4, 5), (2, 2, 2)).c == (1, 2, 3, 4)
    assert gorenstein_point(S(5,), ()).c == (1,)
    with pytest.raises(ValueError):
        gorenstein_point(S(1, 2, 3, 4), (2, 2, 2))


def test_recurrence_examples():
    assert gorenstein_recurrence(S(3, 5)).c == (1, 2)
    assert gorenstein_recurrence(S(1, 2, 3)).c == (1, 3, 5)
    assert gorenstein_recurrence(S(3, 4)) is None
    assert gorenstein_recurrence(S(1, 2, 4)).c == (1, 3, 7)


def test_geometric_examples():
    cert = geometric_gorenstein_point(S(1, 2, 4))
    assert cert.c == (1, 3, 7) and cert.method == "geometric"
    assert geometric_gorenstein_point(S(1, 3, 4)) is None
    assert geometric_gorenstein_point(S(3, 4)) is None
    assert certify(S(3, 4)) is None
    assert certify(S(1, 3, 4)) is None


@given(st.integers(1, 5), u_vectors)
def test_u_point_matches_recurrence(s1, u):
    s = sequence_from_u(s1, u)
    assert detect_u_generated(s) == u
    assert gorenstein_point(s, u).c == gorenstein_recurrence(s).c


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), u_vectors)
def test_u_point_passes_shift(s1, u):
    s = sequence_from_u(s1, u)
    assume(s[-1] <= 40)
    cert = certify(s)
    assert cert is not None and cert.method == "u_recurrence"
    assert cert.verified_bound == 3 * s[-1]
    assert verify_gorenstein_shift(s, cert.c, 3 * s[-1]).passed


@given(st.integers(1, 12), st.integers(1, 6))
def test_dim2_u_family(s1, k):
    s = S(s1, k * s1 - 1) if k * s1 > 1 else None
    assume(s is not None)
    assert detect_u_generated(s) == (k,)
    assert gorenstein_point(s, (k,)).c == (1, k)


@given(st.integers(2, 12), st.integers(1, 30))
def test_dim2_non_gorenstein(s1, s2):
    assume(gcd(s1, s2) == 1 and (s2 + 1) % s1 != 0)
    s = S(s1, s2)
    assert gorenstein_recurrence(s) is None
    assert geometric_gorenstein_point(s) is None


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), u_vectors)
def test_shift_of_cone_points_is_interior(s1, u):
    s = sequence_from_u(s1, u)
    assume(s[-1] <= 30)
    c = gorenstein_point(s, u).c
    for p in cone_points_up_to(s, 2 * s[-1]):
        assert cone_contains(s, tuple(a + b for a, b in zip(c, p)), strict=True)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 6), min_size=1, max_size=3).map(tuple))
def test_routes_agree(entries):
    s = Sequence(entries)
    rec = gorenstein_recurrence(s)
    geo = geometric_gorenstein_point(s)
    if geo is not None and rec is not None:
        assert rec.c == geo.c
    if rec is not None:
        assert verify_gorenstein_shift(s, rec.c, 3 * s[-1]).passed


def test_shift_rejects_exterior_point():
    with pytest.raises(ValueError):
        verify_gorenstein_shift(S(1, 2), (0, 1), 4)
