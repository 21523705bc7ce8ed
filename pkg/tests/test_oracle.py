import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lecture_hall.core import Sequence, cone_contains, ray_generators
from lecture_hall.oracle import (
    BudgetExceededError,
    fundamental_box_points,
    generates_up_to,
    hilbert_basis_oracle,
    interior_points_up_to,
    is_reducible,
    ray_coefficients,
    verify_gorenstein_shift,
)

from conftest import naive_hilbert_basis, small_sequences

S = lambda *xs: Sequence(xs)


def scan_box(s):
    """Closed-box lattice points via a bounding-box scan and exact solve."""
    hi = [max(r[i] for r in ray_generators(s)) * s.n for i in range(s.n)]
    out = []
    for p in itertools.product(*(range(h + 1) for h in hi)):
        if all(0 <= a <= 1 for a in ray_coefficients(s, p)):
            out.append(p)
    return sorted(out)


@pytest.mark.parametrize(
    "s, expected",
    [
        (S(1, 3), [(0, 0), (0, 1), (1, 3), (1, 4)]),
        (S(3, 5), [(0, 0), (0, 1), (1, 2), (2, 4), (3, 5), (3, 6)]),
        (S(1), [(0,), (1,)]),
    ],
)
def test_fundamental_box_examples(s, expected):
    assert fundamental_box_points(s) == expected


@settings(max_examples=40)
@given(small_sequences(3, 4))
def test_fundamental_box_matches_scan(s):
    assert fundamental_box_points(s) == scan_box(s)


def test_ray_coefficients_reconstruct():
    s = S(3, 5, 7)
    for p in [(1, 2, 3), (3, 5, 7), (2, 4, 6)]:
        alpha = ray_coefficients(s, p)
        rows = ray_generators(s)
        back = tuple(sum(alpha[i] * rows[i][j] for i in range(3)) for j in range(3))
        assert back == tuple(Fraction(x) for x in p)


@pytest.mark.parametrize(
    "s, expected",
    [
        (S(3, 5), [(0, 1), (1, 2), (3, 5)]),
        (S(1, 2, 3), [(0, 0, 1), (0, 1, 2), (0, 2, 3), (1, 2, 3)]),
        (S(1, 3, 8), [(0, 0, 1), (0, 1, 3), (0, 3, 8), (1, 3, 8)]),
    ],
)
def test_oracle_examples(s, expected):
    hb = hilbert_basis_oracle(s)
    assert list(hb.elements) == expected
    assert hb.method == "oracle"


@settings(max_examples=40, deadline=None)
@given(small_sequences(3, 5))
def test_oracle_matches_definition(s):
    assert list(hilbert_basis_oracle(s).elements) == naive_hilbert_basis(s)


def test_oracle_budget():
    with pytest.raises(BudgetExceededError) as exc:
        hilbert_basis_oracle(S(1000, 1000, 1001, 5))
    assert exc.value.volume == 1000 * 1000 * 1001
    assert len(hilbert_basis_oracle(S(4, 5), max_volume=4)) > 0
    with pytest.raises(BudgetExceededError):
        hilbert_basis_oracle(S(5, 5), max_volume=4)


def test_is_reducible():
    assert is_reducible(S(3, 5), (3, 6), [(0, 1), (1, 2), (3, 5)])
    assert not is_reducible(S(3, 5), (1, 2), [(0, 1), (3, 5)])
    assert is_reducible(S(1, 2), (0, 2), [(0, 1)])
    with pytest.raises(ValueError):
        is_reducible(S(3, 5), (2, 1), [(0, 1)])


BBKSZ3 = [(0, 0, 1), (0, 1, 2), (0, 2, 3), (1, 2, 3)]


def test_generates_up_to():
    rep = generates_up_to(S(1, 2, 3), BBKSZ3, 6)
    assert rep.passed and rep.checks_run == 27
    rep = generates_up_to(S(1, 2, 3), [b for b in BBKSZ3 if b != (0, 1, 2)], 6)
    assert not rep.passed
    assert rep.witnesses[0] == (0, 1, 2)
    for s in (S(1, 2, 3), S(4, 1), S(7)):
        assert generates_up_to(s, [], 0).passed


def test_interior_points():
    assert interior_points_up_to(S(1, 2), 3) == [(1, 3)]
    # (2,4): 2/2 < 4/3, and (1,4) is interior too
    assert interior_points_up_to(S(2, 3), 4) == [(1, 2), (1, 3), (1, 4), (2, 4)]
    assert interior_points_up_to(S(3, 5, 2), 0) == []


def test_verify_gorenstein_shift():
    assert verify_gorenstein_shift(S(1, 2, 3), (1, 3, 5), 8).passed
    assert verify_gorenstein_shift(S(3, 5), (1, 2), 10).passed
    rep = verify_gorenstein_shift(S(3, 4), (1, 2), 10)
    assert not rep.passed and rep.witnesses
    with pytest.raises(ValueError):
        verify_gorenstein_shift(S(1, 2, 3), (1, 2, 3), 5)


def test_no_candidate_makes_3_4_gorenstein():
    s = S(3, 4)
    for c in interior_points_up_to(s, 12):
        assert not verify_gorenstein_shift(s, c, 12).passed


@settings(max_examples=25, deadline=None)
@given(small_sequences(3, 6))
def test_oracle_properties(s):
    hb = hilbert_basis_oracle(s)
    box = set(fundamental_box_points(s))
    # confinement
    assert hb.as_set() <= box
    # generation
    assert generates_up_to(s, hb.elements, 2 * s[-1]).passed
    # minimality: removing b leaves b ungenerated
    for b in hb.elements:
        rest = [x for x in hb.elements if x != b]
        assert b in generates_up_to(s, rest, b[-1], max_witnesses=None).witnesses
    # primitive ray directions are basis elements
    from math import gcd
    from functools import reduce

    for r in ray_generators(s):
        g = reduce(gcd, r)
        assert tuple(x // g for x in r) in hb.as_set()


@settings(max_examples=25, deadline=None)
@given(small_sequences(3, 5), st.integers(2, 3))
def test_oracle_scaling_invariance(s, m):
    scaled = Sequence(tuple(m * x for x in s))
    assert hilbert_basis_oracle(scaled).elements == hilbert_basis_oracle(s).elements


def test_oracle_deterministic():
    s = S(3, 5, 7, 4)
    runs = {hilbert_basis_oracle(s).elements for _ in range(3)}
    assert len(runs) == 1


def test_nonprimitive_ray_captured():
    # ray (0,2,4) of (1,2,4) is not primitive; (0,1,2) must appear
    hb = hilbert_basis_oracle(S(1, 2, 4))
    assert (0, 1, 2) in hb and (0, 2, 4) not in hb
