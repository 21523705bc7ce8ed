import itertools

from hypothesis import strategies as st

from lecture_hall.core import Sequence, cone_contains


def small_sequences(max_n=4, max_entry=8):
    return st.lists(st.integers(1, max_entry), min_size=1, max_size=max_n).map(
        lambda xs: Sequence(tuple(xs))
    )


def naive_cone_points(s, bound):
    """All cone points with last coordinate <= bound, by scanning a box."""
    n = s.n
    caps = [bound * s[i] // s[-1] + 1 for i in range(n)]
    return sorted(
        p for p in itertools.product(*(range(c + 1) for c in caps))
        if p[-1] <= bound and cone_contains(s, p)
    )


def naive_hilbert_basis(s):
    """Irreducible cone points straight from the definition.

    Every irreducible lies in the closed box, whose last coordinate is at
    most (n-1) s_n + 1, so scanning up to that bound is enough.
    """
    bound = (s.n - 1) * s[-1] + 1
    pts = [p for p in naive_cone_points(s, bound) if any(p)]
    ptset = set(pts)
    out = []
    for x in pts:
        reducible = any(
            y != x and tuple(a - b for a, b in zip(x, y)) in ptset
            for y in pts
            if all(b <= a for a, b in zip(x, y))
        )
        if not reducible:
            out.append(x)
    return sorted(out)
