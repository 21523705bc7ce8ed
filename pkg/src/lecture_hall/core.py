"""Sequences, lecture hall cones, lattice points and gradings.

A lattice point is a plain tuple of Python ints. The cone attached to a
sequence ``s`` is

    C(s) = {x : 0 <= x_1/s_1 <= x_2/s_2 <= ... <= x_n/s_n}

and every comparison of ratios below is done by integer cross-multiplication,
so arbitrarily large entries are handled exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import reduce
from math import gcd, prod
from typing import Iterable, Iterator, Sequence as Seq

Point = tuple[int, ...]


class InvalidSequenceError(ValueError):
    """Raised for sequences that do not define a lecture hall cone."""


class DimensionError(ValueError):
    """A lattice point does not live in the ambient space of the sequence."""


@dataclass(frozen=True)
class Sequence:
    """A positive integer sequence ``(s_1, ..., s_n)``."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if not entries:
            raise InvalidSequenceError("a sequence needs at least one entry")
        bad = [e for e in entries if e <= 0]
        if bad:
            raise InvalidSequenceError(f"nonpositive entry {bad[0]} in {entries}")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"


def make_sequence(entries: Iterable[int]) -> Sequence:
    return Sequence(tuple(entries))


def normalize_sequence(s: Sequence) -> Sequence:
    """Divide out the gcd of the entries. The cone is unchanged; the
    polytopes P and R are not (they scale by the gcd)."""
    m = reduce(gcd, s.entries)
    return Sequence(tuple(e // m for e in s.entries))


def sequence_from_u(s1: int, u: Seq[int]) -> Sequence:
    """Build ``s`` from ``s_2 = u_1 s_1 - 1`` and ``s_{i+1} = u_i s_i - s_{i-1}``."""
    if s1 < 1:
        raise InvalidSequenceError(f"s1 must be positive, got {s1}")
    if any(x < 1 for x in u):
        raise InvalidSequenceError(f"u entries must be positive, got {tuple(u)}")
    out = [s1]
    prev = 1  # s_2 = u_1 s_1 - 1 is the general rule with a virtual s_0 = 1
    for ui in u:
        nxt = ui * out[-1] - prev
        if nxt < 1:
            raise InvalidSequenceError(
                f"u={tuple(u)} with s1={s1} produces nonpositive term {nxt}"
            )
        prev = out[-1]
        out.append(nxt)
    return Sequence(tuple(out))


def modk_sequence(k: int, n: int) -> Sequence:
    """The 1 mod k sequence ``(1, k+1, 2k+1, ..., (n-1)k+1)``."""
    if k < 1 or n < 1:
        raise InvalidSequenceError(f"need k >= 1 and n >= 1, got k={k}, n={n}")
    return Sequence(tuple(i * k + 1 for i in range(n)))


def l_sequence(ell: int, n: int) -> Sequence:
    """``s_{i+1} = ell*s_i - s_{i-1}`` with ``s_0 = 0``, ``s_1 = 1``."""
    if ell < 2 or n < 1:
        raise InvalidSequenceError(f"need ell >= 2 and n >= 1, got ell={ell}, n={n}")
    out = []
    a, b = 0, 1
    for _ in range(n):
        out.append(b)
        a, b = b, ell * b - a
    return Sequence(tuple(out))


def ray_generators(s: Sequence) -> tuple[Point, ...]:
    """Rows ``(0,..,0,s_i,..,s_n)`` for ``i < n`` followed by ``e_n``."""
    n = s.n
    rows = [(0,) * i + tuple(s.entries[i:]) for i in range(n - 1)]
    rows.append((0,) * (n - 1) + (1,))
    return tuple(rows)


def exact_determinant(rows: Seq[Seq[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix is not square")
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


def _check_dim(s: Sequence, p: Seq[int]):
    if len(p) != s.n:
        raise DimensionError(f"point {tuple(p)} has dimension {len(p)}, sequence {s} has {s.n}")


def cone_contains(s: Sequence, p: Seq[int], strict: bool = False) -> bool:
    """Test ``0 <= p_1/s_1 <= ... <= p_n/s_n`` (all strict if ``strict``)."""
    _check_dim(s, p)
    e = s.entries
    if strict:
        if p[0] <= 0:
            return False
        return all(p[i] * e[i + 1] < p[i + 1] * e[i] for i in range(len(e) - 1))
    if p[0] < 0:
        return False
    return all(p[i] * e[i + 1] <= p[i + 1] * e[i] for i in range(len(e) - 1))


def difference_in_cone(s: Sequence, p: Seq[int], q: Seq[int]) -> bool:
    return cone_contains(s, tuple(a - b for a, b in zip(p, q)))


class Grading(enum.Enum):
    FULL = "full"
    LAST = "last"
    LAST_DIFF = "last_diff"


def degree(p: Seq[int], g: Grading):
    if g is Grading.FULL:
        return tuple(p)
    if g is Grading.LAST:
        return p[-1]
    if len(p) < 2:
        raise DimensionError("the last-difference grading needs dimension >= 2")
    return p[-1] - p[-2]


def descend(s: Sequence, suffix: Seq[int], strict: bool = False) -> Iterator[Point]:
    """All cone lattice points whose trailing coordinates equal ``suffix``.

    Lower coordinates are filled right to left; coordinate ``i`` ranges over
    ``0 <= x <= floor(x_{i+1} s_i / s_{i+1})`` (strict: ``1 <= x`` for the
    first coordinate, ``x < x_{i+1} s_i / s_{i+1}``). Nothing is yielded if
    the suffix itself violates the chain.
    """
    e = s.entries
    n = len(e)
    m = len(suffix)
    if m == 0 or m > n:
        raise DimensionError(f"suffix length {m} not in 1..{n}")
    tail = Sequence(e[n - m:])
    if m == n:
        if cone_contains(s, suffix, strict):
            yield tuple(suffix)
        return
    if strict:
        if not all(suffix[i] * tail[i + 1] < suffix[i + 1] * tail[i] for i in range(m - 1)):
            return
    elif not all(suffix[i] * tail[i + 1] <= suffix[i + 1] * tail[i] for i in range(m - 1)):
        return

    def rec(i, right, acc):
        # acc holds coordinates i+1..n-1 (0-based), right = acc[0]
        num, den = right * e[i], e[i + 1]
        hi = (num - 1) // den if strict else num // den
        lo = 1 if strict and i == 0 else 0
        for x in range(lo, hi + 1):
            if i == 0:
                yield (x,) + acc
            else:
                yield from rec(i - 1, x, (x,) + acc)

    yield from rec(n - m - 1, suffix[0], tuple(suffix))


def cone_points_up_to(s: Sequence, bound: int, strict: bool = False) -> list[Point]:
    """Cone (or interior) lattice points with last coordinate at most ``bound``,
    lexicographically sorted."""
    out = []
    for top in range(0, bound + 1):
        out.extend(descend(s, (top,), strict))
    out.sort()
    return out


def box_volume(s: Sequence) -> int:
    """``|det|`` of the ray generators, i.e. ``s_1 * ... * s_{n-1}``."""
    return prod(s.entries[:-1])


@dataclass(frozen=True)
class HilbertBasis:
    """Sorted, duplicate-free minimal generating set of ``C(s) ∩ Z^n``.

    ``pruned`` lists elements of a closed-form list that were dropped because
    they decompose over the remaining ones.
    """

    sequence: Sequence
    elements: tuple[Point, ...]
    method: str
    pruned: tuple[Point, ...] = field(default=())

    def __post_init__(self):
        if self.method not in ("closed_form", "oracle"):
            raise ValueError(f"unknown method {self.method!r}")
        object.__setattr__(self, "elements", tuple(sorted(set(map(tuple, self.elements)))))
        object.__setattr__(self, "pruned", tuple(sorted(set(map(tuple, self.pruned)))))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p):
        return tuple(p) in set(self.elements)

    def as_set(self) -> frozenset[Point]:
        return frozenset(self.elements)
