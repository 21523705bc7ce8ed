"""Explicit Hilbert bases for the families with a known description.

Each constructor lists the elements of the published description and then
hands them to ``_finish``, which sorts, deduplicates and drops any listed
element that decomposes over the others. The dropping step only matters in
degenerate parameter ranges (an entry of ``u`` equal to 1, ``s_3 = 1``, ...)
where two listed elements differ by a cone point; the dropped elements are
kept on ``HilbertBasis.pruned`` so callers can see them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Union

from .core import (
    HilbertBasis,
    InvalidSequenceError,
    Point,
    Sequence,
    descend,
    difference_in_cone,
    l_sequence,
    modk_sequence,
    sequence_from_u,
)


@dataclass(frozen=True)
class ModK:
    k: int
    n: int

    def sequence(self) -> Sequence:
        return modk_sequence(self.k, self.n)

    def __str__(self):
        return f"modk(k={self.k},n={self.n})"


@dataclass(frozen=True)
class LSeq:
    ell: int
    n: int

    def sequence(self) -> Sequence:
        return l_sequence(self.ell, self.n)

    def __str__(self):
        return f"lseq(l={self.ell},n={self.n})"


@dataclass(frozen=True)
class Dim2:
    s: int
    k: int

    def sequence(self) -> Sequence:
        return Sequence((self.s, self.k * self.s - 1))

    def __str__(self):
        return f"dim2(s={self.s},k={self.k})"


@dataclass(frozen=True)
class Dim3:
    s: int
    k: int
    ell: int

    def sequence(self) -> Sequence:
        s2 = self.k * self.s - 1
        return Sequence((self.s, s2, self.ell * s2 - self.s))

    def __str__(self):
        return f"dim3(s={self.s},k={self.k},l={self.ell})"


@dataclass(frozen=True)
class Dim4:
    s1: int
    u1: int
    u2: int
    u3: int
    case: str

    def sequence(self) -> Sequence:
        return sequence_from_u(self.s1, (self.u1, self.u2, self.u3))

    def __str__(self):
        return f"dim4(s1={self.s1},u=({self.u1},{self.u2},{self.u3}),case={self.case})"


@dataclass(frozen=True)
class Custom:
    def __str__(self):
        return "custom"


FamilyDescriptor = Union[ModK, LSeq, Dim2, Dim3, Dim4, Custom]


def _finish(s: Sequence, listed: Iterable[Point]) -> HilbertBasis:
    listed = sorted(set(map(tuple, listed)))
    keep, dropped = [], []
    for x in listed:
        if any(y != x and difference_in_cone(s, x, y) for y in listed):
            dropped.append(x)
        else:
            keep.append(x)
    return HilbertBasis(s, tuple(keep), "closed_form", tuple(dropped))


def stratum(s: Sequence, second_last: int, last: int) -> list[Point]:
    """Lecture hall partitions with ``(x_{n-1}, x_n)`` fixed."""
    return list(descend(s, (second_last, last)))


def v_subset(n: int, subset: tuple[int, ...]) -> Point:
    """``(0,..,0,a_1,..,a_r,a_r+1)`` for ``subset = (a_1 < .. < a_r)``;
    the empty subset gives ``(0,..,0,1)``."""
    if not subset:
        return (0,) * (n - 1) + (1,)
    r = len(subset)
    return (0,) * (n - 1 - r) + tuple(subset) + (subset[-1] + 1,)


def basis_modk(k: int, n: int) -> HilbertBasis:
    if k < 1 or n < 2:
        raise InvalidSequenceError(f"need k >= 1 and n >= 2, got k={k}, n={n}")
    s = modk_sequence(k, n)
    listed = [
        v_subset(n, a)
        for r in range(n - 1)
        for a in combinations(range(1, n - 1), r)
    ]
    listed += stratum(s, (n - 2) * k + 1, (n - 1) * k + 1)
    return _finish(s, listed)


def basis_lseq(ell: int, n: int) -> HilbertBasis:
    if ell < 2 or n < 2:
        raise InvalidSequenceError(f"need ell >= 2 and n >= 2, got ell={ell}, n={n}")
    s = l_sequence(ell, n)
    ext = (0,) + l_sequence(ell, n + 1).entries  # ext[i] = s_i, s_0 = 0
    listed = []
    for i in range(n + 1):
        listed += stratum(s, ext[i], ext[i + 1])
    return _finish(s, listed)


def basis_gorenstein_dim2(s: int, k: int) -> HilbertBasis:
    if s < 1 or k * s - 1 < 1:
        raise InvalidSequenceError(f"(s, ks-1) = ({s}, {k * s - 1}) is not a valid sequence")
    seq = Sequence((s, k * s - 1))
    return _finish(seq, [(0, 1), (1, k), (s, k * s - 1)])


def basis_gorenstein_dim3(s: int, k: int, ell: int) -> HilbertBasis:
    seq = Dim3(s, k, ell).sequence()
    s2, s3 = seq[1], seq[2]
    if s >= 2:
        listed = [(0, 0, 1), (0, 1, ell), (0, k, ell * k - 1), (1, k, ell * k - 1)]
        listed += [(j, s2, s3) for j in range(s + 1)]
    else:
        t = ell * (k - 1) - 1
        listed = [(0, 0, 1), (0, 1, ell), (0, k - 1, t), (1, k - 1, t)]
    return _finish(seq, listed)


def dim4_case(s1: int, u1: int) -> str:
    if s1 == 1 and u1 == 2:
        return "a"
    if s1 == 1 and u1 >= 3:
        return "b"
    if s1 == 2 and u1 == 1:
        return "c"
    if s1 >= 3 and u1 == 1:
        return "d"
    if s1 >= 2 and u1 >= 2:
        return "e"
    raise InvalidSequenceError(f"no case for s1={s1}, u1={u1} (s2 = {u1 * s1 - 1})")


def gorenstein_point_from_u(u: tuple[int, ...]) -> Point:
    """``c_1 = 1``, ``c_2 = u_1``, ``c_{i+1} = u_i c_i - c_{i-1}``."""
    c = [1]
    if u:
        c.append(u[0])
    for ui in u[1:]:
        c.append(ui * c[-1] - c[-2])
    return tuple(c)


def basis_gorenstein_dim4(s1: int, u1: int, u2: int, u3: int) -> HilbertBasis:
    case = dim4_case(s1, u1)
    seq = sequence_from_u(s1, (u1, u2, u3))
    _, s2, s3, s4 = seq.entries
    c = gorenstein_point_from_u((u1, u2, u3))
    top = (0, 0, 0, 1)
    low = (0, 0, 1, u3)
    mid0, mid1 = (0, 0, u2, u2 * u3 - 1), (0, 1, u2, u2 * u3 - 1)
    if case == "a":
        listed = [top, low, (0, 0, s3, s4), (0, 1, s3, s4), (1, 1, s3, s4)]
    elif case == "b":
        listed = [(0, j, s3, s4) for j in range(s2 + 1)]
        listed += [(1, s2, s3, s4), top, low, mid0, mid1]
    elif case == "c":
        listed = [(2, 1, s3, s4), (1, 1, s3, s4), (0, 1, s3, s4), (0, 0, s3, s4), low, top]
    elif case == "d":
        listed = stratum(seq, s3, s4)
        listed += [top, low, (0, 0) + c[2:], (0, 1) + c[2:], (1, 1) + c[2:]]
    else:
        listed = stratum(seq, s3, s4)
        listed += [(0, j) + c[2:] for j in range(c[1] + 1)]
        listed += [c, top, low, mid0, mid1]
    return _finish(seq, listed)


def _as_modk(e: tuple[int, ...]) -> Optional[ModK]:
    if len(e) < 2 or e[0] != 1:
        return None
    k = e[1] - 1
    if k >= 1 and e == modk_sequence(k, len(e)).entries:
        return ModK(k, len(e))
    return None


def _as_lseq(e: tuple[int, ...]) -> Optional[LSeq]:
    if len(e) < 2 or e[0] != 1:
        return None
    ell = e[1]
    if ell >= 2 and e == l_sequence(ell, len(e)).entries:
        return LSeq(ell, len(e))
    return None


def detect_family(s: Sequence) -> FamilyDescriptor:
    """Family of ``s`` in the priority order modk, lseq, dim2, dim3, dim4."""
    e = s.entries
    for probe in (_as_modk, _as_lseq):
        found = probe(e)
        if found is not None:
            return found
    n = len(e)
    if n < 2 or n > 4 or (e[1] + 1) % e[0]:
        return Custom()
    k = (e[1] + 1) // e[0]
    if n == 2:
        return Dim2(e[0], k)
    if (e[2] + e[0]) % e[1]:
        return Custom()
    ell = (e[2] + e[0]) // e[1]
    if n == 3:
        return Dim3(e[0], k, ell)
    if (e[3] + e[1]) % e[2]:
        return Custom()
    return Dim4(e[0], k, ell, (e[3] + e[1]) // e[2], dim4_case(e[0], k))


def basis_for(family: FamilyDescriptor) -> HilbertBasis:
    if isinstance(family, ModK):
        return basis_modk(family.k, family.n)
    if isinstance(family, LSeq):
        return basis_lseq(family.ell, family.n)
    if isinstance(family, Dim2):
        return basis_gorenstein_dim2(family.s, family.k)
    if isinstance(family, Dim3):
        return basis_gorenstein_dim3(family.s, family.k, family.ell)
    if isinstance(family, Dim4):
        return basis_gorenstein_dim4(family.s1, family.u1, family.u2, family.u3)
    raise ValueError("no closed form for a custom sequence")


def closed_form_for(s: Sequence) -> Optional[tuple[FamilyDescriptor, HilbertBasis]]:
    family = detect_family(s)
    if isinstance(family, Custom):
        return None
    return family, basis_for(family)
