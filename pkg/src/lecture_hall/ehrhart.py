"""Lattice point counts of lecture hall polytopes and their dilates.

``P(s)`` is the cone cut by ``x_n/s_n <= 1`` and ``R(s)`` the cone cut by
``x_n/s_n <= 1/s_n``; the ``t``-th dilates are therefore the cone points with
``x_n <= t*s_n`` and ``x_n <= t`` respectively.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .closed_form import Custom, Dim2, Dim3, Dim4, FamilyDescriptor, LSeq, ModK
from .core import Sequence, l_sequence

AUTHORITATIVE = "authoritative"
UNDER_REVIEW = "paper-formula-under-review"


def count_chain(s: Sequence, top: int, strict: bool = False) -> int:
    """Number of cone (or interior) lattice points with ``x_n <= top``.

    Dynamic programme over the chain: ``f_j(x)`` counts chains ending in
    ``x_j = x``; each level only needs prefix sums of the level below.
    """
    if top < 0:
        return 0
    e = s.entries
    n = len(e)
    # largest admissible value of each coordinate
    caps = [0] * n
    caps[-1] = top
    for j in range(n - 2, -1, -1):
        caps[j] = (caps[j + 1] * e[j]) // e[j + 1]
    lo0 = 1 if strict else 0
    counts = [1 if x >= lo0 else 0 for x in range(caps[0] + 1)]
    for j in range(1, n):
        prefix = [0]
        for v in counts:
            prefix.append(prefix[-1] + v)
        nxt = []
        for y in range(caps[j] + 1):
            num, den = y * e[j - 1], e[j]
            hi = (num - 1) // den if strict else num // den
            hi = min(hi, caps[j - 1])
            nxt.append(prefix[hi + 1] if hi >= 0 else 0)
        counts = nxt
    return sum(counts)


def count_P(s: Sequence, t: int) -> int:
    """``#(t P(s) ∩ Z^n)``."""
    return count_chain(s, t * s[-1])


def count_P_interior(s: Sequence, t: int) -> int:
    """Lattice points in the interior of ``t P(s)``."""
    if t <= 0:
        return 0
    return count_chain(s, t * s[-1] - 1, strict=True)


def count_R(s: Sequence, t: int) -> int:
    """``#(t R(s) ∩ Z^n)``."""
    return count_chain(s, t)


def generalized_binomial(q: Fraction, j: int) -> Fraction:
    out = Fraction(1)
    for i in range(j):
        out *= q - i
    return out / factorial(j)


def ehrhart_modk(k: int, n: int, t: int) -> int:
    """Closed formula for ``#(t P_{k,n} ∩ Z^n)``, ``P_{k,n}`` the 1 mod k polytope:

        (-1)^t sum_{p=0}^t C(1/k - 1, t - p) C(-1/k, p) (kp + 1)^n
    """
    if k < 1 or n < 1 or t < 0:
        raise ValueError(f"need k, n >= 1 and t >= 0, got {k}, {n}, {t}")
    a, b = Fraction(1, k) - 1, Fraction(-1, k)
    total = sum(
        generalized_binomial(a, t - p) * generalized_binomial(b, p) * (k * p + 1) ** n
        for p in range(t + 1)
    )
    total *= (-1) ** t
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral Ehrhart value {total} for k={k}, n={n}, t={t}")
    return int(total)


@dataclass(frozen=True)
class CardinalityFormula:
    value: int
    flag: str
    note: str = ""

    @property
    def authoritative(self) -> bool:
        return self.flag == AUTHORITATIVE


def cardinality_formula(f: FamilyDescriptor) -> CardinalityFormula:
    """Published Hilbert basis size for a family.

    Values outside the regime where the published list is irredundant, and the
    two four-dimensional cases whose counting argument does not match the
    element list, are returned with the ``UNDER_REVIEW`` flag.
    """
    if isinstance(f, ModK):
        k, n = f.k, f.n
        return CardinalityFormula(((k + 1) ** (n - 2) + (k - 1)) // k + 2 ** (n - 2), AUTHORITATIVE)
    if isinstance(f, LSeq):
        if f.n <= 2:
            return CardinalityFormula(2, AUTHORITATIVE)
        low = l_sequence(f.ell, f.n - 2)
        return CardinalityFormula(2 + sum(count_R(low, sj) for sj in low), AUTHORITATIVE)
    if isinstance(f, Dim2):
        return CardinalityFormula(3 if f.s >= 2 else 2, AUTHORITATIVE)
    if isinstance(f, Dim3):
        if f.s >= 2:
            if f.k == 1:
                return CardinalityFormula(f.s + 5, UNDER_REVIEW, "k=1: (0,1,l) = (0,1,l-1) + (0,0,1)")
            return CardinalityFormula(f.s + 5, AUTHORITATIVE)
        if f.k == 2:
            return CardinalityFormula(4, UNDER_REVIEW, "s=1, k=2: (0,1,l) = (0,1,l-1) + (0,0,1)")
        return CardinalityFormula(4, AUTHORITATIVE)
    if isinstance(f, Dim4):
        return _dim4_formula(f)
    if isinstance(f, Custom):
        raise ValueError("no cardinality formula for a custom sequence")
    raise TypeError(f"not a family descriptor: {f!r}")


def _dim4_formula(f: Dim4) -> CardinalityFormula:
    s1, u1, u2 = f.s1, f.u1, f.u2
    s2 = u1 * s1 - 1
    s3 = u2 * s2 - s1
    value = {
        "a": lambda: 5,
        "b": lambda: s2 + 6,
        "c": lambda: 6,
        "d": lambda: (s1 + 1) * (s1 - 2) // 2 + 5,
        "e": lambda: u1 * s1 * (s1 + 1) // 2 + u1 * u1 + 6,
    }[f.case]()
    if f.case in ("d", "e"):
        return CardinalityFormula(value, UNDER_REVIEW, f"case ({f.case}) counting argument disagrees with the element list")
    if s3 == 1 or u2 == 1:
        return CardinalityFormula(value, UNDER_REVIEW, "s3=1 or u2=1: (0,0,1,u3) is reducible")
    return CardinalityFormula(value, AUTHORITATIVE)
