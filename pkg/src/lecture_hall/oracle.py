"""Brute-force ground truth for lecture hall cones.

Everything here works directly from the cone inequalities and the ray
generators; nothing depends on the closed-form constructions, so these
routines can be used to check them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence as Seq

from .core import (
    HilbertBasis,
    Point,
    Sequence,
    box_volume,
    cone_contains,
    cone_points_up_to,
    difference_in_cone,
    ray_generators,
)

DEFAULT_MAX_VOLUME = 10**6


class BudgetExceededError(RuntimeError):
    def __init__(self, volume: int, budget: int):
        super().__init__(f"fundamental box volume {volume} exceeds budget {budget}")
        self.volume = volume
        self.budget = budget


@dataclass
class VerificationReport:
    subject: str
    checks_run: int = 0
    witnesses: list[Point] = field(default_factory=list)
    details: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.witnesses


def ray_coefficients(s: Sequence, p: Seq[int]) -> tuple[Fraction, ...]:
    """Solve ``p = sum(alpha_i * w_i)`` over the ray generators exactly.

    The generator matrix is upper triangular, so this is forward
    substitution column by column.
    """
    rows = ray_generators(s)
    alpha: list[Fraction] = []
    for j in range(s.n):
        acc = Fraction(p[j]) - sum(alpha[i] * rows[i][j] for i in range(j))
        alpha.append(acc / rows[j][j])
    return tuple(alpha)


def fundamental_box_points(s: Sequence) -> list[Point]:
    """Lattice points of the closed box ``{sum a_i w_i : 0 <= a_i <= 1}``.

    With ``r_j = x_j / s_j`` the coefficients are ``a_1 = r_1``,
    ``a_j = r_j - r_{j-1}`` for ``j < n`` and ``a_n = x_n - s_n r_{n-1}``, so
    each coordinate is confined to an interval fixed by the previous one.
    """
    e = s.entries
    n = len(e)
    out: list[Point] = []

    def rec(prefix: tuple[int, ...]):
        j = len(prefix)
        if j == 0:
            lo, hi = 0, (1 if n == 1 else e[0])
        elif j == n - 1:
            # x_n in [s_n r, s_n r + 1]
            num, den = e[j] * prefix[-1], e[j - 1]
            lo, hi = -(-num // den), (num + den) // den
        else:
            # x_j in [s_j r, s_j (r + 1)]
            num, den = e[j] * prefix[-1], e[j - 1]
            lo, hi = -(-num // den), (num + e[j] * den) // den
        for x in range(lo, hi + 1):
            if j == n - 1:
                out.append(prefix + (x,))
            else:
                rec(prefix + (x,))

    rec(())
    out.sort()
    return out


def hilbert_basis_oracle(s: Sequence, max_volume: int = DEFAULT_MAX_VOLUME) -> HilbertBasis:
    """Hilbert basis by filtering the closed fundamental box.

    Candidates are taken by increasing coordinate sum; a candidate is kept iff
    no already-kept element can be subtracted from it inside the cone.
    """
    volume = box_volume(s)
    if volume > max_volume:
        raise BudgetExceededError(volume, max_volume)
    candidates = [p for p in fundamental_box_points(s) if any(p)]
    candidates.sort(key=lambda p: (sum(p), p))
    accepted: list[Point] = []
    for x in candidates:
        if not any(difference_in_cone(s, x, b) for b in accepted):
            accepted.append(x)
    return HilbertBasis(s, tuple(accepted), "oracle")


def is_reducible(s: Sequence, p: Seq[int], basis: Iterable[Seq[int]]) -> bool:
    p = tuple(p)
    if not cone_contains(s, p):
        raise ValueError(f"{p} is not in the cone of {s}")
    return any(tuple(b) != p and difference_in_cone(s, p, b) for b in basis)


def generates_up_to(
    s: Sequence, basis: Iterable[Seq[int]], bound: int, max_witnesses: Optional[int] = 10
) -> VerificationReport:
    """Check that every cone point with last coordinate ``<= bound`` is a
    nonnegative integer combination of ``basis``.

    Points are visited by increasing coordinate sum, so ``p - b`` has always
    been decided before ``p``. ``max_witnesses=None`` keeps every failure.
    """
    basis = [tuple(b) for b in basis]
    report = VerificationReport(f"generation of {s} up to last coordinate {bound}")
    outside = [b for b in basis if not cone_contains(s, b)]
    if outside:
        raise ValueError(f"basis elements outside the cone: {outside}")
    points = cone_points_up_to(s, bound)
    points.sort(key=lambda p: (sum(p), p))
    reachable: set[Point] = set()
    failures = 0
    for p in points:
        report.checks_run += 1
        if not any(p):
            reachable.add(p)
            continue
        for b in basis:
            q = tuple(a - c for a, c in zip(p, b))
            if q in reachable:
                reachable.add(p)
                break
        else:
            failures += 1
            if max_witnesses is None or len(report.witnesses) < max_witnesses:
                report.witnesses.append(p)
    report.details.append(f"{len(points)} cone points checked, {failures} not generated")
    return report


def interior_points_up_to(s: Sequence, bound: int) -> list[Point]:
    return cone_points_up_to(s, bound, strict=True)


def verify_gorenstein_shift(
    s: Sequence, c: Seq[int], bound: int, max_witnesses: int = 10
) -> VerificationReport:
    """Check ``interior ∩ Z^n = c + (C ∩ Z^n)`` for last coordinate ``<= bound``.

    Every interior point ``x`` must satisfy ``x - c in C``; conversely
    ``c + p`` must be interior for every cone point ``p`` in range.
    """
    c = tuple(c)
    if not cone_contains(s, c, strict=True):
        raise ValueError(f"{c} is not strictly inside the cone of {s}")
    report = VerificationReport(f"Gorenstein shift by {c} for {s} up to {bound}")
    interior = interior_points_up_to(s, bound)
    for x in interior:
        report.checks_run += 1
        if not difference_in_cone(s, x, c) and len(report.witnesses) < max_witnesses:
            report.witnesses.append(x)
    shifted = 0
    for p in cone_points_up_to(s, max(bound - c[-1], 0)):
        report.checks_run += 1
        shifted += 1
        q = tuple(a + b for a, b in zip(c, p))
        if not cone_contains(s, q, strict=True) and len(report.witnesses) < max_witnesses:
            report.witnesses.append(q)
    report.details.append(f"{len(interior)} interior points, {shifted} shifted cone points")
    return report
