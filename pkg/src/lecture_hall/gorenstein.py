"""Gorenstein points of lecture hall cones.

Three independent routes: the u-recurrence for u-generated sequences, the
general recurrence ``c_j s_{j-1} = c_{j-1} s_j + gcd(s_{j-1}, s_j)``, and a
geometric search over interior lattice points.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import gcd
from typing import Optional

from .closed_form import gorenstein_point_from_u
from .core import Point, Sequence, cone_contains, sequence_from_u
from .oracle import interior_points_up_to, verify_gorenstein_shift

UVector = tuple[int, ...]


@dataclass(frozen=True)
class GorensteinCertificate:
    c: Point
    u: Optional[UVector]
    method: str  # "u_recurrence", "general_recurrence" or "geometric"
    verified_bound: int = 0


def detect_u_generated(s: Sequence) -> Optional[UVector]:
    """Return ``u`` with ``s_2 = u_1 s_1 - 1``, ``s_{i+1} = u_i s_i - s_{i-1}``,
    or ``None``. A one-term sequence is generated by the empty ``u``."""
    e = s.entries
    u = []
    prev = 1
    for i in range(len(e) - 1):
        q, r = divmod(e[i + 1] + prev, e[i])
        if r or q < 1:
            return None
        u.append(q)
        prev = e[i]
    return tuple(u)


def gorenstein_point(s: Sequence, u: UVector) -> GorensteinCertificate:
    u = tuple(u)
    if sequence_from_u(s[0], u) != s:
        raise ValueError(f"u={u} does not generate {s}")
    c = gorenstein_point_from_u(u)
    if not cone_contains(s, c, strict=True):
        raise ValueError(f"recurrence point {c} is not interior to the cone of {s}")
    return GorensteinCertificate(c, u, "u_recurrence")


def gorenstein_recurrence(s: Sequence) -> Optional[GorensteinCertificate]:
    """Solve ``c_1 = 1``, ``c_j = (c_{j-1} s_j + gcd(s_{j-1}, s_j)) / s_{j-1}``.

    The gcd is taken over the adjacent pair ending at ``j``.
    """
    e = s.entries
    c = [1]
    for j in range(1, len(e)):
        q, r = divmod(c[-1] * e[j] + gcd(e[j - 1], e[j]), e[j - 1])
        if r or q < 1:
            return None
        c.append(q)
    c = tuple(c)
    if not cone_contains(s, c, strict=True):
        return None
    return GorensteinCertificate(c, None, "general_recurrence")


def geometric_gorenstein_point(s: Sequence, bound: Optional[int] = None) -> Optional[GorensteinCertificate]:
    """Search for the Gorenstein point among interior points with last
    coordinate ``<= bound`` and verify the shift property up to ``bound``.

    A Gorenstein point is the unique interior point of smallest coordinate
    sum. The default bound ``n * s_n`` covers it: the sum of the ray
    generators is interior with last coordinate ``(n-1) s_n + 1``.
    """
    if bound is None:
        bound = s.n * s[-1]
    interior = interior_points_up_to(s, bound)
    if not interior:
        return None
    interior.sort(key=lambda p: (sum(p), p))
    c = interior[0]
    if len(interior) > 1 and sum(interior[1]) == sum(c):
        return None
    if not verify_gorenstein_shift(s, c, bound).passed:
        return None
    return GorensteinCertificate(c, None, "geometric", bound)


def certify(s: Sequence, bound: Optional[int] = None) -> Optional[GorensteinCertificate]:
    """Best available certificate, checked geometrically up to ``bound``
    (default ``3 s_n``). The u-recurrence is preferred when it applies."""
    if bound is None:
        bound = 3 * s[-1]
    u = detect_u_generated(s)
    cert = gorenstein_point(s, u) if u is not None else gorenstein_recurrence(s)
    if cert is None:
        return None
    if not verify_gorenstein_shift(s, cert.c, bound).passed:
        return None
    return replace(cert, verified_bound=bound)
