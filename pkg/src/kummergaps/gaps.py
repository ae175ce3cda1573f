"""Weierstrass gap sets at a single totally ramified place."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .curve import INF, KummerCurve, floor_sum, mod_inverse
from .errors import ParameterError, PlaceError


@dataclass(frozen=True)
class GapSet:
    place: int
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, a: object) -> bool:
        return a in self.members


def _inverse_at(c: KummerCurve, place: int) -> int:
    if not c.is_totally_ramified(place):
        raise PlaceError(f"place {place} is not totally ramified on {c}")
    return mod_inverse(c.multiplicity(place), c.m)


def is_gap(c: KummerCurve, place: int, a: int) -> bool:
    """a is a gap iff sum_i floor(-a*lam*lam_i/m) + ceil(a/m) <= -1, lam = 1/lam_place mod m."""
    lam = _inverse_at(c, place)
    if a <= 0:
        return False
    m = c.m
    total = sum((-a * lam * x) // m for x in c.multiplicities)
    return total + -(-a // m) <= -1


def bottom_gaps(c: KummerCurve, place: int) -> list[int]:
    """Gaps in ``[1, m-1]``: scan with sum_i floor(-a*lam*lam_i/m) <= -2."""
    lam = _inverse_at(c, place)
    m = c.m
    return [
        a for a in range(1, m)
        if sum((-a * lam * x) // m for x in c.multiplicities) <= -2
    ]


def gap_cap(c: KummerCurve, place: int, a: int) -> int:
    """Largest k with a + k*m still a gap, for a bottom gap ``a``."""
    lam = _inverse_at(c, place)
    return -1 - floor_sum(c, (place,), (a,), -a * lam)


def gap_set(c: KummerCurve, place: int, self_check: bool = False) -> GapSet:
    """G(Q) from the bottom gaps, each expanded by its multiples a + k*m, 0 <= k <= cap."""
    m = c.m
    members = sorted(
        a + k * m
        for a in bottom_gaps(c, place)
        for k in range(gap_cap(c, place, a) + 1)
    )
    if self_check:
        scanned = [a for a in range(1, 2 * c.genus) if is_gap(c, place, a)]
        if scanned != members:
            raise RuntimeError(
                f"bottom-set expansion {members} disagrees with direct scan {scanned} "
                f"at place {place} of {c}"
            )
    return GapSet(place, tuple(members))


def _check_coprime(m: int, r: int) -> None:
    if m < 2 or r < 1:
        raise ParameterError(f"need m >= 2 and r >= 1, got m={m}, r={r}")
    if gcd(m, r) != 1:
        raise ParameterError(f"gcd(m, r) = gcd({m}, {r}) != 1")


def _place_for(kind: str) -> int:
    if kind == "finite":
        return 1
    if kind == "infinite":
        return INF
    raise ValueError(f"place kind must be 'finite' or 'infinite', got {kind!r}")


def special_gap_set(m: int, r: int, place_kind: str) -> GapSet:
    """Closed form of G(Q) for y^m = f(x)^lam, deg f = r, gcd(r*lam, m) = 1."""
    _check_coprime(m, r)
    place = _place_for(place_kind)
    top_j = m - 1 - m // r
    if place != INF:
        members = {
            m * k + j
            for j in range(1, top_j + 1)
            for k in range(0, r - 2 - (r * j) // m + 1)
        }
    else:
        members = {
            m * k - r * j
            for j in range(1, top_j + 1)
            for k in range(-(-r * j // m), r)
        }
    return GapSet(place, tuple(sorted(members)))


def novel_gap_set(m: int, r: int, place_kind: str, form: str | None = None) -> GapSet:
    """Alternative closed form indexed by the quotient ``k`` first.

    At infinity there are two shapes: ``form="v"`` when ``m*v = r + 1`` and
    ``form="u"`` when ``m = u*r + 1``. With ``form=None`` the first one that
    applies is used.
    """
    _check_coprime(m, r)
    place = _place_for(place_kind)
    if place != INF:
        members = {
            m * k + j
            for k in range(0, r - 2 - r // m + 1)
            for j in range(1, m - _ceil_div((k + 1) * m, r) + 1)
        }
        return GapSet(place, tuple(sorted(members)))

    if form is None:
        form = "v" if (r + 1) % m == 0 else "u" if (m - 1) % r == 0 else None
        if form is None:
            raise ParameterError(f"no closed form at infinity: m={m} divides neither r+1 nor is 1 mod r")
    if form == "v":
        if (r + 1) % m:
            raise ParameterError(f"form 'v' needs m | r+1, got m={m}, r={r}")
        v = (r + 1) // m
        members = {
            m * k + j
            for k in range(0, r - v)
            for j in range(1, m - _ceil_div((k + 1) * m, r) + 1)
        }
    elif form == "u":
        if (m - 1) % r:
            raise ParameterError(f"form 'u' needs r | m-1, got m={m}, r={r}")
        u = (m - 1) // r
        members = {m * k - r * j for k in range(1, r) for j in range(1, k * u + 1)}
    else:
        raise ValueError(f"form must be 'v', 'u' or None, got {form!r}")
    return GapSet(place, tuple(sorted(members)))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)
