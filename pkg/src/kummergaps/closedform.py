"""Explicit pure-gap sets and boxes of consecutive pure gaps for y^m = f(x)^lam.

Everything here depends only on ``m``, ``r = deg f`` and shape parameters;
``lam`` enters solely through the standing assumption gcd(r*lam, m) = 1.
Finite places are ``1..s`` and the place at infinity is ``0``, listed first.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Sequence

import numpy as np

from .curve import INF
from .errors import ParameterError
from .gaps import special_gap_set
from .puregaps import GapTuple, box_points


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class PureGapBox:
    """All lattice points between ``lower`` and ``upper`` (inclusive) are pure gaps."""

    selection: tuple[int, ...]
    lower: GapTuple
    upper: GapTuple

    def __post_init__(self) -> None:
        if not len(self.selection) == len(self.lower) == len(self.upper):
            raise ParameterError("box corners and selection must have equal length")
        if any(lo > hi for lo, hi in zip(self.lower, self.upper)):
            raise ParameterError(f"empty box: lower {self.lower} exceeds upper {self.upper}")
        if min(self.lower) < 1:
            raise ParameterError(f"box coordinates must be positive, got lower {self.lower}")

    @property
    def widths(self) -> tuple[int, ...]:
        return tuple(hi - lo for lo, hi in zip(self.lower, self.upper))

    def size(self) -> int:
        n = 1
        for w in self.widths:
            n *= w + 1
        return n

    def points(self) -> np.ndarray:
        return box_points(self.lower, self.upper)

    def __contains__(self, point: object) -> bool:
        return all(lo <= x <= hi for lo, x, hi in zip(self.lower, point, self.upper))


def _check_mr(m: int, r: int) -> None:
    if m < 2 or r < 1:
        raise ParameterError(f"need m >= 2 and r >= 1, got m={m}, r={r}")
    if gcd(m, r) != 1:
        raise ParameterError(f"gcd(m, r) = gcd({m}, {r}) != 1")


def staircase(bounds: Sequence[int]) -> Iterator[GapTuple]:
    """Tuples j with 1 <= j_sigma(i) <= bounds[i] for some permutation sigma.

    ``bounds`` must be non-increasing. Such a tuple is exactly one whose
    descending sort sits under ``bounds`` componentwise, so we walk the
    sorted multisets and emit their distinct permutations.
    """
    bounds = list(bounds)
    if any(lo > hi for hi, lo in zip(bounds, bounds[1:])):
        raise ValueError(f"bounds must be non-increasing, got {bounds}")
    if not bounds or bounds[-1] < 1:
        return

    def descending(i: int, cap: int) -> Iterator[tuple[int, ...]]:
        if i == len(bounds):
            yield ()
            return
        for j in range(min(cap, bounds[i]), 0, -1):
            for rest in descending(i + 1, j):
                yield (j,) + rest

    for multiset in descending(0, bounds[0]):
        yield from distinct_permutations(multiset)


def distinct_permutations(values: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Each distinct ordering of ``values`` once, in lexicographic order."""
    a = sorted(values)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def compositions(dim: int, total: int) -> Iterator[tuple[int, ...]]:
    """Nonnegative integer vectors of length ``dim`` summing to exactly ``total``."""
    if dim == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(dim - 1, total - first):
            yield (first,) + rest


def _shifted(m: int, base: Sequence[int], js: Iterator[GapTuple], k: int, dim: int) -> set[GapTuple]:
    out = set()
    js = list(js)
    for ks in compositions(dim, k):
        for j in js:
            out.add(tuple(b + m * ki + ji for b, ki, ji in zip(base, ks, j)))
    return out


def pure_gaps_finite(m: int, r: int, s: int) -> list[GapTuple]:
    """G_0(Q_1, ..., Q_s)."""
    _check_mr(m, r)
    if not 2 <= s <= r:
        raise ParameterError(f"need 2 <= s <= r, got s={s}, r={r}")
    out: set[GapTuple] = set()
    for k in range(0, r - r // m - 1 - s + 1):
        t = [m - _ceil_div(m * (k + i), r) for i in range(1, s + 1)]
        out |= _shifted(m, [0] * s, staircase(t), k, s)
    return sorted(out)


def pure_gaps_with_infinity_v(m: int, r: int, s: int) -> list[GapTuple]:
    """G_0(Q_inf, Q_1, ..., Q_s) when m*v = r + 1."""
    _check_mr(m, r)
    if (r + 1) % m:
        raise ParameterError(f"need m | r+1, got m={m}, r={r}")
    if not 1 <= s <= r:
        raise ParameterError(f"need 1 <= s <= r, got s={s}, r={r}")
    v = (r + 1) // m
    out: set[GapTuple] = set()
    for k in range(0, r - v - 1 - s + 1):
        t = [m - _ceil_div(m * (k + i + 1), r) for i in range(0, s + 1)]
        out |= _shifted(m, [0] * (s + 1), staircase(t), k, s + 1)
    return sorted(out)


def _t_general(m: int, r: int, k: int, i: int, j0: int) -> int:
    t = m - _ceil_div((k + i) * m, r) + j0
    return t - 1 if k + i == r else t


def pure_gaps_with_infinity_general(m: int, r: int, s: int, literal: bool = False) -> list[GapTuple]:
    """G_0(Q_inf, Q_1, ..., Q_s) for arbitrary coprime m, r.

    The total shift budget ``k`` runs up to ``min(d_j0, r - 1)``. Beyond
    ``r - 1`` the head ``m*k - r*j0`` of the generating box is no longer a
    gap at infinity and the box family stops being valid. ``literal=True``
    runs ``k`` all the way to ``d_j0``; that variant over-generates and is
    kept only so the discrepancy can be demonstrated.
    """
    _check_mr(m, r)
    if not 1 <= s <= r:
        raise ParameterError(f"need 1 <= s <= r, got s={s}, r={r}")
    if s >= r - r // m:
        return []
    out: set[GapTuple] = set()
    for j0 in range(1, m - 1 - m // r + 1):
        k0_min = _ceil_div(r * j0, m)
        d = r - ((1 - j0) * r) // m - s - 1
        k_max = d if literal else min(d, r - 1)
        for k in range(k0_min, k_max + 1):
            t = [_t_general(m, r, k, i, j0) for i in range(1, s + 1)]
            js = list(staircase(t))
            if not js:
                continue
            for extra0 in range(0, k - k0_min + 1):
                rest = k - k0_min - extra0
                head = m * (k0_min + extra0) - r * j0
                for ks in compositions(s, rest):
                    for j in js:
                        out.add((head,) + tuple(m * ki + ji for ki, ji in zip(ks, j)))
    return sorted(out)


def bottom_finite(m: int, r: int, s: int) -> list[GapTuple]:
    """Bottom slice of ``pure_gaps_finite``: staircase with t_i = m - ceil(i*m/r)."""
    _check_mr(m, r)
    if s >= r - r // m:
        return []
    return sorted(staircase([m - _ceil_div(i * m, r) for i in range(1, s + 1)]))


def bottom_with_infinity_v(m: int, r: int, s: int) -> list[GapTuple]:
    _check_mr(m, r)
    v = (r + 1) // m
    if (r + 1) % m or s >= r - v:
        return []
    return sorted(staircase([m - _ceil_div((i + 1) * m, r) for i in range(0, s + 1)]))


def bottom_with_infinity_general(m: int, r: int, s: int) -> list[GapTuple]:
    _check_mr(m, r)
    if s >= r - r // m:
        return []
    out: set[GapTuple] = set()
    for j0 in range(1, m - 1 - m // r + 1):
        k0 = _ceil_div(r * j0, m)
        t = [_t_general(m, r, k0, i, j0) for i in range(1, s + 1)]
        out |= {(m * k0 - r * j0,) + j for j in staircase(t)}
    return sorted(out)


def _finite_max(m: int, r: int) -> int:
    return r - r // m - 1


def family_box_finite(m: int, r: int, s: int, k: int) -> PureGapBox:
    """Box (mk+1, 1, ..., 1)..(mk+t_1, t_2, ..., t_s), t_i = m - ceil((k+i)m/r)."""
    _check_mr(m, r)
    top = _finite_max(m, r)
    if not 2 <= s <= top:
        raise ParameterError(f"need 2 <= s <= {top}, got s={s}")
    if not 0 <= k <= top - s:
        raise ParameterError(f"need 0 <= k <= {top - s}, got k={k}")
    t = [m - _ceil_div((k + i) * m, r) for i in range(1, s + 1)]
    lower = (m * k + 1,) + (1,) * (s - 1)
    upper = (m * k + t[0],) + tuple(t[1:])
    return PureGapBox(tuple(range(1, s + 1)), lower, upper)


def family_box_infinity_v(m: int, r: int, s: int, k: int) -> PureGapBox:
    """Infinity first: (mk+1, 1, ..., 1)..(mk+t_0, t_1, ..., t_s), t_i = m - ceil(m(k+i+1)/r)."""
    _check_mr(m, r)
    if (r + 1) % m:
        raise ParameterError(f"need m | r+1, got m={m}, r={r}")
    v = (r + 1) // m
    if not 1 <= s <= r - v - 1:
        raise ParameterError(f"need 1 <= s <= {r - v - 1}, got s={s}")
    if not 0 <= k <= r - v - 1 - s:
        raise ParameterError(f"need 0 <= k <= {r - v - 1 - s}, got k={k}")
    t = [m - _ceil_div(m * (k + i + 1), r) for i in range(0, s + 1)]
    lower = (m * k + 1,) + (1,) * s
    upper = (m * k + t[0],) + tuple(t[1:])
    return PureGapBox((INF,) + tuple(range(1, s + 1)), lower, upper)


def family_box_infinity_general(m: int, r: int, s: int, k: int, j0: int) -> PureGapBox:
    """Box {mk - r*j0} x prod [1, t_i]; needs mk - r*j0 to be a gap at infinity."""
    _check_mr(m, r)
    if not 1 <= s <= r:
        raise ParameterError(f"need 1 <= s <= r, got s={s}")
    if not 1 <= k <= r - 1 or not 1 <= j0 <= m - 1:
        raise ParameterError(f"need 1 <= k <= {r - 1} and 1 <= j0 <= {m - 1}, got k={k}, j0={j0}")
    head = m * k - r * j0
    if head not in special_gap_set(m, r, "infinite"):
        raise ParameterError(f"{head} = {m}*{k} - {r}*{j0} is not a gap at infinity")
    t = [_t_general(m, r, k, i, j0) for i in range(1, s + 1)]
    if min(t) < 1:
        raise ParameterError(f"empty box: bounds {t}")
    return PureGapBox((INF,) + tuple(range(1, s + 1)), (head,) + (1,) * s, (head,) + tuple(t))


def family_box_infinity_u(m: int, r: int, s: int, c: int) -> PureGapBox:
    """[rc+r-s-1, rc+r-1] at infinity times prod [1, u(r-i)-c-1], when m = u*r + 1."""
    _check_mr(m, r)
    if (m - 1) % r:
        raise ParameterError(f"need r | m-1, got m={m}, r={r}")
    u = (m - 1) // r
    if not 1 <= s <= r - 2:
        raise ParameterError(f"need 1 <= s <= {r - 2}, got s={s}")
    if not 0 <= c <= u * (r - s - 1) - 1:
        raise ParameterError(f"need 0 <= c <= {u * (r - s - 1) - 1}, got c={c}")
    t = [u * (r - i) - c - 1 for i in range(1, s + 1)]
    lower = (r * c + r - s - 1,) + (1,) * s
    upper = (r * c + r - 1,) + tuple(t)
    return PureGapBox((INF,) + tuple(range(1, s + 1)), lower, upper)
