"""Kummer extensions y^m = prod (x - alpha_i)^lambda_i and their floor-sum arithmetic.

Only the exponent ``m`` and the multiplicities ``lambda_i`` matter for every
gap computation in this package; the roots ``alpha_i`` are assumed pairwise
distinct and are never stored.

Places are referred to by integer index: ``0`` is the place at infinity
(multiplicity ``lambda_0 = -sum(lambda_i)``), and ``1..r`` are the finite
branch places.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

from .errors import CurveError, PlaceError

INF = 0

_INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class KummerCurve:
    """The arithmetic model of a Kummer extension.

    ``lambdas`` are the finite multiplicities ``lambda_1..lambda_r``; the
    multiplicity at infinity is derived so that all ``r + 1`` of them sum
    to zero.
    """

    m: int
    lambdas: tuple[int, ...]
    _mults: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        lambdas = tuple(int(x) for x in self.lambdas)
        object.__setattr__(self, "lambdas", lambdas)
        if int(self.m) != self.m or self.m < 2:
            raise CurveError(f"Kummer exponent must be an integer >= 2, got {self.m!r}")
        if not lambdas:
            raise CurveError("at least one finite multiplicity is required")
        if any(x == 0 for x in lambdas):
            raise CurveError(f"multiplicities must be nonzero, got {list(lambdas)}")
        object.__setattr__(self, "_mults", (-sum(lambdas),) + lambdas)

        # Keep every floor-sum numerator inside int64, as a C port would need.
        bound = self.m * max(abs(x) for x in self._mults) * max(2 * self.genus - 1, 1)
        if bound > _INT64_MAX:
            raise CurveError("parameters too large: floor-sum numerators would overflow int64")

    @property
    def r(self) -> int:
        return len(self.lambdas)

    @property
    def lambda0(self) -> int:
        return self._mults[0]

    @property
    def multiplicities(self) -> tuple[int, ...]:
        """``(lambda_0, lambda_1, ..., lambda_r)``, indexed by place."""
        return self._mults

    @cached_property
    def genus(self) -> int:
        return genus(self)

    def multiplicity(self, place: int) -> int:
        self.check_place(place)
        return self._mults[place]

    def check_place(self, place: int) -> None:
        if not isinstance(place, int) or not 0 <= place <= self.r:
            raise PlaceError(f"place index {place!r} out of range 0..{self.r}")

    def is_totally_ramified(self, place: int) -> bool:
        return gcd(self.m, self.multiplicity(place)) == 1

    def totally_ramified_places(self) -> tuple[int, ...]:
        return tuple(p for p in range(self.r + 1) if gcd(self.m, self._mults[p]) == 1)

    def is_equal_multiplicity(self) -> bool:
        """True for curves of the form y^m = f(x)^lambda with gcd(r*lambda, m) = 1."""
        lam = self.lambdas[0]
        return all(x == lam for x in self.lambdas) and gcd(self.r * lam, self.m) == 1


def new_curve(m: int, lambdas: Iterable[int]) -> KummerCurve:
    return KummerCurve(m, tuple(lambdas))


def genus(c: KummerCurve) -> int:
    num = c.m * (c.r - 1) + 2 - sum(gcd(c.m, x) for x in c.multiplicities)
    if num % 2:
        raise AssertionError(f"odd genus numerator {num} for {c}")
    return num // 2


def mod_inverse(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m``, normalized to ``[1, m-1]``."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    try:
        return pow(a % m, -1, m)
    except ValueError:
        raise ValueError(f"{a} is not invertible modulo {m}") from None


def selection(c: KummerCurve, places: Sequence[int]) -> tuple[int, ...]:
    """Validate an ordered selection of distinct totally ramified places."""
    sel = tuple(places)
    if not 1 <= len(sel) <= c.r + 1:
        raise PlaceError(f"selection must hold 1..{c.r + 1} places, got {len(sel)}")
    if len(set(sel)) != len(sel):
        raise PlaceError(f"duplicate places in selection {list(sel)}")
    for p in sel:
        if not c.is_totally_ramified(p):
            raise PlaceError(
                f"place {place_label(p)} is not totally ramified "
                f"(gcd({c.m}, {c.multiplicity(p)}) != 1)"
            )
    return sel


def complement(c: KummerCurve, sel: Sequence[int]) -> tuple[int, ...]:
    """Multiplicities of the places not in ``sel``."""
    chosen = set(sel)
    return tuple(lam for p, lam in enumerate(c.multiplicities) if p not in chosen)


def floor_sum(c: KummerCurve, sel: Sequence[int], values: Sequence[int], t: int) -> int:
    """sum_i floor((a_i + t*lam_{j_i}) / m) + sum over unselected floor(t*lam / m).

    Python's ``//`` already rounds toward -infinity, which is the floor the
    formulas need for negative numerators.
    """
    if len(values) != len(sel):
        raise ValueError(f"tuple length {len(values)} does not match selection length {len(sel)}")
    m = c.m
    mults = c.multiplicities
    total = sum((a + t * mults[p]) // m for a, p in zip(values, sel))
    total += sum((t * lam) // m for lam in complement(c, sel))
    return total


def check_floor_minus(m: int, r: int) -> bool:
    """floor(r(j+1)/m) - floor(rj/m) >= floor(r/m) for every 1 <= j <= m-1."""
    if gcd(m, r) != 1:
        raise ValueError(f"gcd({m}, {r}) != 1")
    return all((r * (j + 1)) // m - (r * j) // m >= r // m for j in range(1, m))


def place_label(place: int) -> str:
    return "inf" if place == INF else str(place)


def parse_place(token: str) -> int:
    token = token.strip().lower()
    if token in ("inf", "infinity", "oo"):
        return INF
    try:
        value = int(token)
    except ValueError:
        raise PlaceError(f"bad place token {token!r}") from None
    if value < 1:
        raise PlaceError(f"finite places are 1-based, got {value}")
    return value
