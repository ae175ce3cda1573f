"""Pure gaps at several totally ramified places.

A tuple ``(a_0, ..., a_s)`` aligned with a selection ``(j_0, ..., j_s)`` is a
pure gap iff, for every selected position ``v``, the floor sum evaluated at
``t = -a_v * sigma_v`` is at most -1, where ``sigma_v`` inverts the place's
multiplicity mod m. The full set is recovered from its bottom slice
``[1, m-1]^(s+1)`` plus one expansion budget ("cap") per bottom tuple.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .curve import KummerCurve, complement, floor_sum, mod_inverse, selection
from .gaps import bottom_gaps

GapTuple = tuple[int, ...]


@dataclass(frozen=True)
class BottomSet:
    selection: tuple[int, ...]
    tuples: tuple[GapTuple, ...]
    caps: dict[GapTuple, int]

    def __len__(self) -> int:
        return len(self.tuples)

    def __iter__(self) -> Iterator[GapTuple]:
        return iter(self.tuples)


def _prepare(c: KummerCurve, sel: Sequence[int], values: Sequence[int]) -> tuple[tuple[int, ...], GapTuple]:
    sel = selection(c, sel)
    values = tuple(int(a) for a in values)
    if len(values) != len(sel):
        raise ValueError(f"tuple length {len(values)} does not match selection length {len(sel)}")
    if any(a < 0 for a in values):
        raise ValueError(f"tuple coordinates must be >= 0, got {values}")
    return sel, values


def _sigmas(c: KummerCurve, sel: Sequence[int]) -> list[int]:
    return [mod_inverse(c.multiplicity(p), c.m) for p in sel]


def is_pure_gap_oracle(c: KummerCurve, sel: Sequence[int], values: Sequence[int]) -> bool:
    """Brute-force test over every t in 0..m-1.

    Each t must give either a negative floor sum, or a nonnegative one with
    floor((a_i + t*lam_i)/m) == floor((a_i + t*lam_i - 1)/m) for all i.
    """
    sel, values = _prepare(c, sel, values)
    m = c.m
    lams = [c.multiplicity(p) for p in sel]
    for t in range(m):
        if floor_sum(c, sel, values, t) < 0:
            continue
        if any((a + t * lam) // m != (a + t * lam - 1) // m for a, lam in zip(values, lams)):
            return False
    return True


def _criterion_sums(c: KummerCurve, sel: Sequence[int], values: GapTuple) -> list[int]:
    return [floor_sum(c, sel, values, -a * sig) for a, sig in zip(values, _sigmas(c, sel))]


def is_pure_gap(c: KummerCurve, sel: Sequence[int], values: Sequence[int]) -> bool:
    sel, values = _prepare(c, sel, values)
    return all(x <= -1 for x in _criterion_sums(c, sel, values))


def pure_gap_mask(c: KummerCurve, sel: Sequence[int], tuples: np.ndarray) -> np.ndarray:
    """Vectorized ``is_pure_gap`` over the rows of an integer array."""
    sel = selection(c, sel)
    a = _as_rows(tuples, len(sel))
    m = c.m
    lams = np.array([c.multiplicity(p) for p in sel], dtype=np.int64)
    rest = np.array(complement(c, sel), dtype=np.int64)
    ok = np.ones(len(a), dtype=bool)
    for v, sig in enumerate(_sigmas(c, sel)):
        t = -a[:, v] * sig
        total = ((a + t[:, None] * lams) // m).sum(axis=1)
        if rest.size:
            total += ((t[:, None] * rest) // m).sum(axis=1)
        ok &= total <= -1
    return ok


def pure_gap_mask_oracle(c: KummerCurve, sel: Sequence[int], tuples: np.ndarray) -> np.ndarray:
    """Vectorized ``is_pure_gap_oracle`` over the rows of an integer array."""
    sel = selection(c, sel)
    a = _as_rows(tuples, len(sel))
    m = c.m
    lams = np.array([c.multiplicity(p) for p in sel], dtype=np.int64)
    rest = np.array(complement(c, sel), dtype=np.int64)
    ok = np.ones(len(a), dtype=bool)
    for t in range(m):
        shifted = a + t * lams
        hi = shifted // m
        total = hi.sum(axis=1) + sum((t * int(x)) // m for x in rest)
        flat = (hi == (shifted - 1) // m).all(axis=1)
        ok &= (total < 0) | flat
    return ok


def _as_rows(tuples, width: int) -> np.ndarray:
    a = np.asarray(tuples, dtype=np.int64)
    if a.ndim == 1 and width == 1:
        a = a[:, None]
    if a.ndim != 2 or a.shape[1] != width:
        raise ValueError(f"expected an (N, {width}) array, got shape {a.shape}")
    return a


def extend_bottom(
    c: KummerCurve,
    sel: Sequence[int],
    prefix_bottom: Sequence[GapTuple],
    pruned: bool = True,
) -> list[GapTuple]:
    """Bottom set at ``sel`` from the bottom set at ``sel[:-1]``.

    With ``pruned`` the scan over the new coordinate stops as soon as the
    inequality fails at an ``a`` with some ``a_i == a*lam*lam_i (mod m)``:
    no larger ``a`` can then complete that prefix. The unpruned variant
    re-tests every candidate with the full criterion.
    """
    sel = selection(c, sel)
    m = c.m
    last = sel[-1]
    lam = mod_inverse(c.multiplicity(last), m)
    prefix_lams = [c.multiplicity(p) for p in sel[:-1]]
    out = []
    for prefix in prefix_bottom:
        for a in range(1, m):
            cand = tuple(prefix) + (a,)
            if not pruned:
                if is_pure_gap(c, sel, cand):
                    out.append(cand)
                continue
            if floor_sum(c, sel, cand, -a * lam) <= -1:
                out.append(cand)
            elif any((ai - a * lam * li) % m == 0 for ai, li in zip(prefix, prefix_lams)):
                break
    return out


def _cap(c: KummerCurve, sel: Sequence[int], values: GapTuple) -> int:
    return -1 - max(_criterion_sums(c, sel, values))


def bottom_pure_gaps(c: KummerCurve, sel: Sequence[int], pruned: bool = True) -> BottomSet:
    """Pure gaps inside ``[1, m-1]^(s+1)``, built one place at a time, with their caps."""
    sel = selection(c, sel)
    current: list[GapTuple] = [(a,) for a in bottom_gaps(c, sel[0])]
    for i in range(2, len(sel) + 1):
        if not current:
            break
        current = extend_bottom(c, sel[:i], current, pruned=pruned)
    tuples = tuple(sorted(current))
    caps = {a: _cap(c, sel, a) for a in tuples}
    return BottomSet(sel, tuples, caps)


def shift_vectors(dim: int, budget: int) -> Iterator[tuple[int, ...]]:
    """All nonnegative integer vectors of length ``dim`` with sum <= ``budget``."""
    if dim == 0:
        yield ()
        return
    for first in range(budget + 1):
        for rest in shift_vectors(dim - 1, budget - first):
            yield (first,) + rest


def expand_bottom(bottom: BottomSet, m: int) -> list[GapTuple]:
    out = set()
    for a in bottom.tuples:
        for ks in shift_vectors(len(a), bottom.caps[a]):
            out.add(tuple(ai + m * k for ai, k in zip(a, ks)))
    return sorted(out)


def full_pure_gap_set(c: KummerCurve, sel: Sequence[int]) -> list[GapTuple]:
    """Every pure gap at ``sel``, in lexicographic order."""
    return expand_bottom(bottom_pure_gaps(c, sel), c.m)


def scan_pure_gap_set(c: KummerCurve, sel: Sequence[int]) -> list[GapTuple]:
    """Reference enumeration: oracle over the whole box ``[1, 2g-1]^(s+1)``."""
    sel = selection(c, sel)
    top = 2 * c.genus - 1
    if top < 1:
        return []
    grid = box_points([1] * len(sel), [top] * len(sel))
    mask = pure_gap_mask_oracle(c, sel, grid)
    return [tuple(int(x) for x in row) for row in grid[mask]]


def box_points(lower: Sequence[int], upper: Sequence[int]) -> np.ndarray:
    """Lattice points of the box, one per row, in lexicographic order."""
    axes = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in zip(lower, upper)]
    if any(ax.size == 0 for ax in axes):
        return np.empty((0, len(axes)), dtype=np.int64)
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([g.ravel() for g in mesh], axis=1)


def extend_pure_gap(
    c: KummerCurve,
    sel: Sequence[int],
    known: Sequence[int],
    a: int,
    check: bool = False,
) -> bool:
    """Decide whether ``known[:s] + (a,)`` is a pure gap with a single inequality.

    Two situations are supported, ``s = len(sel) - 1``:

    * ``known`` has length ``s`` and is a pure gap at ``sel[:-1]``; ``a`` must be 1.
    * ``known`` has length ``s + 1``, is a pure gap at ``sel`` and ends in
      ``a - 1`` with ``1 <= a - 1 <= m - 2``.
    """
    sel = selection(c, sel)
    s = len(sel) - 1
    if s < 1:
        raise ValueError("need at least two places")
    known = tuple(known)
    if len(known) == s:
        if a != 1:
            raise ValueError(f"extending a prefix only decides the new coordinate 1, got {a}")
        hyp_sel, prefix = sel[:-1], known
    elif len(known) == s + 1:
        if a != known[-1] + 1 or not 1 <= known[-1] <= c.m - 2:
            raise ValueError("increment needs a = known[-1] + 1 with 1 <= known[-1] <= m-2")
        hyp_sel, prefix = sel, known[:-1]
    else:
        raise ValueError(f"known tuple has length {len(known)}, expected {s} or {s + 1}")

    if check and not is_pure_gap(c, hyp_sel, known):
        raise ValueError(f"hypothesis fails: {known} is not a pure gap at {hyp_sel}")

    lam = mod_inverse(c.multiplicity(sel[-1]), c.m)
    return floor_sum(c, sel, prefix + (a,), -a * lam) <= -1


def project_pure_gap(
    c: KummerCurve,
    sel: Sequence[int],
    values: Sequence[int],
    subset: Sequence[int],
) -> GapTuple:
    """Restrict a pure gap to the positions in ``subset``; the result must stay pure."""
    sub_sel = tuple(sel[i] for i in subset)
    projected = tuple(values[i] for i in subset)
    if not is_pure_gap(c, sub_sel, projected):
        raise AssertionError(f"projection {projected} at {sub_sel} of {tuple(values)} is not pure")
    return projected


def permute_selection(sel: Sequence[int], perm: Sequence[int]) -> tuple[int, ...]:
    return tuple(sel[i] for i in perm)


def all_selections(c: KummerCurve, max_size: int) -> Iterator[tuple[int, ...]]:
    """Every ordered selection of distinct totally ramified places of size <= max_size."""
    places = c.totally_ramified_places()
    for size in range(1, min(max_size, len(places)) + 1):
        yield from itertools.permutations(places, size)
