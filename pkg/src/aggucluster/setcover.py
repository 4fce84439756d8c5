"""Multi-interval set cover.

Each input set is a collection of closed 1D intervals. The union of all
intervals is cut at every endpoint into disjoint atoms, after which the
problem is an ordinary set cover over atoms and is handed to the greedy
``ln n + 1`` approximation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence


class Interval(NamedTuple):
    lo: float
    hi: float


def as_interval(iv) -> Interval:
    lo, hi = float(iv[0]), float(iv[1])
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise ValueError(f"non-finite interval {iv!r}")
    if lo > hi:
        raise ValueError(f"interval with lo > hi: {iv!r}")
    return Interval(lo, hi)


@dataclass
class MultiIntervalInstance:
    sets: list

    def __post_init__(self):
        self.sets = [[as_interval(iv) for iv in q] for q in self.sets]

    def __len__(self):
        return len(self.sets)

    def all_intervals(self):
        return [iv for q in self.sets for iv in q]


@dataclass
class CoverInstance:
    atoms: list
    covers: list  # one frozenset of atom indices per input set


@dataclass
class CoverSolution:
    chosen: list
    atom_coverage: list = field(default_factory=list)

    @property
    def n_atoms(self) -> int:
        return len(self.atom_coverage)

    @property
    def size(self) -> int:
        return len(self.chosen)


def greedy_bound(n_atoms: int) -> float:
    """Worst-case ratio of greedy to optimal: ln|U| + 1."""
    return math.log(max(n_atoms, 1)) + 1.0


def _covered(x: float, intervals) -> bool:
    return any(iv.lo <= x <= iv.hi for iv in intervals)


def atomic_decomposition(inst: MultiIntervalInstance) -> CoverInstance:
    everything = inst.all_intervals()
    ends = sorted({e for iv in everything for e in iv})
    atoms = []
    for lo, hi in zip(ends, ends[1:]):
        if _covered(0.5 * (lo + hi), everything):
            atoms.append(Interval(lo, hi))
    # zero-length pieces survive only as isolated points of the union
    on_atom = {e for a in atoms for e in a}
    points = sorted({iv.lo for iv in everything if iv.lo == iv.hi and iv.lo not in on_atom})
    atoms.extend(Interval(x, x) for x in points)
    atoms.sort()
    mids = [0.5 * (a.lo + a.hi) for a in atoms]
    covers = [frozenset(i for i, m in enumerate(mids) if _covered(m, q)) for q in inst.sets]
    return CoverInstance(atoms, covers)


def greedy_set_cover(ci: CoverInstance) -> CoverSolution:
    """Pick the set covering most uncovered atoms; ties go to the lowest index."""
    n = len(ci.atoms)
    masks = [sum(1 << a for a in c) for c in ci.covers]
    full = (1 << n) - 1
    union = 0
    for m in masks:
        union |= m
    if union != full:
        raise ValueError("infeasible instance")
    uncovered = full
    chosen = []
    while uncovered:
        best, gain = -1, 0
        for i, m in enumerate(masks):
            g = (m & uncovered).bit_count()
            if g > gain:
                best, gain = i, g
        chosen.append(best)
        uncovered &= ~masks[best]
    return CoverSolution(chosen, [True] * n)


def multi_interval_set_cover(inst: MultiIntervalInstance) -> CoverSolution:
    return greedy_set_cover(atomic_decomposition(inst))


def solve_with_instance(inst: MultiIntervalInstance):
    """Like ``multi_interval_set_cover`` but also returns the atom instance."""
    ci = atomic_decomposition(inst)
    return ci, greedy_set_cover(ci)


def setcover_to_multiinterval(universe_size: int, sets: Sequence) -> MultiIntervalInstance:
    """Map element i of {1..n} to the unit interval [i-1, i]."""
    out = []
    for s in sets:
        q = []
        for e in sorted(set(s)):
            if not 1 <= e <= universe_size:
                raise ValueError(f"element {e} outside 1..{universe_size}")
            q.append(Interval(float(e - 1), float(e)))
        out.append(q)
    return MultiIntervalInstance(out)


def ply(inst: MultiIntervalInstance) -> int:
    """Largest number of input intervals sharing a point (closed intervals)."""
    events = []
    for iv in inst.all_intervals():
        events.append((iv.lo, 0))  # opens sort before closes at the same x
        events.append((iv.hi, 1))
    if not events:
        raise ValueError("ply of an empty instance")
    events.sort()
    depth = best = 0
    for _, kind in events:
        depth += 1 if kind == 0 else -1
        best = max(best, depth)
    return best


def covers_union(inst: MultiIntervalInstance, chosen: Sequence[int]) -> bool:
    """True if the chosen sets cover every atom midpoint of the union."""
    ci = atomic_decomposition(inst)
    picked = [iv for i in chosen for iv in inst.sets[i]]
    return all(_covered(0.5 * (a.lo + a.hi), picked) for a in ci.atoms)


def union_measure(intervals) -> float:
    total, cur_lo, cur_hi = 0.0, None, None
    for lo, hi in sorted(intervals):
        if cur_hi is None or lo > cur_hi:
            if cur_hi is not None:
                total += cur_hi - cur_lo
            cur_lo, cur_hi = lo, hi
        else:
            cur_hi = max(cur_hi, hi)
    if cur_hi is not None:
        total += cur_hi - cur_lo
    return total
