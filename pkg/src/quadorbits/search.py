"""Brute-force discovery of finite-orbit tuples over height-bounded grids.

The ground-truth oracle: enumerate coefficient tuples from a grid
{k/d : |k| <= bound}, and for each tuple decide the complete set of
finite-orbit basepoints by the guarded breadth-first closure (any
finite-orbit point must pass the escape and denominator guards for every
map, which confines it to a small explicit grid).

For four or more maps the enumeration goes through the subset property: a
basepoint with finite orbit under S keeps finite orbit under every subset,
so only tuples whose (s-1)-subsets all appear in the smaller search, with
a common basepoint, need a direct check.  This is an exact reduction, not
a heuristic.

Workers share nothing; results are merged and sorted, so the output is
independent of scheduling.
"""

from __future__ import annotations

import itertools
import json
import multiprocessing as mp
from dataclasses import dataclass
from fractions import Fraction

from .dynamics import MapSet, finite_orbit_points, monoid_orbit
from .rationals import rat, rat_str

__all__ = ["SearchSpec", "FoundTuple", "search"]


@dataclass(frozen=True)
class SearchSpec:
    """Grid description: c runs over {k/denominator : |k| <= numerator_bound},
    tuples have set_size maps, and every admissible basepoint is tried."""

    set_size: int
    denominator: int = 16
    numerator_bound: int = 40

    def grid(self) -> list[Fraction]:
        return [Fraction(k, self.denominator)
                for k in range(-self.numerator_bound, self.numerator_bound + 1)]

    @classmethod
    def from_json(cls, text: str) -> "SearchSpec":
        data = json.loads(text)
        return cls(set_size=int(data["set_size"]),
                   denominator=int(data.get("denominator", 16)),
                   numerator_bound=int(data.get("numerator_bound", 40)))

    def to_dict(self) -> dict:
        return {"set_size": self.set_size, "denominator": self.denominator,
                "numerator_bound": self.numerator_bound}


@dataclass(frozen=True)
class FoundTuple:
    cs: tuple[Fraction, ...]
    basepoints: tuple[Fraction, ...]

    def to_dict(self) -> dict:
        return {"c": [rat_str(c) for c in self.cs],
                "basepoints": [rat_str(p) for p in self.basepoints]}


def _scan_chunk(chunk: list[tuple[Fraction, ...]]) -> list[FoundTuple]:
    out = []
    for cs in chunk:
        pts = finite_orbit_points(MapSet(cs))
        if pts:
            out.append(FoundTuple(cs, tuple(r.basepoint for r in pts)))
    return out


def _direct_search(spec: SearchSpec, workers: int) -> list[FoundTuple]:
    combos = list(itertools.combinations(spec.grid(), spec.set_size))
    if workers <= 1:
        found = _scan_chunk(combos)
    else:
        chunk_size = max(1, len(combos) // (workers * 16))
        chunks = [combos[i:i + chunk_size]
                  for i in range(0, len(combos), chunk_size)]
        ctx = mp.get_context("fork")
        with ctx.Pool(workers) as pool:
            found = [t for part in pool.imap_unordered(_scan_chunk, chunks)
                     for t in part]
    return sorted(found, key=lambda t: t.cs)


def search(spec: SearchSpec, workers: int = 1) -> list[FoundTuple]:
    """Every tuple from the grid admitting a finite-orbit rational point,
    with its complete basepoint list; exhaustive within the grid."""
    if spec.set_size < 1:
        raise ValueError("set_size must be at least 1")
    if spec.set_size <= 3:
        return _direct_search(spec, workers)
    # subset reduction for larger sets: any candidate S is the union of two
    # of its (s-1)-subsets, both of which must already be hits, so the
    # candidates come from pairwise unions of the smaller results
    smaller = search(SearchSpec(spec.set_size - 1, spec.denominator,
                                spec.numerator_bound), workers)
    by_set = {frozenset(t.cs): set(t.basepoints) for t in smaller}
    candidates: set[tuple[Fraction, ...]] = set()
    for k1, k2 in itertools.combinations(by_set, 2):
        union = k1 | k2
        if len(union) == spec.set_size:
            candidates.add(tuple(sorted(union)))
    out: list[FoundTuple] = []
    for combo in sorted(candidates):
        subs = list(itertools.combinations(combo, spec.set_size - 1))
        if not all(frozenset(s) in by_set for s in subs):
            continue
        common = set.intersection(*(by_set[frozenset(s)] for s in subs))
        good = tuple(sorted(p for p in common
                            if monoid_orbit(MapSet(combo), p).is_finite()))
        if good:
            out.append(FoundTuple(combo, good))
    return sorted(out, key=lambda t: t.cs)
