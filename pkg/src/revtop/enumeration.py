"""Exhaustive enumeration of all topologies on n points, two independent ways.

The direct enumerator saturates the lattice of topologies from below by
adding one generator set at a time and closing; the oracle enumerator walks
all preorders and transports them through the specialization bijection.
Both must produce identical catalogs (1, 1, 4, 29, 355, 6942 for n = 0..5).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .topology import (
    FiniteTopology,
    TopologyError,
    check_ground,
    full_mask,
    mask_tables,
)


@dataclass(frozen=True)
class Preorder:
    """A reflexive transitive relation, stored as up-set rows.

    up[i] is the bit set {j : i <= j}.  The specialization direction is
    fixed project-wide: x <= y iff every open set containing x contains y.
    """

    n: int
    up: tuple[int, ...]

    def __post_init__(self):
        if len(self.up) != self.n:
            raise TopologyError("row count must equal ground size")
        full = full_mask(self.n)
        for i, row in enumerate(self.up):
            if not 0 <= row <= full:
                raise TopologyError(f"row {i} out of range")
            if not row >> i & 1:
                raise TopologyError(f"relation not reflexive at {i}")
        for i in range(self.n):
            row = self.up[i]
            for j in range(self.n):
                if row >> j & 1 and self.up[j] | row != row:
                    raise TopologyError(f"relation not transitive via {i} <= {j}")

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)


def enumerate_preorders(n: int) -> tuple[Preorder, ...]:
    """All preorders on n points, sorted by their up-set rows."""
    check_ground(n)
    if n == 0:
        return (Preorder(0, ()),)
    size = 1 << n
    candidates = [[m for m in range(size) if m >> i & 1] for i in range(n)]
    rows = [0] * n
    out: list[tuple[int, ...]] = []

    def extend(i: int):
        if i == n:
            out.append(tuple(rows))
            return
        for m in candidates[i]:
            ok = True
            for j in range(i):
                rj = rows[j]
                if m >> j & 1 and rj | m != m:      # i <= j forces up[j] subset of up[i]
                    ok = False
                    break
                if rj >> i & 1 and m | rj != rj:    # j <= i forces up[i] subset of up[j]
                    ok = False
                    break
            if ok:
                rows[i] = m
                extend(i + 1)
        rows[i] = 0

    extend(0)
    out.sort()
    return tuple(Preorder(n, rows) for rows in out)


def topology_of_preorder(p: Preorder) -> FiniteTopology:
    """The up-set (Alexandrov) topology: opens are the up-closed point sets."""
    full = full_mask(p.n)
    opens = []
    for m in range(full + 1):
        rest = m
        ok = True
        while rest:
            i = (rest & -rest).bit_length() - 1
            if p.up[i] | m != m:
                ok = False
                break
            rest &= rest - 1
        if ok:
            opens.append(m)
    return FiniteTopology(p.n, tuple(opens))


def preorder_of_topology(t: FiniteTopology) -> Preorder:
    """Specialization preorder: row i is the least open set containing i."""
    rows = []
    full = t.full
    for i in range(t.n):
        acc = full
        bit = 1 << i
        for o in t.opens:
            if o & bit:
                acc &= o
        rows.append(acc)
    return Preorder(t.n, tuple(rows))


def _enumerate_by_closure(n: int) -> list[tuple[int, ...]]:
    """Direct enumerator: saturate from the antidiscrete topology by adding
    one generator set at a time and closing under intersections and unions."""
    full = full_mask(n)
    if full == 0:
        return [(0,)]
    start = (0, full)
    seen = {start}
    frontier = [start]
    while frontier:
        next_frontier = []
        for opens in frontier:
            base = set(opens)
            for s in range(1, full):
                if s in base:
                    continue
                fam = set(base)
                fam.add(s)
                stack = [s]
                while stack:
                    x = stack.pop()
                    for y in list(fam):
                        for z in (x | y, x & y):
                            if z not in fam:
                                fam.add(z)
                                stack.append(z)
                key = tuple(sorted(fam))
                if key not in seen:
                    seen.add(key)
                    next_frontier.append(key)
        frontier = next_frontier
    return sorted(seen)


def enumerate_topologies_via_preorders(n: int) -> tuple[FiniteTopology, ...]:
    """Oracle route: every preorder transported through the bijection, sorted."""
    tops = sorted(topology_of_preorder(p) for p in enumerate_preorders(n))
    return tuple(tops)


@dataclass(frozen=True)
class TopologyCatalog:
    """All topologies on n points plus their homeomorphism-orbit partition."""

    n: int
    topologies: tuple[FiniteTopology, ...]
    orbit_reps: tuple[FiniteTopology, ...]
    orbits: dict[FiniteTopology, tuple[FiniteTopology, ...]] = field(repr=False)
    orbit_of: dict[FiniteTopology, FiniteTopology] = field(repr=False)

    def __len__(self) -> int:
        return len(self.topologies)

    @property
    def orbit_count(self) -> int:
        return len(self.orbit_reps)

    def orbit_sizes(self) -> tuple[int, ...]:
        return tuple(len(self.orbits[r]) for r in self.orbit_reps)


def enumerate_topologies(n: int) -> TopologyCatalog:
    """Catalog of all topologies on n points via the direct enumerator."""
    check_ground(n)
    all_opens = _enumerate_by_closure(n)
    topologies = tuple(FiniteTopology(n, o) for o in all_opens)
    tables = mask_tables(n)
    orbits: dict[FiniteTopology, tuple[FiniteTopology, ...]] = {}
    orbit_of: dict[FiniteTopology, FiniteTopology] = {}
    for t in topologies:
        if t in orbit_of:
            continue
        images = {tuple(sorted(tab[o] for o in t.opens)) for tab in tables}
        members = tuple(FiniteTopology(n, o) for o in sorted(images))
        rep = members[0]
        orbits[rep] = members
        for m in members:
            orbit_of[m] = rep
    reps = tuple(sorted(orbits))
    return TopologyCatalog(n, topologies, reps, orbits, orbit_of)


@lru_cache(maxsize=None)
def catalog(n: int) -> TopologyCatalog:
    """Cached catalog shared by all verification suites."""
    return enumerate_topologies(n)
