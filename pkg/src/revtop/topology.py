"""Finite topologies on {0, ..., n-1} stored as sorted tuples of bit sets.

A subset of the ground set is an int whose bit i records membership of
point i; a topology is the strictly sorted tuple of its open sets.  All
values are immutable and hashable, so structural equality of values
coincides with equality of the topologies they denote.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _all_perms

DEFAULT_POINT_CAP = 5
HARD_POINT_CAP = 10  # bit arithmetic stays exact; enumeration beyond this is hopeless anyway


class TopologyError(ValueError):
    """Invalid finite-topology input."""


class MissingEmptyError(TopologyError):
    pass


class MissingFullError(TopologyError):
    pass


class NotClosedUnderUnionError(TopologyError):
    def __init__(self, a: int, b: int):
        super().__init__(f"family lacks the union of {a:#b} and {b:#b}")
        self.witness = (a, b)


class NotClosedUnderIntersectionError(TopologyError):
    def __init__(self, a: int, b: int):
        super().__init__(f"family lacks the intersection of {a:#b} and {b:#b}")
        self.witness = (a, b)


class DimensionMismatchError(TopologyError):
    pass


class CapExceededError(TopologyError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"ground size {n} exceeds the configured cap {cap} "
                         f"(set REVTOP_MAX_N to raise it, hard ceiling {HARD_POINT_CAP})")
        self.n = n
        self.cap = cap


def point_cap() -> int:
    """Configured ground-set cap; REVTOP_MAX_N overrides the default of 5."""
    raw = os.environ.get("REVTOP_MAX_N", "").strip()
    if raw:
        try:
            cap = int(raw)
        except ValueError as exc:
            raise TopologyError(f"REVTOP_MAX_N must be an integer, got {raw!r}") from exc
        return max(0, min(cap, HARD_POINT_CAP))
    return DEFAULT_POINT_CAP


def check_ground(n: int) -> None:
    if n < 0:
        raise TopologyError(f"ground size must be non-negative, got {n}")
    cap = point_cap()
    if n > cap:
        raise CapExceededError(n, cap)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(points) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def points_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True, order=True)
class FiniteTopology:
    """A topology as the strictly sorted tuple of its open sets (bit masks).

    The constructor checks only the cheap structural invariants (sorted,
    contains empty and full set, masks in range); closure under union and
    intersection is guaranteed by the factory functions and checkable via
    :func:`validate_topology`.
    """

    n: int
    opens: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise TopologyError("negative ground size")
        full = full_mask(self.n)
        ops = self.opens
        if not ops or ops[0] != 0:
            raise MissingEmptyError("open family must start with the empty set")
        if ops[-1] != full:
            raise MissingFullError("open family must end with the full set")
        prev = -1
        for o in ops:
            if not 0 <= o <= full:
                raise TopologyError(f"open {o:#b} out of range for n={self.n}")
            if o <= prev:
                raise TopologyError("opens must be strictly sorted")
            prev = o

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def is_open(self, mask: int) -> bool:
        return mask in self._open_set()

    def is_closed(self, mask: int) -> bool:
        return (self.full ^ mask) in self._open_set()

    def closed_sets(self) -> tuple[int, ...]:
        full = self.full
        return tuple(sorted(full ^ o for o in self.opens))

    def _open_set(self) -> frozenset[int]:
        return frozenset(self.opens)

    def to_json(self) -> dict:
        return {"n": self.n, "opens": list(self.opens)}

    @staticmethod
    def from_json(data: dict) -> "FiniteTopology":
        return validate_topology(int(data["n"]), [int(o) for o in data["opens"]])


def validate_topology(n: int, family) -> FiniteTopology:
    """Check that a family of point sets is a topology and canonicalize it.

    Raises MissingEmptyError / MissingFullError / NotClosedUnderUnionError /
    NotClosedUnderIntersectionError with a witness pair on failure.
    """
    check_ground(n)
    full = full_mask(n)
    opens = sorted(set(family))
    for m in opens:
        if not 0 <= m <= full:
            raise TopologyError(f"point set {m} out of range for n={n}")
    present = set(opens)
    if 0 not in present:
        raise MissingEmptyError(f"family on {n} points lacks the empty set")
    if full not in present:
        raise MissingFullError(f"family on {n} points lacks the full set")
    for i, a in enumerate(opens):
        for b in opens[i + 1:]:
            if a | b not in present:
                raise NotClosedUnderUnionError(a, b)
            if a & b not in present:
                raise NotClosedUnderIntersectionError(a, b)
    return FiniteTopology(n, tuple(opens))


def generate_topology(n: int, subbase) -> FiniteTopology:
    """Smallest topology containing the given point sets.

    Closes under finite intersections first (the full set is the empty
    intersection), then under unions, then adds the empty set.
    """
    check_ground(n)
    full = full_mask(n)
    for m in subbase:
        if not 0 <= m <= full:
            raise TopologyError(f"point set {m} out of range for n={n}")
    inter = {full}
    for s in subbase:
        inter |= {s & t for t in inter}
    opens = set(inter)
    opens.add(0)
    frontier = list(opens)
    while frontier:
        x = frontier.pop()
        for y in list(opens):
            u = x | y
            if u not in opens:
                opens.add(u)
                frontier.append(u)
    return FiniteTopology(n, tuple(sorted(opens)))


def antidiscrete_topology(n: int) -> FiniteTopology:
    full = full_mask(n)
    return FiniteTopology(n, (0,) if full == 0 else (0, full))


def discrete_topology(n: int) -> FiniteTopology:
    return FiniteTopology(n, tuple(range(1 << n)))


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0, ..., n-1} given by its image tuple."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise TopologyError(f"not a permutation: {self.image}")

    @property
    def n(self) -> int:
        return len(self.image)

    def apply(self, i: int) -> int:
        return self.image[i]

    def apply_mask(self, mask: int) -> int:
        out = 0
        for i, j in enumerate(self.image):
            if mask >> i & 1:
                out |= 1 << j
        return out

    def preimage_mask(self, mask: int) -> int:
        out = 0
        for i, j in enumerate(self.image):
            if mask >> j & 1:
                out |= 1 << i
        return out

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(i) = self(other(i))."""
        if self.n != other.n:
            raise DimensionMismatchError("composing permutations of different sizes")
        return Permutation(tuple(self.image[other.image[i]] for i in range(self.n)))

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(n)))

    @staticmethod
    def transposition(n: int, i: int, j: int) -> "Permutation":
        img = list(range(n))
        img[i], img[j] = img[j], img[i]
        return Permutation(tuple(img))


def all_permutations(n: int):
    """All n! permutations, in itertools order (deterministic)."""
    for img in _all_perms(range(n)):
        yield Permutation(img)


@lru_cache(maxsize=None)
def mask_tables(n: int) -> tuple[tuple[int, ...], ...]:
    """For each permutation of n points, the full mask-image lookup table.

    tables[k][m] is the image of the point set m under the k-th permutation
    in itertools order.  Tiny for n <= 5 and shared by all hot loops.
    """
    tables = []
    size = 1 << n
    for img in _all_perms(range(n)):
        bit = [1 << img[i] for i in range(n)]
        tab = [0] * size
        for m in range(1, size):
            low = (m & -m).bit_length() - 1
            tab[m] = tab[m & (m - 1)] | bit[low]
        tables.append(tuple(tab))
    return tuple(tables)


def image_topology(f: Permutation, t: FiniteTopology) -> FiniteTopology:
    """The topology {f[O] : O open in t}; always a valid topology."""
    if f.n != t.n:
        raise DimensionMismatchError(f"permutation on {f.n} points vs topology on {t.n}")
    return FiniteTopology(t.n, tuple(sorted(f.apply_mask(o) for o in t.opens)))


def is_continuous(f: Permutation, dom: FiniteTopology, cod: FiniteTopology) -> bool:
    """True iff the preimage of every open of cod is open in dom."""
    if f.n != dom.n or dom.n != cod.n:
        raise DimensionMismatchError("mismatched ground sizes")
    dom_set = dom._open_set()
    return all(f.preimage_mask(o) in dom_set for o in cod.opens)


def is_condensation(f: Permutation, t1: FiniteTopology, t2: FiniteTopology) -> bool:
    """True iff f is a continuous bijection from (X, t1) to (X, t2)."""
    return is_continuous(f, t1, t2)


def is_homeomorphism(f: Permutation, t1: FiniteTopology, t2: FiniteTopology) -> bool:
    return is_condensation(f, t1, t2) and image_topology(f, t1) == t2


def interior(mask: int, t: FiniteTopology) -> int:
    """Largest open subset of the given point set."""
    acc = 0
    for o in t.opens:
        if o & mask == o:
            acc |= o
    return acc


def closure(mask: int, t: FiniteTopology) -> int:
    """Smallest closed superset of the given point set."""
    full = t.full
    return full ^ interior(full ^ mask, t)


def canonical_form(t: FiniteTopology) -> FiniteTopology:
    """Lexicographically least permutation image; constant on homeomorphism classes."""
    best = None
    for tab in mask_tables(t.n):
        cand = tuple(sorted(tab[o] for o in t.opens))
        if best is None or cand < best:
            best = cand
    return FiniteTopology(t.n, best)
