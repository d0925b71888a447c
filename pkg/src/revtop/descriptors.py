"""Finitely presented subsets of countable ground sets.

Ground sets: the naturals (with branch sets coded from eventually periodic
binary words), the integers extended by a first element z, and the naturals
extended by a limit point.  Every descriptor normalizes into a closed
normal-form algebra, so boolean combinations stay exactly decidable:
membership, cardinality (finite / cofinite / neither) and equality are all
computed on normal forms, never approximated.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from math import lcm


class UnsupportedDescriptorError(ValueError):
    """Raised at the boundary of the decidable descriptor fragment.

    Signals that an operation does not cover the given descriptor or map,
    not that the underlying statement is false.
    """


class _Star:
    """The added limit point of the convergent-sequence ground set."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "star"


STAR = _Star()


class _ZFirst:
    """The first element adjoined below the integer line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "z"


Z_FIRST = _ZFirst()


# ---------------------------------------------------------------------------
# eventually periodic binary words and branch coding
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Word:
    """An eventually periodic infinite binary word, stored canonically.

    The canonical form has a primitive period and a minimal preperiod, so
    two Words are equal as values iff they denote the same infinite word.
    """

    prefix: str
    period: str

    def __post_init__(self):
        if not self.period or set(self.prefix + self.period) - {"0", "1"}:
            raise UnsupportedDescriptorError(
                f"word needs a nonempty 0/1 period, got {self.prefix!r}+{self.period!r}")
        per = self.period
        for d in range(1, len(per) + 1):
            if len(per) % d == 0 and per[:d] * (len(per) // d) == per:
                per = per[:d]
                break
        pre = self.prefix
        while pre and pre[-1] == per[-1]:
            per = per[-1] + per[:-1]
            pre = pre[:-1]
        object.__setattr__(self, "prefix", pre)
        object.__setattr__(self, "period", per)

    def at(self, i: int) -> str:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.period[(i - len(self.prefix)) % len(self.period)]

    def bits(self, k: int) -> str:
        if k <= len(self.prefix):
            return self.prefix[:k]
        tail = k - len(self.prefix)
        reps = (tail + len(self.period) - 1) // len(self.period)
        return (self.prefix + self.period * reps)[:k]

    def sort_key(self) -> tuple[str, str]:
        return (self.prefix, self.period)

    def to_json(self) -> dict:
        return {"prefix": self.prefix, "period": self.period}

    @staticmethod
    def from_json(data: dict) -> "Word":
        return Word(str(data.get("prefix", "")), str(data["period"]))


def word_lcp(w: Word, v: Word) -> int | None:
    """Length of the longest common prefix; None when the words are equal."""
    if w == v:
        return None
    bound = len(w.prefix) + len(v.prefix) + lcm(len(w.period), len(v.period))
    a, b = w.bits(bound), v.bits(bound)
    for i in range(bound):
        if a[i] != b[i]:
            return i
    return None  # pragma: no cover - equal words are caught above


def code_of_bits(bits: str) -> int:
    """Injective code of a nonempty finite binary word."""
    return (1 << len(bits)) | int(bits, 2)


def word_contains(w: Word, k: int) -> bool:
    if k < 2:
        return False
    length = k.bit_length() - 1
    return bin(k)[3:] == w.bits(length)


def branch_codes(w: Word):
    """The codes of all finite prefixes, in increasing order."""
    length = 1
    while True:
        yield code_of_bits(w.bits(length))
        length += 1


def shared_codes(w: Word, v: Word) -> tuple[int, ...]:
    """Elements common to two distinct branch sets: codes of shared prefixes."""
    depth = word_lcp(w, v)
    if depth is None:
        raise UnsupportedDescriptorError("shared_codes needs distinct words")
    return tuple(code_of_bits(w.bits(i)) for i in range(1, depth + 1))


# ---------------------------------------------------------------------------
# descriptors over the naturals
# ---------------------------------------------------------------------------

class SetDescriptor:
    """Base class for subsets of the naturals."""

    __slots__ = ()


@dataclass(frozen=True)
class FiniteSet(SetDescriptor):
    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))


@dataclass(frozen=True)
class CofiniteSet(SetDescriptor):
    excluded: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "excluded", tuple(sorted(set(self.excluded))))


@dataclass(frozen=True)
class BranchSet(SetDescriptor):
    """{code(w restricted to length l) : l >= 1} for an infinite word w."""

    word: Word


@dataclass(frozen=True)
class UnionSet(SetDescriptor):
    parts: tuple[SetDescriptor, ...]


@dataclass(frozen=True)
class IntersectionSet(SetDescriptor):
    parts: tuple[SetDescriptor, ...]


@dataclass(frozen=True)
class DifferenceSet(SetDescriptor):
    left: SetDescriptor
    right: SetDescriptor


EMPTY_SET = FiniteSet(())
OMEGA_SET = CofiniteSet(())


# ---------------------------------------------------------------------------
# normal forms: finite | cofinite | branches +- finite | complement thereof
# ---------------------------------------------------------------------------

_KIND_ORDER = {"finite": 0, "cofinite": 1, "branches": 2, "co_branches": 3}
_COMPLEMENT_KIND = {"finite": "cofinite", "cofinite": "finite",
                    "branches": "co_branches", "co_branches": "branches"}


@dataclass(frozen=True)
class NormalForm:
    """Canonical form of a describable subset of the naturals.

    finite:       the set is `plus`
    cofinite:     the set is everything except `plus`
    branches:     (union of the branch sets of `words`, plus `plus`,
                   minus `minus`); plus lies outside the branch region and
                   minus inside it
    co_branches:  the complement of the corresponding branches form
    """

    kind: str
    words: tuple[Word, ...]
    plus: frozenset[int]
    minus: frozenset[int]

    def is_finite(self) -> bool:
        return self.kind == "finite"

    def is_cofinite(self) -> bool:
        return self.kind == "cofinite"


def _in_region(words: tuple[Word, ...], k: int) -> bool:
    return any(word_contains(w, k) for w in words)


def nf_member(x: NormalForm, k: int) -> bool:
    if x.kind == "finite":
        return k in x.plus
    if x.kind == "cofinite":
        return k not in x.plus
    inside = k in x.plus or (_in_region(x.words, k) and k not in x.minus)
    return inside if x.kind == "branches" else not inside


def _branchlike(words, candidates, member) -> NormalForm:
    words = tuple(sorted(set(words), key=Word.sort_key))
    if not words:
        return NormalForm("finite", (), frozenset(e for e in candidates if member(e)),
                          frozenset())
    plus, minus = set(), set()
    for e in candidates:
        if member(e):
            if not _in_region(words, e):
                plus.add(e)
        elif _in_region(words, e):
            minus.add(e)
    return NormalForm("branches", words, frozenset(plus), frozenset(minus))


def nf_complement(x: NormalForm) -> NormalForm:
    return NormalForm(_COMPLEMENT_KIND[x.kind], x.words, x.plus, x.minus)


def _cross_candidates(x: NormalForm, y: NormalForm) -> set[int]:
    cands = set(x.plus) | x.minus | y.plus | y.minus
    for w in x.words:
        for v in y.words:
            if w != v:
                cands |= set(shared_codes(w, v))
    return cands


def _diff_branches(x: NormalForm, y: NormalForm) -> NormalForm:
    keep = tuple(w for w in x.words if w not in y.words)
    cands = _cross_candidates(x, y)
    return _branchlike(keep, cands, lambda e: nf_member(x, e) and not nf_member(y, e))


def _intersect_branches(x: NormalForm, y: NormalForm) -> NormalForm:
    keep = tuple(w for w in x.words if w in y.words)
    cands = _cross_candidates(x, y)
    return _branchlike(keep, cands, lambda e: nf_member(x, e) and nf_member(y, e))


def nf_union(x: NormalForm, y: NormalForm) -> NormalForm:
    if _KIND_ORDER[x.kind] > _KIND_ORDER[y.kind]:
        x, y = y, x
    kx, ky = x.kind, y.kind
    if kx == "finite":
        if ky == "finite":
            return NormalForm("finite", (), x.plus | y.plus, frozenset())
        if ky == "cofinite":
            return NormalForm("cofinite", (), y.plus - x.plus, frozenset())
        if ky == "branches":
            cands = set(x.plus) | y.plus | y.minus
            return _branchlike(y.words, cands,
                               lambda e: e in x.plus or nf_member(y, e))
        inner = nf_complement(y)  # branches
        cands = set(x.plus) | inner.plus | inner.minus
        stripped = _branchlike(inner.words, cands,
                               lambda e: nf_member(inner, e) and e not in x.plus)
        return nf_complement(stripped)
    if kx == "cofinite":
        # complement of (excluded \ y), for y of any kind
        keep = frozenset(e for e in x.plus if not nf_member(y, e))
        return NormalForm("cofinite", (), keep, frozenset())
    if kx == "branches":
        if ky == "branches":
            words = tuple(set(x.words) | set(y.words))
            cands = set(x.plus) | x.minus | y.plus | y.minus
            return _branchlike(words, cands,
                               lambda e: nf_member(x, e) or nf_member(y, e))
        inner = nf_complement(y)  # branches
        return nf_complement(_diff_branches(inner, x))
    # co_branches with co_branches
    return nf_complement(_intersect_branches(nf_complement(x), nf_complement(y)))


def nf_intersection(x: NormalForm, y: NormalForm) -> NormalForm:
    return nf_complement(nf_union(nf_complement(x), nf_complement(y)))


def nf_difference(x: NormalForm, y: NormalForm) -> NormalForm:
    return nf_intersection(x, nf_complement(y))


@lru_cache(maxsize=8192)
def nf(d: SetDescriptor) -> NormalForm:
    """Normal form of a descriptor over the naturals."""
    if isinstance(d, FiniteSet):
        return NormalForm("finite", (), frozenset(d.elements), frozenset())
    if isinstance(d, CofiniteSet):
        return NormalForm("cofinite", (), frozenset(d.excluded), frozenset())
    if isinstance(d, BranchSet):
        return NormalForm("branches", (d.word,), frozenset(), frozenset())
    if isinstance(d, UnionSet):
        acc = NormalForm("finite", (), frozenset(), frozenset())
        for part in d.parts:
            acc = nf_union(acc, nf(part))
        return acc
    if isinstance(d, IntersectionSet):
        if not d.parts:
            return NormalForm("cofinite", (), frozenset(), frozenset())
        acc = nf(d.parts[0])
        for part in d.parts[1:]:
            acc = nf_intersection(acc, nf(part))
        return acc
    if isinstance(d, DifferenceSet):
        return nf_difference(nf(d.left), nf(d.right))
    raise UnsupportedDescriptorError(f"not a descriptor over the naturals: {d!r}")


def omega_contains(d: SetDescriptor, k: int) -> bool:
    return nf_member(nf(d), k)


def nf_enumerate(x: NormalForm, count: int) -> tuple[int, ...]:
    """First `count` elements in increasing order (fewer if the set is smaller)."""
    if count <= 0:
        return ()
    if x.kind == "finite":
        return tuple(sorted(x.plus))[:count]
    out: list[int] = []
    if x.kind == "cofinite":
        k = 0
        while len(out) < count:
            if k not in x.plus:
                out.append(k)
            k += 1
        return tuple(out)
    if x.kind == "branches":
        streams = [branch_codes(w) for w in x.words]
        streams.append(iter(sorted(x.plus)))
        last = None
        for e in heapq.merge(*streams):
            if e == last:
                continue
            last = e
            if e in x.minus:
                continue
            out.append(e)
            if len(out) == count:
                break
        return tuple(out)
    k = 0
    while len(out) < count:
        if nf_member(x, k):
            out.append(k)
        k += 1
    return tuple(out)


def descriptor_of_nf(x: NormalForm) -> SetDescriptor:
    """A descriptor denoting exactly the normal form (round-trip inverse of nf)."""
    if x.kind == "finite":
        return FiniteSet(tuple(x.plus))
    if x.kind == "cofinite":
        return CofiniteSet(tuple(x.plus))
    core: SetDescriptor
    branches = tuple(BranchSet(w) for w in x.words)
    if len(branches) == 1 and not x.plus:
        core = branches[0]
    else:
        parts = branches + ((FiniteSet(tuple(x.plus)),) if x.plus else ())
        core = parts[0] if len(parts) == 1 else UnionSet(parts)
    if x.minus:
        core = DifferenceSet(core, FiniteSet(tuple(x.minus)))
    if x.kind == "branches":
        return core
    return DifferenceSet(OMEGA_SET, core)


# ---------------------------------------------------------------------------
# descriptors over the integer line with a first element z
# ---------------------------------------------------------------------------

class ZDescriptor:
    """Base class for subsets of {z} + the integers."""

    __slots__ = ()


@dataclass(frozen=True)
class EmptyZ(ZDescriptor):
    pass


@dataclass(frozen=True)
class AllZ(ZDescriptor):
    pass


@dataclass(frozen=True)
class ClosedLeftZ(ZDescriptor):
    """The half-open initial segment [z, a): z together with all x < a."""

    a: int


@dataclass(frozen=True)
class OpenLeftZ(ZDescriptor):
    """The open initial segment (z, b): all integers x < b, without z."""

    b: int


@dataclass(frozen=True)
class FiniteZ(ZDescriptor):
    has_first: bool
    ints: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ints", tuple(sorted(set(self.ints))))


@dataclass(frozen=True)
class UnionZ(ZDescriptor):
    parts: tuple[ZDescriptor, ...]


@dataclass(frozen=True)
class IntersectionZ(ZDescriptor):
    parts: tuple[ZDescriptor, ...]


@dataclass(frozen=True)
class DifferenceZ(ZDescriptor):
    left: ZDescriptor
    right: ZDescriptor


@dataclass(frozen=True)
class ZNormalForm:
    """Canonical form of a describable subset of {z} + the integers.

    The integer part is a ray or trivial base adjusted by finitely many
    points; rays absorb their boundary so each set has a unique form:
    `left` rays carry no plus points above and end exactly at their top,
    `right` rays mirror that.
    """

    has_first: bool
    base: str  # "empty" | "left" | "right" | "all"
    bound: int | None
    plus: frozenset[int]
    minus: frozenset[int]


def _z_region(base: str, bound: int | None, e: int) -> bool:
    if base == "empty":
        return False
    if base == "all":
        return True
    if base == "left":
        return e < bound
    return e >= bound


def z_nf_member(x: ZNormalForm, p) -> bool:
    if p is Z_FIRST:
        return x.has_first
    if not isinstance(p, int):
        raise UnsupportedDescriptorError(f"not a point of the z-extended line: {p!r}")
    if p in x.plus:
        return True
    return _z_region(x.base, x.bound, p) and p not in x.minus


def _z_make(has_first: bool, base: str, bound: int | None,
            candidates, member) -> ZNormalForm:
    plus, minus = set(), set()
    for e in candidates:
        if member(e):
            if not _z_region(base, bound, e):
                plus.add(e)
        elif _z_region(base, bound, e):
            minus.add(e)
    if base == "left" and plus:
        top = max(plus)
        minus |= set(range(bound, top + 1)) - plus
        bound = top + 1
        plus = set()
    if base == "right" and plus:
        bottom = min(plus)
        minus |= set(range(bottom, bound)) - plus
        bound = bottom
        plus = set()
    if base == "left":
        while bound - 1 in minus:
            minus.discard(bound - 1)
            bound -= 1
    if base == "right":
        while bound in minus:
            minus.discard(bound)
            bound += 1
    return ZNormalForm(has_first, base, bound, frozenset(plus), frozenset(minus))


def z_nf_complement(x: ZNormalForm) -> ZNormalForm:
    flip = {"empty": "all", "all": "empty", "left": "right", "right": "left"}
    cands = x.plus | x.minus
    return _z_make(not x.has_first, flip[x.base], x.bound, cands,
                   lambda e: not z_nf_member(x, e))


def z_nf_union(x: ZNormalForm, y: ZNormalForm) -> ZNormalForm:
    gap: set[int] = set()
    bases = {x.base, y.base}
    if x.base == "empty":
        base, bound = y.base, y.bound
    elif y.base == "empty":
        base, bound = x.base, x.bound
    elif "all" in bases:
        base, bound = "all", None
    elif x.base == y.base == "left":
        base, bound = "left", max(x.bound, y.bound)
    elif x.base == y.base == "right":
        base, bound = "right", min(x.bound, y.bound)
    else:
        left, right = (x, y) if x.base == "left" else (y, x)
        base, bound = "all", None
        if right.bound > left.bound:
            gap = set(range(left.bound, right.bound))
    cands = x.plus | x.minus | y.plus | y.minus | gap
    return _z_make(x.has_first or y.has_first, base, bound, cands,
                   lambda e: z_nf_member(x, e) or z_nf_member(y, e))


def z_nf_intersection(x: ZNormalForm, y: ZNormalForm) -> ZNormalForm:
    return z_nf_complement(z_nf_union(z_nf_complement(x), z_nf_complement(y)))


def z_nf_difference(x: ZNormalForm, y: ZNormalForm) -> ZNormalForm:
    return z_nf_intersection(x, z_nf_complement(y))


@lru_cache(maxsize=8192)
def z_nf(d: ZDescriptor) -> ZNormalForm:
    empty = frozenset()
    if isinstance(d, EmptyZ):
        return ZNormalForm(False, "empty", None, empty, empty)
    if isinstance(d, AllZ):
        return ZNormalForm(True, "all", None, empty, empty)
    if isinstance(d, ClosedLeftZ):
        return ZNormalForm(True, "left", d.a, empty, empty)
    if isinstance(d, OpenLeftZ):
        return ZNormalForm(False, "left", d.b, empty, empty)
    if isinstance(d, FiniteZ):
        return ZNormalForm(d.has_first, "empty", None, frozenset(d.ints), empty)
    if isinstance(d, UnionZ):
        acc = ZNormalForm(False, "empty", None, empty, empty)
        for part in d.parts:
            acc = z_nf_union(acc, z_nf(part))
        return acc
    if isinstance(d, IntersectionZ):
        if not d.parts:
            return ZNormalForm(True, "all", None, empty, empty)
        acc = z_nf(d.parts[0])
        for part in d.parts[1:]:
            acc = z_nf_intersection(acc, z_nf(part))
        return acc
    if isinstance(d, DifferenceZ):
        return z_nf_difference(z_nf(d.left), z_nf(d.right))
    raise UnsupportedDescriptorError(f"not a descriptor over the z-extended line: {d!r}")


def z_contains(d: ZDescriptor, p) -> bool:
    return z_nf_member(z_nf(d), p)


def as_initial_segment(x: ZNormalForm):
    """Classify a z-ground set against the initial-segment open-set shapes.

    Returns ("empty", None), ("all", None), ("closedleft", a) or
    ("openleft", b) when the set is exactly of that shape, else None.
    """
    if x.plus or x.minus:
        return None
    if x.base == "empty":
        return None if x.has_first else ("empty", None)
    if x.base == "all":
        return ("all", None) if x.has_first else None
    if x.base == "left":
        return ("closedleft", x.bound) if x.has_first else ("openleft", x.bound)
    return None


# ---------------------------------------------------------------------------
# subsets of the convergent-sequence ground set (naturals plus a limit point)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OmegaStarSet:
    """A subset of the naturals-with-limit-point ground set."""

    omega: SetDescriptor
    star: bool = False


# ---------------------------------------------------------------------------
# symbolic bijections
# ---------------------------------------------------------------------------

class SymbolicMap:
    """Base class for finitely presented bijections."""

    __slots__ = ()


@dataclass(frozen=True)
class FinSupportPerm(SymbolicMap):
    """A permutation of the naturals moving only finitely many points."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        moved = tuple(sorted((k, v) for k, v in self.pairs if k != v))
        keys = [k for k, _ in moved]
        vals = sorted(v for _, v in moved)
        if len(set(keys)) != len(keys) or vals != keys:
            raise UnsupportedDescriptorError(
                f"not a finite-support permutation: {self.pairs!r}")
        object.__setattr__(self, "pairs", moved)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.pairs)

    def apply(self, p):
        if p is STAR:
            return STAR
        for k, v in self.pairs:
            if k == p:
                return v
        return p

    def inverse(self) -> "FinSupportPerm":
        return FinSupportPerm(tuple((v, k) for k, v in self.pairs))

    @staticmethod
    def from_mapping(mapping: dict) -> "FinSupportPerm":
        return FinSupportPerm(tuple(mapping.items()))

    @staticmethod
    def swap(i: int, j: int) -> "FinSupportPerm":
        return FinSupportPerm(((i, j), (j, i)))

    @staticmethod
    def identity() -> "FinSupportPerm":
        return FinSupportPerm(())


@dataclass(frozen=True)
class ShiftZ(SymbolicMap):
    """Translation by k on the integers, fixing the first element z."""

    k: int

    def apply(self, p):
        if p is Z_FIRST:
            return Z_FIRST
        if not isinstance(p, int):
            raise UnsupportedDescriptorError(f"not a point of the z-extended line: {p!r}")
        return p + self.k

    def inverse(self) -> "ShiftZ":
        return ShiftZ(-self.k)


@dataclass(frozen=True)
class Composition(SymbolicMap):
    """Composite bijection; the first listed map is applied first."""

    maps: tuple[SymbolicMap, ...]

    def apply(self, p):
        for m in self.maps:
            p = m.apply(p)
        return p

    def inverse(self) -> "Composition":
        return Composition(tuple(m.inverse() for m in reversed(self.maps)))


def flatten_fin_support(f: SymbolicMap) -> FinSupportPerm:
    """Collapse a composition of finite-support permutations into one."""
    if isinstance(f, FinSupportPerm):
        return f
    if isinstance(f, Composition):
        parts = [flatten_fin_support(m) for m in f.maps]
        support = sorted({k for part in parts for k in part.support})
        table = {}
        for k in support:
            v = k
            for part in parts:
                v = part.apply(v)
            table[k] = v
        return FinSupportPerm.from_mapping(table)
    raise UnsupportedDescriptorError(
        f"map is not a finite-support permutation of the naturals: {f!r}")


def image_nf_omega(f: FinSupportPerm, x: NormalForm) -> NormalForm:
    """Exact image of a natural-number set under a finite-support permutation."""
    support = f.support
    outside = nf_difference(x, NormalForm("finite", (), frozenset(support), frozenset()))
    mapped = frozenset(f.apply(e) for e in support if nf_member(x, e))
    return nf_union(outside, NormalForm("finite", (), mapped, frozenset()))


def image_z_descriptor(f: ShiftZ, d: ZDescriptor) -> ZDescriptor:
    """Structural image of a z-line descriptor under a shift."""
    if isinstance(d, (EmptyZ, AllZ)):
        return d
    if isinstance(d, ClosedLeftZ):
        return ClosedLeftZ(d.a + f.k)
    if isinstance(d, OpenLeftZ):
        return OpenLeftZ(d.b + f.k)
    if isinstance(d, FiniteZ):
        return FiniteZ(d.has_first, tuple(e + f.k for e in d.ints))
    if isinstance(d, UnionZ):
        return UnionZ(tuple(image_z_descriptor(f, p) for p in d.parts))
    if isinstance(d, IntersectionZ):
        return IntersectionZ(tuple(image_z_descriptor(f, p) for p in d.parts))
    if isinstance(d, DifferenceZ):
        return DifferenceZ(image_z_descriptor(f, d.left), image_z_descriptor(f, d.right))
    raise UnsupportedDescriptorError(f"not a z-line descriptor: {d!r}")


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------

def descriptor_to_json(d) -> dict:
    if isinstance(d, FiniteSet):
        return {"tag": "finite", "elements": list(d.elements)}
    if isinstance(d, CofiniteSet):
        return {"tag": "cofinite", "excluded": list(d.excluded)}
    if isinstance(d, BranchSet):
        return {"tag": "branch", "word": d.word.to_json()}
    if isinstance(d, (UnionSet, UnionZ)):
        return {"tag": "union", "parts": [descriptor_to_json(p) for p in d.parts]}
    if isinstance(d, (IntersectionSet, IntersectionZ)):
        return {"tag": "intersection", "parts": [descriptor_to_json(p) for p in d.parts]}
    if isinstance(d, (DifferenceSet, DifferenceZ)):
        return {"tag": "difference", "left": descriptor_to_json(d.left),
                "right": descriptor_to_json(d.right)}
    if isinstance(d, EmptyZ):
        return {"tag": "empty"}
    if isinstance(d, AllZ):
        return {"tag": "all"}
    if isinstance(d, ClosedLeftZ):
        return {"tag": "closedleft", "a": d.a}
    if isinstance(d, OpenLeftZ):
        return {"tag": "openleft", "b": d.b}
    if isinstance(d, FiniteZ):
        return {"tag": "zfinite", "first": d.has_first, "ints": list(d.ints)}
    if isinstance(d, OmegaStarSet):
        return {"tag": "withstar", "omega": descriptor_to_json(d.omega), "star": d.star}
    raise UnsupportedDescriptorError(f"no JSON form for {d!r}")


def omega_descriptor_from_json(data: dict) -> SetDescriptor:
    tag = data["tag"]
    if tag == "finite":
        return FiniteSet(tuple(data["elements"]))
    if tag == "cofinite":
        return CofiniteSet(tuple(data["excluded"]))
    if tag == "branch":
        return BranchSet(Word.from_json(data["word"]))
    if tag == "union":
        return UnionSet(tuple(omega_descriptor_from_json(p) for p in data["parts"]))
    if tag == "intersection":
        return IntersectionSet(tuple(omega_descriptor_from_json(p) for p in data["parts"]))
    if tag == "difference":
        return DifferenceSet(omega_descriptor_from_json(data["left"]),
                             omega_descriptor_from_json(data["right"]))
    raise UnsupportedDescriptorError(f"unknown natural-ground descriptor tag {tag!r}")


def z_descriptor_from_json(data: dict) -> ZDescriptor:
    tag = data["tag"]
    if tag == "empty":
        return EmptyZ()
    if tag == "all":
        return AllZ()
    if tag == "closedleft":
        return ClosedLeftZ(int(data["a"]))
    if tag == "openleft":
        return OpenLeftZ(int(data["b"]))
    if tag == "zfinite":
        return FiniteZ(bool(data["first"]), tuple(data["ints"]))
    if tag == "union":
        return UnionZ(tuple(z_descriptor_from_json(p) for p in data["parts"]))
    if tag == "intersection":
        return IntersectionZ(tuple(z_descriptor_from_json(p) for p in data["parts"]))
    if tag == "difference":
        return DifferenceZ(z_descriptor_from_json(data["left"]),
                           z_descriptor_from_json(data["right"]))
    raise UnsupportedDescriptorError(f"unknown z-ground descriptor tag {tag!r}")
