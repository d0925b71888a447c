"""Finitely presented countable topologies with machine-checkable witnesses.

The model spaces: the discrete, antidiscrete and cofinite topologies on the
naturals; the initial-segment topology on the integer line with an added
first element (parametrized by the cutoff for segments missing the first
element); the convergent-sequence space on the naturals plus a limit point;
and its refinement by the complements of an almost-disjoint branch family.
Every operation either returns an exact answer over the descriptor algebra
or raises UnsupportedDescriptorError at the fragment boundary.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .descriptors import (
    STAR,
    BranchSet,
    CofiniteSet,
    Composition,
    FiniteSet,
    FinSupportPerm,
    NormalForm,
    OMEGA_SET,
    OmegaStarSet,
    OpenLeftZ,
    ClosedLeftZ,
    SetDescriptor,
    ShiftZ,
    SymbolicMap,
    UnsupportedDescriptorError,
    Word,
    ZDescriptor,
    as_initial_segment,
    descriptor_of_nf,
    flatten_fin_support,
    image_nf_omega,
    image_z_descriptor,
    nf,
    nf_complement,
    nf_difference,
    nf_enumerate,
    nf_intersection,
    nf_member,
    word_lcp,
    z_nf,
)


class NoBetaAvailableError(ValueError):
    """Every family member was blocked; a finite family cannot be maximal."""


# ---------------------------------------------------------------------------
# the symbolic topologies
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiscreteOmega:
    """Every subset of the naturals is open."""


@dataclass(frozen=True)
class AntidiscreteOmega:
    """Only the empty set and the whole ground set are open."""


@dataclass(frozen=True)
class CoSmall:
    """Opens are the empty set and all cofinite sets (the countable instance
    of the complements-of-small-sets family, small meaning finite)."""

    small_bound: str = "omega"


@dataclass(frozen=True)
class OrderedZ:
    """The initial-segment topology on {z} + the integers.

    Opens: the empty set, the whole line, every segment [z, a), and the
    segments (z, b) for b up to the cutoff c.
    """

    c: int = 0


@dataclass(frozen=True)
class ConvSeq:
    """The convergent-sequence space: naturals plus a limit point.

    Every subset of the naturals is open; a set containing the limit point
    is open iff its natural part is cofinite.
    """


@dataclass(frozen=True)
class ADFamily:
    """A finite almost-disjoint family of branch sets.

    Two distinct branch sets meet in exactly the codes of the shared
    prefixes of their words, so all pairwise intersections are finite.
    Maximality is not claimed and is unattainable for finite families.
    """

    members: tuple[BranchSet, ...]

    def __post_init__(self):
        words = [m.word for m in self.members]
        if len(set(words)) != len(words):
            raise UnsupportedDescriptorError("family words must be pairwise distinct")

    def __len__(self):
        return len(self.members)

    @property
    def words(self) -> tuple[Word, ...]:
        return tuple(m.word for m in self.members)

    def intersection_size(self, i: int, j: int) -> int:
        depth = word_lcp(self.members[i].word, self.members[j].word)
        assert depth is not None
        return depth


def ad_family(k: int) -> ADFamily:
    """k pairwise almost-disjoint branch sets from the words (0^i 1) repeated."""
    if k < 1:
        raise ValueError("family size must be at least 1")
    return ADFamily(tuple(BranchSet(Word("", "0" * i + "1")) for i in range(k)))


@dataclass(frozen=True)
class Refined:
    """The convergent-sequence space refined by removing an almost-disjoint
    family from the neighborhoods of the limit point.

    Basis: O minus a finite union of family members, O open in the base
    space.  Every base open stays open; each family member becomes closed.
    """

    family: ADFamily
    base: ConvSeq = field(default_factory=ConvSeq)

    @property
    def removed(self) -> tuple[BranchSet, ...]:
        return self.family.members


SymbolicTopology = (DiscreteOmega, AntidiscreteOmega, CoSmall, OrderedZ, ConvSeq, Refined)

_OMEGA_GROUND = (DiscreteOmega, AntidiscreteOmega, CoSmall)


def _omega_star_part(d) -> OmegaStarSet:
    if isinstance(d, OmegaStarSet):
        return d
    if isinstance(d, SetDescriptor):
        return OmegaStarSet(d, star=False)
    raise UnsupportedDescriptorError(
        f"expected a subset of the naturals-with-limit-point ground, got {d!r}")


def member_open(d, topology) -> bool:
    """Decide whether the descriptor denotes an open set of the topology."""
    if isinstance(topology, _OMEGA_GROUND):
        if not isinstance(d, SetDescriptor):
            raise UnsupportedDescriptorError(
                f"expected a subset of the naturals, got {d!r}")
        x = nf(d)
        if isinstance(topology, DiscreteOmega):
            return True
        if isinstance(topology, AntidiscreteOmega):
            return (x.is_finite() and not x.plus) or (x.is_cofinite() and not x.plus)
        return (x.is_finite() and not x.plus) or x.is_cofinite()
    if isinstance(topology, OrderedZ):
        if not isinstance(d, ZDescriptor):
            raise UnsupportedDescriptorError(
                f"expected a subset of the z-extended line, got {d!r}")
        shape = as_initial_segment(z_nf(d))
        if shape is None:
            return False
        kind, bound = shape
        if kind == "openleft":
            return bound <= topology.c
        return True
    if isinstance(topology, ConvSeq):
        part = _omega_star_part(d)
        return (not part.star) or nf(part.omega).is_cofinite()
    if isinstance(topology, Refined):
        part = _omega_star_part(d)
        if not part.star:
            return True
        missing = nf_complement(nf(part.omega))
        if missing.is_finite():
            return True
        if missing.kind == "branches":
            return set(missing.words) <= set(topology.family.words)
        return False
    raise UnsupportedDescriptorError(f"not a symbolic topology: {topology!r}")


# ---------------------------------------------------------------------------
# images of descriptors and topologies under symbolic bijections
# ---------------------------------------------------------------------------

def image_descriptor(f: SymbolicMap, d):
    """Exact descriptor of the pointwise image f[d]."""
    if isinstance(d, OmegaStarSet):
        return OmegaStarSet(image_descriptor(f, d.omega), d.star)
    if isinstance(d, SetDescriptor):
        perm = flatten_fin_support(f)
        if isinstance(d, FiniteSet):
            return FiniteSet(tuple(perm.apply(e) for e in d.elements))
        if isinstance(d, CofiniteSet):
            return CofiniteSet(tuple(perm.apply(e) for e in d.excluded))
        return descriptor_of_nf(image_nf_omega(perm, nf(d)))
    if isinstance(d, ZDescriptor):
        if isinstance(f, ShiftZ):
            return image_z_descriptor(f, d)
        if isinstance(f, Composition):
            for m in f.maps:
                d = image_descriptor(m, d)
            return d
        raise UnsupportedDescriptorError(
            f"map {f!r} does not act on the z-extended line")
    raise UnsupportedDescriptorError(f"no image rule for {d!r}")


@dataclass(frozen=True)
class SymbolicImage:
    """Image topology under a symbolic bijection, with its proof obligations.

    Each obligation is a (descriptor, expected image descriptor) pair;
    verify() recomputes every image and checks openness transport.
    """

    map: SymbolicMap
    source: object
    topology: object
    obligations: tuple[tuple[object, object], ...]

    def verify(self) -> bool:
        for before, after in self.obligations:
            if image_descriptor(self.map, before) != after:
                return False
            if member_open(before, self.source) != member_open(after, self.topology):
                return False
        return True


def _total_shift(f: SymbolicMap) -> int:
    if isinstance(f, ShiftZ):
        return f.k
    if isinstance(f, Composition):
        return sum(_total_shift(m) for m in f.maps)
    raise UnsupportedDescriptorError(f"map {f!r} does not act on the z-extended line")


def image_topology_symbolic(f: SymbolicMap, topology) -> SymbolicImage:
    """The image topology {f[O] : O open}, computed on the descriptor schema."""
    if isinstance(topology, OrderedZ):
        k = _total_shift(f)
        image = OrderedZ(topology.c + k)
        obligations = tuple(
            [(ClosedLeftZ(a), ClosedLeftZ(a + k))
             for a in range(topology.c - 2, topology.c + 3)]
            + [(OpenLeftZ(b), OpenLeftZ(b + k))
               for b in range(topology.c - 2, topology.c + 1)])
        return SymbolicImage(f, topology, image, obligations)
    if isinstance(topology, _OMEGA_GROUND):
        perm = flatten_fin_support(f)
        support = perm.support
        samples = [CofiniteSet(()), CofiniteSet(support),
                   CofiniteSet(support[: len(support) // 2]),
                   FiniteSet(support), FiniteSet(())]
        obligations = tuple((d, image_descriptor(perm, d)) for d in samples)
        return SymbolicImage(perm, topology, topology, obligations)
    if isinstance(topology, ConvSeq):
        perm = flatten_fin_support(f)
        samples = [OmegaStarSet(CofiniteSet(perm.support), star=True),
                   OmegaStarSet(FiniteSet(perm.support), star=False)]
        obligations = tuple((d, image_descriptor(perm, d)) for d in samples)
        return SymbolicImage(perm, topology, topology, obligations)
    raise UnsupportedDescriptorError(
        f"no image-topology rule for {f!r} on {topology!r}")


# ---------------------------------------------------------------------------
# non-reversibility of the initial-segment topologies
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NonreversibilityWitness:
    """A self-homeomorphic copy strictly above the topology.

    The unit shift carries the topology onto the same schema with cutoff
    raised by one; the separating segment is open in the image, not in the
    source, so the image is a strictly finer homeomorphic copy.
    """

    source: OrderedZ
    map: ShiftZ
    image: OrderedZ
    separator: OpenLeftZ

    def verify(self) -> bool:
        schema = image_topology_symbolic(self.map, self.source)
        if schema.topology != self.image or not schema.verify():
            return False
        if self.image.c != self.source.c + self.map.k:
            return False
        if self.source.c > self.image.c:  # every source open must stay open
            return False
        if not member_open(self.separator, self.image):
            return False
        if member_open(self.separator, self.source):
            return False
        return True

    def to_json(self) -> dict:
        return {
            "map": {"tag": "shiftz", "k": self.map.k},
            "image_c": self.image.c,
            "separator": {"tag": "openleft", "b": self.separator.b},
            "verified": self.verify(),
        }


def nonreversibility_witness(topology: OrderedZ) -> NonreversibilityWitness:
    """The unit-shift witness that the initial-segment topology is not reversible."""
    shift = ShiftZ(1)
    image = OrderedZ(topology.c + 1)
    return NonreversibilityWitness(topology, shift, image, OpenLeftZ(topology.c + 1))


def increasing_chain(topology: OrderedZ, length: int) -> tuple[NonreversibilityWitness, ...]:
    """Iterated witnesses: a strictly increasing chain of homeomorphic copies."""
    out = []
    current = topology
    for _ in range(length):
        w = nonreversibility_witness(current)
        out.append(w)
        current = w.image
    return tuple(out)


# ---------------------------------------------------------------------------
# strong reversibility of the cofinite topology
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PreservationCertificate:
    """Exact evidence that a bijection maps the open family onto itself.

    A finite-support permutation sends every cofinite set to the cofinite
    set excluding the image points, with the excluded count preserved; the
    checks record that transport on probe descriptors.
    """

    map: FinSupportPerm
    topology: CoSmall
    ok: bool
    checks: tuple[tuple[SetDescriptor, SetDescriptor], ...]

    def verify(self) -> bool:
        if not self.ok:
            return False
        for before, after in self.checks:
            image = image_descriptor(self.map, before)
            if image != after:
                return False
            if not isinstance(after, CofiniteSet) or not isinstance(before, CofiniteSet):
                return False
            if len(after.excluded) != len(before.excluded):
                return False
            if not member_open(after, self.topology):
                return False
        return True


def preserves_topology(f: SymbolicMap, topology: CoSmall) -> PreservationCertificate:
    """Certificate that a finite-support permutation fixes the cofinite topology."""
    if not isinstance(topology, CoSmall):
        raise UnsupportedDescriptorError(f"expected the cofinite topology, got {topology!r}")
    perm = flatten_fin_support(f)
    support = perm.support
    probes = [CofiniteSet(()), CofiniteSet(support),
              CofiniteSet(support[:max(1, len(support) // 2)]),
              CofiniteSet(tuple(e + 1 for e in support) or (0,))]
    checks = []
    ok = True
    for probe in probes:
        image = image_descriptor(perm, probe)
        if not isinstance(image, CofiniteSet) or len(image.excluded) != len(probe.excluded):
            ok = False
        checks.append((probe, image))
    return PreservationCertificate(perm, topology, ok, tuple(checks))


# ---------------------------------------------------------------------------
# the refined convergent-sequence space
# ---------------------------------------------------------------------------

def construct_o_star(family: ADFamily) -> Refined:
    """Refine the convergent-sequence space by the family complements."""
    if len(family) < 1:
        raise ValueError("family must be nonempty")
    return Refined(family)


def f_m_closed_check(m_descriptor: SetDescriptor, topology: ConvSeq | None = None) -> bool:
    """Is the tail set along an infinite index set, together with the limit
    point, closed?  In the convergent-sequence space the complement is a
    plain set of naturals, hence open; the check computes exactly that."""
    topology = topology if topology is not None else ConvSeq()
    x = nf(m_descriptor)
    if x.is_finite():
        raise ValueError("index set must be infinite")
    complement = OmegaStarSet(descriptor_of_nf(nf_complement(x)), star=False)
    return member_open(complement, topology)


@dataclass(frozen=True)
class ClosureWitness:
    """A point of the probed set inside one basic neighborhood of the limit.

    The witness element lies in the family member indexed by beta, escapes
    every blocked member, and survives the cofinite restriction, so the
    neighborhood meets the set of all naturals.
    """

    family: ADFamily
    blocked: tuple[int, ...]
    neighborhood: OmegaStarSet
    beta: int
    element: int

    def verify(self) -> bool:
        if self.beta in self.blocked:
            return False
        if not nf_member(nf(self.family.members[self.beta]), self.element):
            return False
        for idx in self.blocked:
            if nf_member(nf(self.family.members[idx]), self.element):
                return False
        return nf_member(nf(self.neighborhood.omega), self.element)


def star_in_closure_check(family: ADFamily, blocked, neighborhood: OmegaStarSet) -> ClosureWitness:
    """Witness that a basic refined neighborhood of the limit point meets the
    naturals: pick an unblocked member and walk it past the blocked ones."""
    blocked = tuple(sorted(set(blocked)))
    for idx in blocked:
        if not 0 <= idx < len(family):
            raise ValueError(f"blocked index {idx} out of range")
    if not neighborhood.star or not nf(neighborhood.omega).is_cofinite():
        raise UnsupportedDescriptorError(
            "neighborhood must be a cofinite set together with the limit point")
    free = [i for i in range(len(family)) if i not in blocked]
    if not free:
        raise NoBetaAvailableError(
            "all family members blocked; finite families are never maximal")
    beta = free[0]
    survivors = nf(family.members[beta])
    for idx in blocked:
        survivors = nf_difference(survivors, nf(family.members[idx]))
    survivors = nf_intersection(survivors, nf(neighborhood.omega))
    element = nf_enumerate(survivors, 1)
    assert element, "almost-disjointness guarantees an infinite survivor set"
    return ClosureWitness(family, blocked, neighborhood, beta, element[0])


@dataclass(frozen=True)
class BlockingCertificate:
    """A family member meeting the candidate set infinitely often.

    The complement of that member is then a refined neighborhood of the
    limit point which the candidate enters infinitely often, so no sequence
    running inside the candidate converges to the limit point.
    """

    candidate: SetDescriptor
    index: int
    word: Word
    intersection_prefix: tuple[int, ...]

    def verify(self) -> bool:
        x = nf(self.candidate)
        member = nf(BranchSet(self.word))
        if nf_intersection(x, member).is_finite():
            return False
        return all(nf_member(x, e) and nf_member(member, e)
                   for e in self.intersection_prefix)


def blocking_nbhd(candidate: SetDescriptor, family: ADFamily) -> BlockingCertificate | None:
    """Find a family member with provably infinite overlap with the candidate.

    None means no member blocks it (the finite-family analogue of
    non-maximality: the candidate is almost disjoint from every member).
    """
    x = nf(candidate)
    if x.is_finite():
        raise ValueError("candidate must denote an infinite set")
    for idx, member in enumerate(family.members):
        overlap = nf_intersection(x, nf(member))
        if not overlap.is_finite():
            return BlockingCertificate(candidate, idx, member.word,
                                       nf_enumerate(overlap, 5))
    return None


# ---------------------------------------------------------------------------
# sequences and convergence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConstantTail:
    value: object  # a natural number or the limit point


@dataclass(frozen=True)
class EnumerationTail:
    """The tail enumerates an infinite descriptor in increasing order."""

    descriptor: SetDescriptor


@dataclass(frozen=True)
class EventualSequence:
    """A sequence given by an explicit prefix and an eventually-described tail."""

    prefix: tuple
    tail: ConstantTail | EnumerationTail

    def value_at(self, i: int):
        if i < len(self.prefix):
            return self.prefix[i]
        if isinstance(self.tail, ConstantTail):
            return self.tail.value
        k = i - len(self.prefix)
        return nf_enumerate(nf(self.tail.descriptor), k + 1)[k]


def _tail_nf(seq: EventualSequence) -> NormalForm:
    assert isinstance(seq.tail, EnumerationTail)
    x = nf(seq.tail.descriptor)
    if x.is_finite():
        raise UnsupportedDescriptorError("enumeration tail needs an infinite descriptor")
    return x


def converges(seq: EventualSequence, point, topology) -> bool:
    """Decide convergence against the descriptor basis of the topology."""
    if isinstance(topology, (ConvSeq, Refined)):
        if point is STAR:
            if isinstance(seq.tail, ConstantTail):
                return seq.tail.value is STAR
            tail = _tail_nf(seq)
            if isinstance(topology, ConvSeq):
                return True
            return blocking_nbhd(descriptor_of_nf(tail), topology.family) is None
        if isinstance(point, int):
            # singletons are open in both spaces
            return isinstance(seq.tail, ConstantTail) and seq.tail.value == point
        raise UnsupportedDescriptorError(f"not a point of the ground set: {point!r}")
    if isinstance(topology, DiscreteOmega):
        return isinstance(seq.tail, ConstantTail) and seq.tail.value == point
    if isinstance(topology, AntidiscreteOmega):
        return True
    if isinstance(topology, CoSmall):
        if not isinstance(point, int):
            raise UnsupportedDescriptorError(f"not a point of the naturals: {point!r}")
        if isinstance(seq.tail, ConstantTail):
            return seq.tail.value == point
        _tail_nf(seq)
        return True  # an injective sequence meets every cofinite set eventually
    raise UnsupportedDescriptorError(f"no convergence rule for {topology!r}")


def unique_limits_check(topology, points=None) -> bool:
    """Do the sampled sequences all have at most one limit in the topology?"""
    star_ground = isinstance(topology, (ConvSeq, Refined))
    if points is None:
        points = list(range(6)) + ([STAR] if star_ground else [])
    samples = [
        EventualSequence((), ConstantTail(0)),
        EventualSequence((5, 3), ConstantTail(2)),
        EventualSequence((), EnumerationTail(OMEGA_SET)),
        EventualSequence((7,), EnumerationTail(CofiniteSet((0, 1, 2)))),
        EventualSequence((), EnumerationTail(BranchSet(Word("", "1")))),
        EventualSequence((), EnumerationTail(BranchSet(Word("", "01")))),
    ]
    if star_ground:
        samples.append(EventualSequence((), ConstantTail(STAR)))
    for seq in samples:
        limits = [p for p in points if converges(seq, p, topology)]
        if len(limits) > 1:
            return False
    return True
