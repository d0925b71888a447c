import random

import pytest

from revtop.descriptors import (
    STAR,
    BranchSet,
    ClosedLeftZ,
    CofiniteSet,
    Composition,
    DifferenceSet,
    FiniteSet,
    FinSupportPerm,
    OmegaStarSet,
    OpenLeftZ,
    ShiftZ,
    UnionSet,
    UnsupportedDescriptorError,
    Word,
    nf,
    nf_enumerate,
    word_contains,
)
from revtop.symbolic import (
    ADFamily,
    AntidiscreteOmega,
    ConstantTail,
    ConvSeq,
    CoSmall,
    DiscreteOmega,
    EnumerationTail,
    EventualSequence,
    NoBetaAvailableError,
    OrderedZ,
    ad_family,
    blocking_nbhd,
    construct_o_star,
    converges,
    f_m_closed_check,
    image_descriptor,
    image_topology_symbolic,
    increasing_chain,
    member_open,
    nonreversibility_witness,
    preserves_topology,
    star_in_closure_check,
    unique_limits_check,
)


# --- open-set membership ----------------------------------------------------

def test_ordered_z_schema_membership():
    t = OrderedZ(0)
    assert member_open(ClosedLeftZ(5), t)
    assert member_open(ClosedLeftZ(-100), t)
    assert not member_open(OpenLeftZ(1), t)
    assert member_open(OpenLeftZ(0), t)
    assert member_open(OpenLeftZ(-7), t)
    from revtop.descriptors import AllZ, EmptyZ, FiniteZ
    assert member_open(EmptyZ(), t)
    assert member_open(AllZ(), t)
    assert not member_open(FiniteZ(False, (3,)), t)
    # semantic equality: a union denoting a closed segment is recognized
    from revtop.descriptors import UnionZ
    assert member_open(UnionZ((ClosedLeftZ(2), OpenLeftZ(5))), t)


def test_cosmall_membership():
    t = CoSmall()
    assert member_open(CofiniteSet((3,)), t)
    assert member_open(CofiniteSet(()), t)
    assert member_open(FiniteSet(()), t)
    assert not member_open(FiniteSet((3,)), t)
    assert not member_open(BranchSet(Word("", "0")), t)


def test_discrete_and_antidiscrete_membership():
    assert member_open(BranchSet(Word("", "0")), DiscreteOmega())
    assert member_open(FiniteSet((1, 2)), DiscreteOmega())
    assert member_open(FiniteSet(()), AntidiscreteOmega())
    assert member_open(CofiniteSet(()), AntidiscreteOmega())
    assert not member_open(FiniteSet((0,)), AntidiscreteOmega())


def test_convseq_membership():
    t = ConvSeq()
    assert member_open(OmegaStarSet(FiniteSet((3, 5)), star=False), t)
    assert member_open(OmegaStarSet(BranchSet(Word("", "0")), star=False), t)
    assert member_open(OmegaStarSet(CofiniteSet((0, 4)), star=True), t)
    assert not member_open(OmegaStarSet(FiniteSet((3,)), star=True), t)
    assert not member_open(OmegaStarSet(BranchSet(Word("", "0")), star=True), t)
    # bare descriptors count as star-free subsets
    assert member_open(FiniteSet((1,)), t)


def test_member_open_ground_mismatch():
    with pytest.raises(UnsupportedDescriptorError):
        member_open(ClosedLeftZ(0), CoSmall())
    with pytest.raises(UnsupportedDescriptorError):
        member_open(FiniteSet((1,)), OrderedZ(0))


# --- images -----------------------------------------------------------------

def test_image_descriptor_shift():
    assert image_descriptor(ShiftZ(1), ClosedLeftZ(5)) == ClosedLeftZ(6)
    assert image_descriptor(ShiftZ(-2), OpenLeftZ(0)) == OpenLeftZ(-2)


def test_image_descriptor_respects_composition():
    comp = Composition((ShiftZ(2), ShiftZ(-5)))
    step = image_descriptor(ShiftZ(-5), image_descriptor(ShiftZ(2), ClosedLeftZ(0)))
    assert image_descriptor(comp, ClosedLeftZ(0)) == step == ClosedLeftZ(-3)
    perms = Composition((FinSupportPerm.swap(0, 1), FinSupportPerm.swap(1, 2)))
    step = image_descriptor(FinSupportPerm.swap(1, 2),
                            image_descriptor(FinSupportPerm.swap(0, 1), CofiniteSet((0,))))
    assert image_descriptor(perms, CofiniteSet((0,))) == step == CofiniteSet((2,))


def test_image_descriptor_fin_support():
    swap = FinSupportPerm.swap(0, 1)
    assert image_descriptor(swap, CofiniteSet((0,))) == CofiniteSet((1,))
    assert image_descriptor(swap, FiniteSet((0, 5))) == FiniteSet((1, 5))
    from revtop.descriptors import nf_member
    moved = nf(image_descriptor(swap, BranchSet(Word("", "1"))))
    want = {swap.apply(k) for k in range(64) if word_contains(Word("", "1"), k)}
    assert {k for k in range(64) if nf_member(moved, k)} == want


def test_image_topology_shift_on_ordered_z():
    schema = image_topology_symbolic(ShiftZ(1), OrderedZ(0))
    assert schema.topology == OrderedZ(1)
    assert schema.verify()
    double = image_topology_symbolic(Composition((ShiftZ(1), ShiftZ(2))), OrderedZ(0))
    assert double.topology == OrderedZ(3)
    assert double.verify()


def test_image_topology_fin_support_on_cosmall():
    schema = image_topology_symbolic(FinSupportPerm.swap(2, 9), CoSmall())
    assert schema.topology == CoSmall()
    assert schema.verify()


# --- non-reversibility witnesses --------------------------------------------

def test_witness_for_base_cutoff():
    w = nonreversibility_witness(OrderedZ(0))
    assert w.map == ShiftZ(1)
    assert w.image == OrderedZ(1)
    assert w.separator == OpenLeftZ(1)
    assert w.verify()
    assert member_open(w.separator, w.image)
    assert not member_open(w.separator, w.source)


@pytest.mark.parametrize("c", [-3, 0, 7, 100])
def test_witness_translation_symmetry(c):
    w = nonreversibility_witness(OrderedZ(c))
    assert w.image == OrderedZ(c + 1)
    assert w.separator == OpenLeftZ(c + 1)
    assert w.verify()


def test_increasing_chain_of_homeomorphic_copies():
    chain = increasing_chain(OrderedZ(0), 10)
    assert [w.image.c for w in chain] == list(range(1, 11))
    assert all(w.verify() for w in chain)
    # strictness at every level: the separator is new at that level
    for w in chain:
        assert member_open(w.separator, w.image)
        assert not member_open(w.separator, w.source)
    # all levels are pairwise homeomorphic via shifts
    for i in range(0, 10, 3):
        for j in range(i + 1, 10, 2):
            hop = image_topology_symbolic(ShiftZ(j - i), OrderedZ(i))
            assert hop.topology == OrderedZ(j) and hop.verify()


# --- strong reversibility of the cofinite topology --------------------------

def test_preserves_topology_examples():
    assert preserves_topology(FinSupportPerm.identity(), CoSmall()).verify()
    cert = preserves_topology(FinSupportPerm.swap(0, 1), CoSmall())
    assert cert.ok and cert.verify()
    assert (CofiniteSet((0,)), CofiniteSet((1,))) in cert.checks


def test_preserves_topology_seeded_sample():
    rng = random.Random(20250810)
    for _ in range(50):
        size = rng.randrange(0, 7)
        support = rng.sample(range(30), size)
        images = support[:]
        rng.shuffle(images)
        perm = FinSupportPerm(tuple(zip(support, images)))
        cert = preserves_topology(perm, CoSmall())
        assert cert.ok and cert.verify()


def test_preserves_topology_rejects_shift():
    with pytest.raises(UnsupportedDescriptorError):
        preserves_topology(ShiftZ(1), CoSmall())


# --- almost-disjoint families -----------------------------------------------

def test_ad_family_words_and_sizes():
    fam = ad_family(4)
    assert fam.words == (Word("", "1"), Word("", "01"), Word("", "001"), Word("", "0001"))
    for i in range(4):
        for j in range(i + 1, 4):
            assert fam.intersection_size(i, j) == min(i, j)


def test_ad_family_rejects_duplicates():
    with pytest.raises(UnsupportedDescriptorError):
        ADFamily((BranchSet(Word("", "1")), BranchSet(Word("1", "11"))))


def test_disjoint_branches():
    zeros, ones = BranchSet(Word("", "0")), BranchSet(Word("", "1"))
    from revtop.descriptors import IntersectionSet
    overlap = nf(IntersectionSet((zeros, ones)))
    assert overlap.is_finite() and not overlap.plus


def test_intersection_matches_enumeration_oracle():
    # enumeration oracle: intersect explicit prefixes of both branch sets
    a, b = BranchSet(Word("", "01")), BranchSet(Word("0", "1"))
    big_a = {k for k in range(5000) if word_contains(a.word, k)}
    big_b = {k for k in range(5000) if word_contains(b.word, k)}
    assert big_a & big_b == {2, 5}
    from revtop.descriptors import IntersectionSet
    overlap = nf(IntersectionSet((a, b)))
    assert overlap.is_finite() and overlap.plus == {2, 5}


def test_branch_elements_strictly_increasing_and_unbounded():
    fam = ad_family(3)
    for member in fam.members:
        els = nf_enumerate(nf(member), 10)
        assert len(els) == 10
        assert all(x < y for x, y in zip(els, els[1:]))
    assert nf_enumerate(nf(BranchSet(Word("", "0"))), 10) == (2, 4, 8, 16, 32, 64, 128, 256, 512, 1024)


# --- the refined sequence space ---------------------------------------------

def test_f_m_closed_check():
    assert f_m_closed_check(BranchSet(Word("", "0")))
    assert f_m_closed_check(CofiniteSet(()))           # the full index set
    assert f_m_closed_check(CofiniteSet((0, 1, 2)))
    combo = UnionSet((BranchSet(Word("", "01")), BranchSet(Word("", "1"))))
    assert f_m_closed_check(combo)
    with pytest.raises(ValueError):
        f_m_closed_check(FiniteSet((1, 2, 3)))


def test_o_star_refines_base():
    fam = ad_family(2)
    refined = construct_o_star(fam)
    assert refined.removed == fam.members
    # every base open stays open (the empty blocked-set case)
    assert member_open(OmegaStarSet(FiniteSet((0, 3)), star=False), refined)
    assert member_open(OmegaStarSet(CofiniteSet((5,)), star=True), refined)
    # the complement of a family member becomes a neighborhood of the limit
    blocked = OmegaStarSet(DifferenceSet(CofiniteSet(()), fam.members[0]), star=True)
    assert member_open(blocked, refined)
    assert not member_open(blocked, ConvSeq())
    # but a foreign branch complement does not
    foreign = OmegaStarSet(DifferenceSet(CofiniteSet(()), BranchSet(Word("", "0"))), star=True)
    assert not member_open(foreign, refined)


def test_star_in_closure_witnesses():
    fam = ad_family(3)
    whole = OmegaStarSet(CofiniteSet(()), star=True)
    w = star_in_closure_check(fam, (0,), whole)
    assert w.beta == 1 and w.element == 2 and w.verify()
    w = star_in_closure_check(fam, (), OmegaStarSet(CofiniteSet(tuple(range(10))), star=True))
    assert w.beta == 0 and w.element == 15 and w.verify()
    with pytest.raises(NoBetaAvailableError):
        star_in_closure_check(fam, (0, 1, 2), whole)
    with pytest.raises(UnsupportedDescriptorError):
        star_in_closure_check(fam, (), OmegaStarSet(FiniteSet((1,)), star=True))


def test_blocking_certificates():
    fam = ad_family(4)
    cert = blocking_nbhd(fam.members[1], fam)
    assert cert is not None and cert.index == 1 and cert.verify()
    assert len(cert.intersection_prefix) == 5
    modified = DifferenceSet(fam.members[1], FiniteSet(nf_enumerate(nf(fam.members[1]), 3)))
    cert = blocking_nbhd(modified, fam)
    assert cert is not None and cert.index == 1 and cert.verify()
    assert blocking_nbhd(BranchSet(Word("", "011")), fam) is None
    with pytest.raises(ValueError):
        blocking_nbhd(FiniteSet((1, 2)), fam)


def test_convergence_in_model_spaces():
    ascending = EventualSequence((), EnumerationTail(CofiniteSet(())))
    assert converges(ascending, STAR, ConvSeq())
    assert not converges(ascending, 5, ConvSeq())
    constant = EventualSequence((9, 9), ConstantTail(3))
    assert converges(constant, 3, ConvSeq())
    assert not converges(constant, STAR, ConvSeq())
    assert converges(EventualSequence((), ConstantTail(STAR)), STAR, ConvSeq())


def test_convergence_flip_between_base_and_refined():
    fam = ad_family(3)
    refined = construct_o_star(fam)
    for member in fam.members:
        seq = EventualSequence((), EnumerationTail(member))
        assert converges(seq, STAR, ConvSeq())
        assert not converges(seq, STAR, refined)
    outsider = EventualSequence((), EnumerationTail(BranchSet(Word("", "011"))))
    assert converges(outsider, STAR, ConvSeq())
    assert converges(outsider, STAR, refined)


def test_unique_limits():
    assert unique_limits_check(ConvSeq())
    assert unique_limits_check(construct_o_star(ad_family(3)))
    assert unique_limits_check(DiscreteOmega())
    assert not unique_limits_check(CoSmall())
    assert not unique_limits_check(AntidiscreteOmega())


def test_eventual_sequence_values():
    seq = EventualSequence((7, 4), EnumerationTail(BranchSet(Word("", "0"))))
    assert [seq.value_at(i) for i in range(6)] == [7, 4, 2, 4, 8, 16]
    const = EventualSequence((1,), ConstantTail(0))
    assert [const.value_at(i) for i in range(4)] == [1, 0, 0, 0]
