import pytest

from revtop.enumeration import catalog
from revtop.order import (
    LEQ_METHODS,
    REVERSIBILITY_METHODS,
    StrongKind,
    classify_strongly_reversible,
    condensational_leq,
    condensational_order,
    conv_hull,
    homeo_class,
    is_reversible,
    is_strongly_reversible,
    is_weakly_reversible,
    maximal_chains_and_endpoints,
    poset_invariant,
    sim_class,
)
from revtop.topology import (
    DimensionMismatchError,
    FiniteTopology,
    antidiscrete_topology,
    discrete_topology,
)

SIERP = FiniteTopology(2, (0, 1, 3))
SIERP_FLIP = FiniteTopology(2, (0, 2, 3))


def test_homeo_class_examples():
    assert homeo_class(discrete_topology(3)).members == (discrete_topology(3),)
    assert homeo_class(SIERP).members == (SIERP, SIERP_FLIP)
    one_point_open = FiniteTopology(3, (0, 1, 7))
    assert len(homeo_class(one_point_open)) == 3


def test_reversibility_methods_agree_n3(cat3):
    for t in cat3.topologies:
        answers = [is_reversible(t, m) for m in REVERSIBILITY_METHODS]
        assert answers == [True, True, True, True]


def test_reversibility_examples():
    assert all(is_reversible(discrete_topology(2), m) for m in REVERSIBILITY_METHODS)
    assert all(is_reversible(SIERP, m) for m in REVERSIBILITY_METHODS)


def test_leq_examples(cat2):
    anti, disc = antidiscrete_topology(2), discrete_topology(2)
    for t in cat2.topologies:
        assert all(condensational_leq(anti, t, m) for m in LEQ_METHODS)
        assert all(condensational_leq(t, disc, m) for m in LEQ_METHODS)
    assert not any(condensational_leq(disc, anti, m) for m in LEQ_METHODS)


def test_leq_methods_agree_all_pairs_n2(cat2):
    for a in cat2.topologies:
        for b in cat2.topologies:
            answers = {condensational_leq(a, b, m) for m in LEQ_METHODS}
            assert len(answers) == 1


def test_leq_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        condensational_leq(SIERP, discrete_topology(3))


def test_leq_is_preorder(cat2):
    tops = cat2.topologies
    for a in tops:
        assert condensational_leq(a, a)
    for a in tops:
        for b in tops:
            for c in tops:
                if condensational_leq(a, b) and condensational_leq(b, c):
                    assert condensational_leq(a, c)


def test_sim_class_collapses_to_homeo_class_n3(cat3):
    for t in cat3.topologies:
        assert sim_class(t, cat3).members == homeo_class(t).members


def test_conv_hull_examples(cat2):
    anti = antidiscrete_topology(2)
    assert conv_hull([anti], cat2) == (anti,)
    assert conv_hull([SIERP, SIERP_FLIP], cat2) == (SIERP, SIERP_FLIP)


def test_conv_hull_matches_sim_class_n3(cat3):
    for t in cat3.topologies:
        assert conv_hull(homeo_class(t).members, cat3) == sim_class(t, cat3).members


def test_weak_reversibility(cat3):
    assert is_weakly_reversible(discrete_topology(2))
    assert is_weakly_reversible(SIERP)
    for t in cat3.topologies:
        weak = is_weakly_reversible(t, cat3)
        assert weak == (sim_class(t, cat3).members == homeo_class(t).members)
        assert weak


def test_reversibility_bridges(cat3):
    # strongly reversible => reversible => weakly reversible
    for t in cat3.topologies:
        if is_strongly_reversible(t):
            assert is_reversible(t)
        if is_reversible(t):
            assert is_weakly_reversible(t, cat3)


def test_strong_reversibility_counts():
    for n in (2, 3, 4):
        strong = [t for t in catalog(n).topologies if is_strongly_reversible(t)]
        assert strong == sorted([antidiscrete_topology(n), discrete_topology(n)])
    for n in (0, 1):
        assert sum(is_strongly_reversible(t) for t in catalog(n).topologies) == 1


def test_classification_examples():
    assert classify_strongly_reversible(discrete_topology(4)) == StrongKind.DISCRETE
    assert classify_strongly_reversible(antidiscrete_topology(4)) == StrongKind.ANTIDISCRETE
    assert classify_strongly_reversible(SIERP) == StrongKind.NOT_STRONGLY_REVERSIBLE


def test_classification_agrees_with_orbit_test(cat4):
    for t in cat4.topologies:
        label = classify_strongly_reversible(t)
        assert (label != StrongKind.NOT_STRONGLY_REVERSIBLE) == (len(homeo_class(t)) == 1)
        assert (label != StrongKind.NOT_STRONGLY_REVERSIBLE) == is_strongly_reversible(t)


def test_condensational_order_n1():
    digraph = condensational_order(1)
    assert len(digraph.nodes) == 1
    assert digraph.hasse == ()


def test_condensational_order_n2_is_three_chain():
    digraph = condensational_order(2)
    assert [t.opens for t in digraph.nodes] == [(0, 1, 2, 3), (0, 1, 3), (0, 3)]
    assert digraph.orbit_sizes == (1, 2, 1)
    assert set(digraph.hasse) == {(1, 0), (2, 1)}


def test_condensational_order_n3_antisymmetric():
    digraph = condensational_order(3)
    assert len(digraph.nodes) == 9
    k = len(digraph.nodes)
    for i in range(k):
        assert digraph.leq[i][i]
        for j in range(k):
            if i != j and digraph.leq[i][j]:
                assert not digraph.leq[j][i]


def test_quotient_order_is_transitive():
    digraph = condensational_order(3)
    k = len(digraph.nodes)
    for i in range(k):
        for j in range(k):
            for x in range(k):
                if digraph.leq[i][j] and digraph.leq[j][x]:
                    assert digraph.leq[i][x]


def test_hasse_is_transitive_reduction():
    digraph = condensational_order(3)
    k = len(digraph.nodes)
    hasse = set(digraph.hasse)
    for i, j in hasse:
        assert digraph.leq[i][j] and i != j
        for x in range(k):
            if x not in (i, j):
                assert not (digraph.leq[i][x] and digraph.leq[x][j])


def test_maximal_chains_on_classes(cat3):
    report = maximal_chains_and_endpoints(sim_class(SIERP))
    assert report.chains == ((SIERP,), (SIERP_FLIP,))
    assert report.all_singletons and report.consistent
    report = maximal_chains_and_endpoints([discrete_topology(2)])
    assert report.chains == ((discrete_topology(2),),)
    for t in cat3.topologies:
        assert maximal_chains_and_endpoints(sim_class(t, cat3)).all_singletons


def test_maximal_chains_on_general_posets():
    anti, disc = antidiscrete_topology(2), discrete_topology(2)
    report = maximal_chains_and_endpoints([anti, SIERP, disc])
    assert report.chains == ((anti, SIERP, disc),)
    assert not report.all_singletons
    report = maximal_chains_and_endpoints([anti, SIERP, SIERP_FLIP, disc])
    assert len(report.chains) == 2


def test_maximal_chains_of_digraph():
    digraph = condensational_order(2)
    report = maximal_chains_and_endpoints(digraph)
    assert len(report.chains) == 1 and len(report.chains[0]) == 3


def test_poset_invariant_examples():
    assert poset_invariant([discrete_topology(2)]).size == 1
    inv = poset_invariant(homeo_class(SIERP))
    assert inv.size == 2 and inv.edges == ()


def test_poset_invariant_is_isomorphism_invariant(cat3):
    tops = cat3.topologies
    for a in tops[::4]:
        cls = homeo_class(a)
        for b in cls.members:
            assert poset_invariant(homeo_class(b)) == poset_invariant(cls)


def test_poset_invariant_distinguishes_shapes():
    anti, disc = antidiscrete_topology(2), discrete_topology(2)
    chain3 = poset_invariant([anti, SIERP, disc])
    vee = poset_invariant([anti, SIERP, SIERP_FLIP])
    antichain2 = poset_invariant([SIERP, SIERP_FLIP])
    assert chain3 != vee
    assert chain3.size == vee.size == 3
    assert antichain2.size == 2
    assert chain3.edges == ((1, 0), (2, 0), (2, 1))
    # mirrored diamond arms are isomorphic
    wedge_a = poset_invariant([anti, SIERP])
    wedge_b = poset_invariant([anti, SIERP_FLIP])
    assert wedge_a == wedge_b == poset_invariant([SIERP, disc])
