"""The condensational preorder on topologies and the reversibility hierarchy.

Everything here quantifies over permutations of the finite ground set:
homeomorphism classes, the four equivalent reversibility tests, the three
equivalent formulations of the condensational ordering, convex hulls and
weak reversibility, strong reversibility with its classification, the
quotient order digraph, maximal chains, and poset certificates.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import permutations as _all_perms

from .enumeration import TopologyCatalog, catalog
from .topology import (
    DimensionMismatchError,
    FiniteTopology,
    Permutation,
    antidiscrete_topology,
    canonical_form,
    discrete_topology,
    image_topology,
    is_condensation,
    is_homeomorphism,
    mask_tables,
)

REVERSIBILITY_METHODS = ("no_coarser", "no_finer", "antichain", "direct")
LEQ_METHODS = ("coarsening_of_t2_side", "refinement_of_t1_side", "witness_map")


@dataclass(frozen=True)
class HomeoClass:
    """All permutation images of one topology, sorted."""

    members: tuple[FiniteTopology, ...]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


@dataclass(frozen=True)
class SimClass:
    """All topologies condensationally equivalent to one topology, sorted."""

    members: tuple[FiniteTopology, ...]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def homeo_class(t: FiniteTopology) -> HomeoClass:
    images = {tuple(sorted(tab[o] for o in t.opens)) for tab in mask_tables(t.n)}
    return HomeoClass(tuple(FiniteTopology(t.n, o) for o in sorted(images)))


def _opens_subset(a: FiniteTopology, b_set: frozenset[int]) -> bool:
    return all(o in b_set for o in a.opens)


def is_reversible(t: FiniteTopology, method: str = "antichain") -> bool:
    """Is every continuous self-bijection of (X, t) a homeomorphism?

    All four methods are equivalent; each is implemented independently so
    they can be tested against one another.
    """
    cls = homeo_class(t).members
    t_set = frozenset(t.opens)
    if method == "no_coarser":
        return not any(u != t and _opens_subset(u, t_set) for u in cls)
    if method == "no_finer":
        return not any(u != t and _opens_subset(t, frozenset(u.opens)) for u in cls)
    if method == "antichain":
        sets = [frozenset(u.opens) for u in cls]
        for i, a in enumerate(sets):
            for b in sets[i + 1:]:
                if a <= b or b <= a:
                    return False
        return True
    if method == "direct":
        for img in _all_perms(range(t.n)):
            f = Permutation(img)
            if is_condensation(f, t, t) and not is_homeomorphism(f, t, t):
                return False
        return True
    raise ValueError(f"unknown reversibility method {method!r}")


def condensational_leq(t1: FiniteTopology, t2: FiniteTopology,
                       method: str = "coarsening_of_t2_side") -> bool:
    """Does some homeomorphic copy of t1 fit inside t2?

    The three methods are equivalent formulations quantifying over
    permutations: a copy of t1 below t2, a copy of t2 above t1, or a
    continuous bijection from (X, t2) onto (X, t1).
    """
    if t1.n != t2.n:
        raise DimensionMismatchError("comparing topologies on different ground sets")
    n = t1.n
    if method == "coarsening_of_t2_side":
        s2 = frozenset(t2.opens)
        for tab in mask_tables(n):
            if all(tab[o] in s2 for o in t1.opens):
                return True
        return False
    if method == "refinement_of_t1_side":
        s1 = frozenset(t1.opens)
        for tab in mask_tables(n):
            image = {tab[o] for o in t2.opens}
            if s1 <= image:
                return True
        return False
    if method == "witness_map":
        for img in _all_perms(range(n)):
            if is_condensation(Permutation(img), t2, t1):
                return True
        return False
    raise ValueError(f"unknown ordering method {method!r}")


def sim_class(t: FiniteTopology, cat: TopologyCatalog | None = None) -> SimClass:
    """All catalog members u with t <= u <= t in the condensational preorder."""
    cat = cat if cat is not None else catalog(t.n)
    members = [u for u in cat.topologies
               if condensational_leq(t, u) and condensational_leq(u, t)]
    return SimClass(tuple(sorted(members)))


def conv_hull(topologies, cat: TopologyCatalog | None = None) -> tuple[FiniteTopology, ...]:
    """Minimal convex superset in the inclusion lattice: everything that sits
    between two members (inclusive bounds)."""
    tops = sorted(set(topologies))
    if not tops:
        return ()
    n = tops[0].n
    cat = cat if cat is not None else catalog(n)
    sets = [frozenset(u.opens) for u in tops]
    out = []
    for cand in cat.topologies:
        c = frozenset(cand.opens)
        if any(a <= c for a in sets) and any(c <= b for b in sets):
            out.append(cand)
    return tuple(sorted(out))


def is_weakly_reversible(t: FiniteTopology, cat: TopologyCatalog | None = None) -> bool:
    """True iff the homeomorphism class of t is convex in the inclusion lattice."""
    cls = homeo_class(t).members
    return conv_hull(cls, cat) == cls


def is_strongly_reversible(t: FiniteTopology) -> bool:
    """True iff every permutation fixes t; transpositions generate, so
    n*(n-1)/2 checks suffice."""
    for i in range(t.n):
        for j in range(i + 1, t.n):
            f = Permutation.transposition(t.n, i, j)
            if image_topology(f, t) != t:
                return False
    return True


class StrongKind(Enum):
    DISCRETE = "discrete"
    ANTIDISCRETE = "antidiscrete"
    CO_SMALL = "co_small"
    NOT_STRONGLY_REVERSIBLE = "not_strongly_reversible"


def classify_strongly_reversible(t: FiniteTopology) -> StrongKind:
    """Match t against the canonical strongly reversible shapes.

    On a finite ground set the complements-of-small-sets shape collapses
    into the discrete topology, so CO_SMALL is never returned here; it is
    the countable-ground analogue (see revtop.symbolic.CoSmall).
    """
    if t == discrete_topology(t.n):
        return StrongKind.DISCRETE
    if t == antidiscrete_topology(t.n):
        return StrongKind.ANTIDISCRETE
    return StrongKind.NOT_STRONGLY_REVERSIBLE


@dataclass(frozen=True)
class CondOrderDigraph:
    """The condensational order on equivalence classes of topologies.

    Nodes are canonical class representatives; leq is the induced partial
    order and hasse its transitive reduction.
    """

    n: int
    nodes: tuple[FiniteTopology, ...]
    orbit_sizes: tuple[int, ...]
    leq: tuple[tuple[bool, ...], ...]
    hasse: tuple[tuple[int, int], ...]

    def to_dot(self) -> str:
        lines = ["digraph condensational_order {"]
        for i, node in enumerate(self.nodes):
            label = f"orbit={self.orbit_sizes[i]} opens={len(node.opens)}"
            lines.append(f'  n{i} [label="{label}"];')
        for i, j in self.hasse:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "nodes": [{"opens": list(t.opens), "orbit_size": s}
                      for t, s in zip(self.nodes, self.orbit_sizes)],
            "leq": [[int(v) for v in row] for row in self.leq],
            "hasse": [list(e) for e in self.hasse],
        }


def condensational_order(n: int, cat: TopologyCatalog | None = None) -> CondOrderDigraph:
    """Quotient of the catalog by condensational equivalence, with Hasse edges."""
    cat = cat if cat is not None else catalog(n)
    reps = cat.orbit_reps
    k = len(reps)
    leq = [[False] * k for _ in range(k)]
    rep_sets = [frozenset(r.opens) for r in reps]
    tables = mask_tables(n)
    for i, a in enumerate(reps):
        la = len(a.opens)
        for j in range(k):
            if len(reps[j].opens) < la:
                continue
            s2 = rep_sets[j]
            for tab in tables:
                if all(tab[o] in s2 for o in a.opens):
                    leq[i][j] = True
                    break
    # equivalence classes under mutual leq collapse to single nodes
    # (for finite ground sets each class is a single orbit already)
    groups: list[list[int]] = []
    assigned = [-1] * k
    for i in range(k):
        if assigned[i] >= 0:
            continue
        grp = [j for j in range(k) if leq[i][j] and leq[j][i]]
        for j in grp:
            assigned[j] = len(groups)
        groups.append(grp)
    nodes = []
    sizes = []
    for grp in groups:
        rep = min(reps[j] for j in grp)
        nodes.append(canonical_form(rep))
        sizes.append(sum(len(cat.orbits[reps[j]]) for j in grp))
    order = sorted(range(len(groups)), key=lambda g: nodes[g])
    remap = {g: idx for idx, g in enumerate(order)}
    m = len(groups)
    qleq = [[False] * m for _ in range(m)]
    for i in range(k):
        for j in range(k):
            if leq[i][j]:
                qleq[remap[assigned[i]]][remap[assigned[j]]] = True
    nodes = tuple(nodes[g] for g in order)
    sizes = tuple(sizes[g] for g in order)
    hasse = []
    for i in range(m):
        for j in range(m):
            if i == j or not qleq[i][j]:
                continue
            if any(qleq[i][x] and qleq[x][j] and x != i and x != j for x in range(m)):
                continue
            hasse.append((i, j))
    return CondOrderDigraph(n, nodes, sizes,
                            tuple(tuple(row) for row in qleq), tuple(sorted(hasse)))


@dataclass(frozen=True)
class ChainReport:
    """Maximal chains of a finite family of topologies under inclusion."""

    chains: tuple[tuple[FiniteTopology, ...], ...]
    all_singletons: bool
    endpoint_free: bool  # finite nonempty chains always have endpoints

    @property
    def consistent(self) -> bool:
        # a class of a reversible topology must decompose into singleton chains
        return self.all_singletons and not self.endpoint_free


def maximal_chains_and_endpoints(members) -> ChainReport:
    """Enumerate maximal chains of a family of topologies ordered by inclusion.

    Accepts any iterable of topologies (e.g. a SimClass); a CondOrderDigraph
    may be passed directly, in which case its nodes with the quotient order
    are used.
    """
    if isinstance(members, CondOrderDigraph):
        elems = list(members.nodes)
        k = len(elems)
        rel = [[members.leq[i][j] and i != j for j in range(k)] for i in range(k)]
    else:
        if isinstance(members, (HomeoClass, SimClass)):
            members = members.members
        elems = sorted(set(members))
        k = len(elems)
        sets = [frozenset(t.opens) for t in elems]
        rel = [[i != j and sets[i] < sets[j] for j in range(k)] for i in range(k)]
    covers = [[] for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if rel[i][j] and not any(rel[i][x] and rel[x][j] for x in range(k)):
                covers[i].append(j)
    minimal = [i for i in range(k) if not any(rel[j][i] for j in range(k))]
    chains: list[tuple[int, ...]] = []

    def walk(path):
        tip = path[-1]
        if not covers[tip]:
            chains.append(tuple(path))
            return
        for nxt in covers[tip]:
            walk(path + [nxt])

    for start in minimal:
        walk([start])
    chain_tuples = tuple(tuple(elems[i] for i in ch) for ch in sorted(chains))
    all_singletons = all(len(c) == 1 for c in chain_tuples)
    return ChainReport(chain_tuples, all_singletons, endpoint_free=False)


@dataclass(frozen=True)
class PosetInvariant:
    """Canonical certificate of a finite poset: equal iff isomorphic."""

    size: int
    edges: tuple[tuple[int, int], ...]


def _refine_colors(k: int, adj_out, adj_in) -> list[int]:
    colors = [0] * k
    while True:
        sigs = [(colors[v],
                 tuple(sorted(colors[u] for u in adj_out[v])),
                 tuple(sorted(colors[u] for u in adj_in[v])))
                for v in range(k)]
        ranking = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _canonical_edges(k: int, edges: set[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    if not edges:
        return ()
    adj_out = [set() for _ in range(k)]
    adj_in = [set() for _ in range(k)]
    for a, b in edges:
        adj_out[a].add(b)
        adj_in[b].add(a)
    colors = _refine_colors(k, adj_out, adj_in)
    # canonical positions are grouped by color; search the color-respecting
    # labelings for the lexicographically least edge matrix
    slots = sorted(colors)  # color required at each canonical position
    best_sig: list[list[tuple[int, ...]]] = []
    best_assignment: list[list[int]] = []
    assignment: list[int] = []
    used = [False] * k

    def step_sig(v: int) -> tuple[int, ...]:
        sig = []
        for u in assignment:
            sig.append(1 if u in adj_in[v] else 0)   # edge u -> v
            sig.append(1 if v in adj_in[u] else 0)   # edge v -> u
        return tuple(sig)

    def search(prefix: list[tuple[int, ...]]):
        p = len(assignment)
        if p == k:
            if not best_sig or prefix < best_sig[0]:
                best_sig[:] = [list(prefix)]
                best_assignment[:] = [list(assignment)]
            return
        cands = [v for v in range(k) if not used[v] and colors[v] == slots[p]]
        lowest = min(step_sig(v) for v in cands)
        for v in cands:
            sig = step_sig(v)
            if sig != lowest:
                continue
            trial = prefix + [sig]
            if best_sig and trial > best_sig[0][:len(trial)]:
                continue
            used[v] = True
            assignment.append(v)
            search(trial)
            assignment.pop()
            used[v] = False

    search([])
    pos = {v: i for i, v in enumerate(best_assignment[0])}
    return tuple(sorted((pos[a], pos[b]) for a, b in edges))


def poset_invariant(members) -> PosetInvariant:
    """Canonical certificate of a family of topologies ordered by inclusion."""
    if isinstance(members, (HomeoClass, SimClass)):
        members = members.members
    elems = sorted(set(members))
    k = len(elems)
    sets = [frozenset(t.opens) for t in elems]
    edges = {(i, j) for i in range(k) for j in range(k)
             if i != j and sets[i] < sets[j]}
    return PosetInvariant(k, _canonical_edges(k, edges))
