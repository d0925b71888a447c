"""Decision procedures for reversible, weakly reversible and strongly
reversible topologies: exact finite-topology combinatorics plus a symbolic
engine for the countable model spaces."""

from .topology import (
    FiniteTopology,
    Permutation,
    TopologyError,
    CapExceededError,
    DimensionMismatchError,
    MissingEmptyError,
    MissingFullError,
    NotClosedUnderIntersectionError,
    NotClosedUnderUnionError,
    antidiscrete_topology,
    canonical_form,
    closure,
    discrete_topology,
    generate_topology,
    image_topology,
    interior,
    is_condensation,
    is_continuous,
    is_homeomorphism,
    validate_topology,
)
from .enumeration import (
    Preorder,
    TopologyCatalog,
    catalog,
    enumerate_preorders,
    enumerate_topologies,
    enumerate_topologies_via_preorders,
    preorder_of_topology,
    topology_of_preorder,
)
from .order import (
    CondOrderDigraph,
    HomeoClass,
    PosetInvariant,
    SimClass,
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
from .ramsey import (
    HomogeneousResult,
    constant_or_increasing,
    constant_or_injective,
    homogeneous_pairs,
    verify_result,
)
from .symbolic import (
    ADFamily,
    AntidiscreteOmega,
    ConvSeq,
    CoSmall,
    DiscreteOmega,
    EventualSequence,
    ConstantTail,
    EnumerationTail,
    NoBetaAvailableError,
    OrderedZ,
    Refined,
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
from .descriptors import (
    STAR,
    Z_FIRST,
    BranchSet,
    ClosedLeftZ,
    CofiniteSet,
    Composition,
    FiniteSet,
    FinSupportPerm,
    OmegaStarSet,
    OpenLeftZ,
    ShiftZ,
    UnsupportedDescriptorError,
    Word,
)

__all__ = [name for name in dir() if not name.startswith("_")]
