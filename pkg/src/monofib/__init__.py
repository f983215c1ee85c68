"""Monodromy pairs for primitive covers of an elliptic curve branched over
one point, and the invariants of the fibration C x C -> E they induce."""

from .cover import (
    BeauvilleInput,
    BoundsReport,
    CoverInvariants,
    MonodromyPair,
    RamificationProfile,
    analyze,
    beauville_node_count,
    bounds_report,
    curve_genus,
    fibre_genus,
    is_reduced_ramification,
    ramification_profile,
    singular_fibre_stats,
    surface_invariants,
)
from .groups import (
    BlockSystem,
    ClosureOverflowError,
    GeneratedGroup,
    enumerate_elements,
    group_order,
    is_primitive,
    is_transitive,
    minimal_block_containing,
    orbit,
)
from .perm import (
    CycleDecomposition,
    CycleSyntaxError,
    Permutation,
    commutator,
    compose,
    cycle_decomposition,
    cycle_type,
    format_cycles,
    inverse,
    parse_cycles,
)
from .search import (
    Certificate,
    SearchConfig,
    canonical_form,
    cycle_types_of_degree,
    run_search,
    search,
    validate_certificate,
)

__version__ = "0.1.0"
