"""Primeness of finite graded rings, Leavitt path rings and group-ring
filter subrings, decided exhaustively at desk scale."""

from .errors import CapError, SpecError
from .finring import (
    Caps,
    DEFAULT_CAPS,
    FiniteRing,
    Ideal,
    all_ideals,
    center,
    generate_ideal,
    gf,
    grpalg,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    is_fully_idempotent,
    is_prime_ideal,
    is_prime_ring,
    is_von_neumann_regular,
    make_ring,
    mat,
    product,
    subring,
    tri,
    zmod,
)
from .grading import (
    GradedRing,
    GradingClassification,
    all_graded_ideals,
    attach_grading,
    classify_grading,
    generate_graded_ideal,
    homogeneous_components,
    is_graded_ideal,
    is_graded_m_system,
    is_graded_prime_ideal,
    is_graded_prime_ring,
    trivial_grading,
)
from .correspondence import (
    Report,
    e_component,
    is_g_invariant,
    is_g_prime_base,
    is_g_prime_ideal,
    is_identity_generated,
    verify_bijection_ideally_symmetric,
    verify_bijection_identity_generated,
)
from .groups import FiniteGroup, IntegerGroup, Z, cyclic, symmetric_group
from .leavitt import (
    DirectedGraph,
    LeavittContext,
    LpaElement,
    corner_reduce,
    graph,
    is_leavitt_prime,
    lpa_degree,
    lpa_mul,
    reachability,
    satisfies_mt3,
    verify_corner_orthogonality,
)
from .grfilter import (
    FilterRing,
    GFilter,
    Witness,
    ZRule,
    build_filter_subring,
    classify_filter,
    is_s_unital_module,
    make_finite_filter,
    make_z_filter,
    validate_filter,
    witness_search,
)
from .specio import (
    parse_filter_file,
    parse_graded_file,
    parse_graph_file,
    parse_group_spec,
    parse_ring_spec,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
