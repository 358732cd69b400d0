"""Exact computations around higher topological complexity."""

from .errors import (
    AlgebraError,
    ContradictionError,
    DomainError,
    HigherTCError,
    InsufficientTruncation,
    ParseError,
    ResourceError,
)
from .genfunc import (
    IntPolynomial,
    TCSequence,
    gamma_degree_check,
    growth_report,
    make_sequence,
    p_at_one_check,
    parse_sequence,
    raag_tc_sequence,
    series_to_P,
)
from .graded_algebra import (
    GradedAlgebra,
    cup_length,
    ideal_power_nonzero,
    make_algebra,
    mult_kernel,
    multiply,
    parse_algebra,
    tensor_power,
    zcl_r,
    zcl_superadditivity_check,
)
from .graph_core import (
    Graph,
    clique_number,
    gamma_n,
    is_clique,
    maximal_cliques,
    parse_graph,
    raag_invariants,
    z_gamma_closed_form,
    z_r,
    z_r_bruteforce,
)
from .sullivan import (
    SullivanModel,
    apply_d,
    cat_pure_odd,
    cohomology,
    cohomology_ring,
    is_pure_odd,
    kr_generators,
    kr_power_vanishes,
    make_model,
    mtc_bounds,
    parse_model,
    pure_odd_certificate,
    tc_mtc_pure_odd,
)

__version__ = "0.1.0"
