"""Exact computer algebra over small prime fields, with a verification suite.

The package provides sparse multivariate polynomial arithmetic over F_p,
formal derivations, Groebner-basis computations (with a compiled kernel
and a pure-Python fallback), elimination-based ring-map kernels, Jacobian
smoothness certificates, exact surface-invariant arithmetic, and a
fourteen-check verification suite driven by versioned fixture data.
"""

from .backend import available_backends, selected_name
from .derivations import (Derivation, apply, chart_transform,
                          fixed_locus_ideal, format_derivation, graded_kernel,
                          iterate_power, parse_derivation, vector_reduce)
from .errors import (BudgetExceeded, ContextError, DivisibilityError,
                     EngineError, GradingError, ParseError, TransformError)
from .fixtures import FixtureSet, load_fixtures
from .groebner import (DEFAULT_BUDGET, INCONCLUSIVE, SMOOTH, SMOOTH_ON_LOCUS,
                       CombinationWitness, GroebnerBasis, KernelPresentation,
                       SmoothnessCertificate, buchberger, eliminate,
                       ideal_member, jacobian_minors, jacobian_smoothness,
                       radical_member, reduce, ring_map_kernel, spolynomial)
from .numerics import (InvariantRecord, betti_consistency,
                       chi_of_anticanonical_power, descend_invariants,
                       e1_degeneration_check, feasible_characteristics,
                       hypersurface_invariants, noether_check,
                       self_intersection_from_chis, torsion_order_bound,
                       torsor_invariants)
from .rings import (DEGREVLEX, LEX, MonomialOrder, PolyRing, Polynomial,
                    block_order, dehomogenize, format_poly, frobenius_power,
                    homogenize, is_prime, laurent_normalize, monomial_basis,
                    parse_poly, substitute)
from .suite import (CHECK_IDS, DEFAULT_SEED, MUTATIONS, CheckResult, Mutation,
                    report, run_all, verify_witness)

__version__ = "1.0.0"

__all__ = [
    "available_backends", "selected_name",
    "Derivation", "apply", "chart_transform", "fixed_locus_ideal",
    "format_derivation", "graded_kernel", "iterate_power", "parse_derivation",
    "vector_reduce",
    "BudgetExceeded", "ContextError", "DivisibilityError", "EngineError",
    "GradingError", "ParseError", "TransformError",
    "FixtureSet", "load_fixtures",
    "DEFAULT_BUDGET", "INCONCLUSIVE", "SMOOTH", "SMOOTH_ON_LOCUS",
    "CombinationWitness", "GroebnerBasis", "KernelPresentation",
    "SmoothnessCertificate", "buchberger", "eliminate", "ideal_member",
    "jacobian_minors", "jacobian_smoothness", "radical_member", "reduce",
    "ring_map_kernel", "spolynomial",
    "InvariantRecord", "betti_consistency", "chi_of_anticanonical_power",
    "descend_invariants", "e1_degeneration_check",
    "feasible_characteristics", "hypersurface_invariants", "noether_check",
    "self_intersection_from_chis", "torsion_order_bound", "torsor_invariants",
    "DEGREVLEX", "LEX", "MonomialOrder", "PolyRing", "Polynomial",
    "block_order", "dehomogenize", "format_poly", "frobenius_power",
    "homogenize", "is_prime", "laurent_normalize", "monomial_basis",
    "parse_poly", "substitute",
    "CHECK_IDS", "DEFAULT_SEED", "MUTATIONS", "CheckResult", "Mutation",
    "report", "run_all", "verify_witness",
    "__version__",
]
