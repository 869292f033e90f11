"""Dehornoy ordering, Dehornoy floor and genus bounds for braid closures."""

from .braid import (
    BraidError,
    BraidParseError,
    BraidWord,
    Letter,
    Permutation,
    band_generator,
    closure_components,
    concat,
    conjugate,
    delta_power,
    embed,
    exponent_sum,
    format_braid,
    free_reduce,
    garside_delta,
    inverse,
    is_knot,
    parse_braid,
    permutation,
    sigma1_counts,
)
from .bounds import (
    CatalogueEntry,
    GenusBounds,
    VerificationReport,
    VertexCensus,
    catalogue,
    corollary_rhs,
    floor_genus_lower,
    genus_bounds,
    lemma2_residual,
    lemma3_bound,
    run_campaign,
    theorem_rhs,
    verify_braid,
)
from .invariants import (
    alexander_genus_lower,
    alexander_polynomial,
    bennequin_chi,
    bennequin_genus_upper,
    burau_matrix,
    connected_chi_lower,
    reduced_burau,
)
from .laurent import LaurentPoly, PolyMatrix, poly_det
from .ordering import (
    FloorResult,
    OrderResult,
    SigmaClass,
    SigmaKind,
    compare,
    dehornoy_floor,
    handle_reduce,
    is_trivial,
    sigma_classify,
)
from .sampling import random_band_product, random_braid

__version__ = "0.1.0"
