"""Strongly quasipositive braid words, band surfaces, and concordance families."""

from .words import (
    ArtinWord,
    BandWord,
    Permutation,
    WordSyntaxError,
    parse_artin_word,
    parse_band_word,
    underlying_permutation,
)
from .surface import (
    BoundaryTrace,
    SurfaceGraph,
    euler_characteristic,
    first_betti,
    genus_profile,
    is_unlink_surface,
    surface_graph,
    trace_boundary,
)
from .laurent import LaurentPolynomial
from .selection import (
    BandSelection,
    RelocationLostError,
    UnlinkInputError,
    classify_and_select,
    persistent_selection,
)
from .invariants import (
    BudgetExceeded,
    InvariantReport,
    SeifertMatrix,
    alexander,
    alexander_of_word,
    burau_alexander_oracle,
    extract_component,
    full_report,
    jones_tl,
    kauffman_bracket_bruteforce,
    linking_matrix,
    seifert_matrix,
    signature,
    signature_of_word,
    simplify_closure_word,
    slice_necessary,
)
from .tie import (
    AnnulusWord,
    OracleViolationError,
    SelectionInvalidError,
    TieResult,
    bundled_alpha,
    family,
    tb_connected_sum,
    tie,
    trivial_annulus,
)

__version__ = "0.1.0"

__all__ = [
    "AnnulusWord",
    "ArtinWord",
    "BandSelection",
    "BandWord",
    "BoundaryTrace",
    "BudgetExceeded",
    "InvariantReport",
    "LaurentPolynomial",
    "OracleViolationError",
    "Permutation",
    "RelocationLostError",
    "SeifertMatrix",
    "SelectionInvalidError",
    "SurfaceGraph",
    "TieResult",
    "UnlinkInputError",
    "WordSyntaxError",
    "alexander",
    "alexander_of_word",
    "bundled_alpha",
    "burau_alexander_oracle",
    "classify_and_select",
    "euler_characteristic",
    "extract_component",
    "family",
    "first_betti",
    "full_report",
    "genus_profile",
    "is_unlink_surface",
    "jones_tl",
    "kauffman_bracket_bruteforce",
    "linking_matrix",
    "parse_artin_word",
    "parse_band_word",
    "persistent_selection",
    "seifert_matrix",
    "signature",
    "signature_of_word",
    "simplify_closure_word",
    "slice_necessary",
    "surface_graph",
    "tb_connected_sum",
    "tie",
    "trace_boundary",
    "trivial_annulus",
    "underlying_permutation",
    "__version__",
]
