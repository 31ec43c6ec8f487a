"""toricg: exact toric g-vectors of simple polytopes from their
gamma-vectors, together with the lattice-path, permutation, parking-tree
and building-set combinatorics that certify every entry by independent
enumeration at desk scale.
"""

from .errors import (
    BuildingSetError,
    CapacityError,
    ChordalityError,
    PreconditionError,
    SeriesIdentityError,
    StructuralError,
    ToricgError,
)
from .polyvec import (
    IntPoly,
    cnix,
    f_to_h,
    g_contrib,
    gamma_family,
    gamma_to_h,
    h_to_f,
    h_to_gamma,
    kruskal_katona_ok,
    narayana,
    peak_poly,
    sturm_real_rooted,
    toric_g_from_gamma,
    toric_g_from_h,
)
from .series import TruncSeries, verify_series
from .words import catalan, catalan_triangle, enumerate_words, factor_count, motzkin

__version__ = "0.1.0"

__all__ = [
    "BuildingSetError",
    "CapacityError",
    "ChordalityError",
    "IntPoly",
    "PreconditionError",
    "SeriesIdentityError",
    "StructuralError",
    "ToricgError",
    "TruncSeries",
    "catalan",
    "catalan_triangle",
    "cnix",
    "enumerate_words",
    "f_to_h",
    "factor_count",
    "g_contrib",
    "gamma_family",
    "gamma_to_h",
    "h_to_f",
    "h_to_gamma",
    "kruskal_katona_ok",
    "motzkin",
    "narayana",
    "peak_poly",
    "sturm_real_rooted",
    "toric_g_from_gamma",
    "toric_g_from_h",
    "verify_series",
]
