"""Exact twisted L2-Euler characteristics and Thurston norm bounds."""

from ._core import (
    InputError,
    NonAcyclicError,
    SizeGuardError,
    chi2_file,
    chi2_json,
    convex_hull_vertices,
    cover_scale,
    delta_json,
    fibered_norm,
    fox_matrix_json,
    infinite_cyclic_chi2,
    minkowski_sum_vertices,
    polytope_seminorm,
    seifert_chi2,
    selftest,
    thurston_from_genus,
    __version__,
)

__all__ = [
    "InputError",
    "NonAcyclicError",
    "SizeGuardError",
    "chi2_file",
    "chi2_json",
    "convex_hull_vertices",
    "cover_scale",
    "delta_json",
    "fibered_norm",
    "fox_matrix_json",
    "infinite_cyclic_chi2",
    "minkowski_sum_vertices",
    "polytope_seminorm",
    "seifert_chi2",
    "selftest",
    "thurston_from_genus",
    "__version__",
]
