"""Exact counting, bounds and brute-force checks for Hermitian rank-metric codes."""

__version__ = "0.1.0"

from .codes import (
    CodeParams,
    LinearCode,
    density_bounds_mrd,
    density_limit,
    density_report,
    density_upper_bound_general,
    min_distance,
    mrd_density,
    mrd_params,
    packing_density,
    singleton_check,
    sphere_packing_check,
)
from .counting import (
    BoundBracket,
    ball_bounds,
    ball_size,
    ball_size_closed_form,
    binomial_bounds,
    gaussian_binomial,
    sphere_bounds,
    sphere_size,
)
from .field import FieldElement, FieldSpec, hermitian_field, make_field, quadratic_extension
from .hermitian import HermitianMatrix, distance, enumerate_hermitian, from_entries, rank, sample
from .oracle import bound_sweep, census_vs_formula, perfect_scan, rank_census

__all__ = [
    "BoundBracket",
    "CodeParams",
    "FieldElement",
    "FieldSpec",
    "HermitianMatrix",
    "LinearCode",
    "ball_bounds",
    "ball_size",
    "ball_size_closed_form",
    "binomial_bounds",
    "bound_sweep",
    "census_vs_formula",
    "density_bounds_mrd",
    "density_limit",
    "density_report",
    "density_upper_bound_general",
    "distance",
    "enumerate_hermitian",
    "from_entries",
    "gaussian_binomial",
    "hermitian_field",
    "make_field",
    "min_distance",
    "mrd_density",
    "mrd_params",
    "packing_density",
    "perfect_scan",
    "quadratic_extension",
    "rank",
    "rank_census",
    "sample",
    "singleton_check",
    "sphere_bounds",
    "sphere_packing_check",
    "sphere_size",
]
