"""Kakeya sets for spheres and circles over finite fields of odd order.

The package builds the standard explicit constructions, counts points on
diagonal quadrics both by brute force and by the closed formulas, checks
the covering properties exhaustively or via stored witnesses, and searches
for minimal circular covers.  Everything is exact integer arithmetic on
top of small cached field tables.
"""

from .constructions import (
    CircleSpec,
    ConstructionResult,
    KakeyaWitness,
    center_spherical,
    circular_odd_power,
    circular_prime,
    circular_square,
    hypersphere_union,
    radius_spherical,
    witness_from_json_dict,
)
from .errors import (
    BadDimensionError,
    BudgetExceededError,
    IdenticalSpheresError,
    KakeyaError,
    NonOddPrimeError,
    NotANonsquareError,
    NotASquareFieldError,
    SizeCapError,
    WrongDegreeError,
    ZeroCoefficientError,
    ZeroDirectionError,
    ZeroRadiusError,
)
from .field import Fq, ceil_sqrt, make_field, prime_power_decompose, smallest_irreducible
from .geometry import (
    DiagonalEq,
    HypersphereSpec,
    PointSet,
    SphereSpec,
    diagonal_count_bruteforce,
    diagonal_count_closed,
    diagonal_counts_by_rhs,
    hypersphere_points,
    norm,
    norm_profile,
    point_rank,
    point_unrank,
    sphere_intersection_size,
    sphere_points,
    sum_two_squares_covers,
)
from .search import SearchOutcome, greedy_circular, minimal_circular_exact
from .verification import (
    BoundReport,
    circular_lower_bounds,
    diff_cover,
    exact_str,
    intersection_lemma_bound,
    spherical_kakeya_lower_bound,
    sum_cover,
    verify_center_kakeya,
    verify_intersection_lemma,
    verify_radius_kakeya,
    witness_valid,
)

__version__ = "0.1.0"

__all__ = [
    "BadDimensionError",
    "BoundReport",
    "BudgetExceededError",
    "CircleSpec",
    "ConstructionResult",
    "DiagonalEq",
    "Fq",
    "HypersphereSpec",
    "IdenticalSpheresError",
    "KakeyaError",
    "KakeyaWitness",
    "NonOddPrimeError",
    "NotANonsquareError",
    "NotASquareFieldError",
    "PointSet",
    "SearchOutcome",
    "SizeCapError",
    "SphereSpec",
    "WrongDegreeError",
    "ZeroCoefficientError",
    "ZeroDirectionError",
    "ZeroRadiusError",
    "ceil_sqrt",
    "center_spherical",
    "circular_lower_bounds",
    "circular_odd_power",
    "circular_prime",
    "circular_square",
    "diagonal_count_bruteforce",
    "diagonal_count_closed",
    "diagonal_counts_by_rhs",
    "diff_cover",
    "exact_str",
    "greedy_circular",
    "hypersphere_points",
    "hypersphere_union",
    "intersection_lemma_bound",
    "make_field",
    "minimal_circular_exact",
    "norm",
    "norm_profile",
    "point_rank",
    "point_unrank",
    "prime_power_decompose",
    "radius_spherical",
    "smallest_irreducible",
    "spherical_kakeya_lower_bound",
    "sphere_intersection_size",
    "sphere_points",
    "sum_cover",
    "sum_two_squares_covers",
    "verify_center_kakeya",
    "verify_intersection_lemma",
    "verify_radius_kakeya",
    "witness_from_json_dict",
    "witness_valid",
]
