from .exact_linalg import exact_rank
from .intersection import (
    check_b_one_forces_distance_regular,
    distance_two_identity,
    intersection_numbers,
    is_distance_regular,
    triple_numbers,
    walk_regularity_report,
)
from .walk_counts import minimal_poly_degree, walk_regularity, walk_regularity_order, walk_table

__all__ = [
    "check_b_one_forces_distance_regular",
    "distance_two_identity",
    "exact_rank",
    "intersection_numbers",
    "is_distance_regular",
    "minimal_poly_degree",
    "triple_numbers",
    "walk_regularity",
    "walk_regularity_order",
    "walk_regularity_report",
    "walk_table",
]
