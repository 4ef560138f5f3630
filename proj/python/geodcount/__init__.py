"""Counting oriented images of a closed geodesic under arithmetic Fuchsian groups.

Exact double-coset enumeration over Z[sqrt(2)], ideal-count correlation sums
with their main terms, and the hypergeometric transform machinery, backed by
the C++ core.
"""

from ._core import (
    __version__,
    c_p,
    chi8,
    correlation_sum,
    count_report,
    dist_formula,
    enumerate_double_cosets,
    g_transform,
    geodesic_distance_numeric,
    hyp,
    ideal_count,
    ideal_count_bruteforce,
    ideal_count_sieve,
    main_coefficient,
    mean_square_error,
    pfq,
)

__all__ = [
    "__version__",
    "c_p",
    "chi8",
    "correlation_sum",
    "count_report",
    "dist_formula",
    "enumerate_double_cosets",
    "g_transform",
    "geodesic_distance_numeric",
    "hyp",
    "ideal_count",
    "ideal_count_bruteforce",
    "ideal_count_sieve",
    "main_coefficient",
    "mean_square_error",
    "pfq",
]
