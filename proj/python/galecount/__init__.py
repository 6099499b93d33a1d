"""Exact counts of d-polytopes with d+3 vertices.

Thin wrapper over the C++ core. Counts are Python ints of arbitrary size.
"""

try:
    from ._galecount import (
        achiral_series,
        brute_force_counts,
        constants,
        oriented_polytope_series,
        polytope_series,
        table,
        verify,
    )
except ImportError:  # running against a bare build tree
    from _galecount import (
        achiral_series,
        brute_force_counts,
        constants,
        oriented_polytope_series,
        polytope_series,
        table,
        verify,
    )

__all__ = [
    "achiral_series",
    "brute_force_counts",
    "constants",
    "oriented_polytope_series",
    "polytope_series",
    "table",
    "verify",
]
