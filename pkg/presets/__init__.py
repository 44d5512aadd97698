"""
Fixture tables for FamCake instances.

Each function returns plain district tables (names, weights, per-district
values) that ``src.instance.gen_preset`` turns into measures.
"""

from .worked_example import get_land_table, get_nonadditive_table
from .lower_bound_tables import get_weighted_gap_table, get_interleaved_table

__all__ = [
    "get_land_table",
    "get_nonadditive_table",
    "get_weighted_gap_table",
    "get_interleaved_table",
]
