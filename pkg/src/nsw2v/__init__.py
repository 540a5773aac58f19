"""Exact Nash social welfare maximization for two-value instances.

Goods are worth 1 or a fixed half-integer s (> 1) per agent; heavy goods
go only to agents valuing them at s.  The solver spreads the heavy goods
lexicographically-minimally, adds the light goods greedily, then upgrades
the small bundles via parity matching to maximize the NSW exactly.
"""

from .instance import (
    Allocation,
    Instance,
    parse_allocation,
    parse_instance,
    serialize_allocation,
    serialize_instance,
    validate_allocation,
)
from .solver import SolveResult, solve
from .valuation import bundle_values, nsw_compare, nsw_display

__version__ = "0.1.0"

__all__ = [
    "Allocation",
    "Instance",
    "SolveResult",
    "bundle_values",
    "nsw_compare",
    "nsw_display",
    "parse_allocation",
    "parse_instance",
    "serialize_allocation",
    "serialize_instance",
    "solve",
    "validate_allocation",
    "__version__",
]
