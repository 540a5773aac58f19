"""Bundle values, exact Nash-welfare comparison, and profile rendering.

Nash social welfare is the geometric mean of the agents' bundle values.
Two profiles with the same agent count order exactly as their plain
products of half-unit values do (the 1/n root and the 2^n scale factor
are monotone), so all solver comparisons use arbitrary-precision integer
products and stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from math import prod

from .instance import Allocation, Instance

#: profile values are half-units; a profile is sorted ascending
UtilityProfile = tuple[int, ...]


@dataclass(frozen=True)
class NswProduct:
    """Exact comparison key for the NSW of a profile of ``n`` bundles."""

    product: int
    n: int

    @classmethod
    def of(cls, profile) -> "NswProduct":
        return cls(product=prod(profile), n=len(profile))


def bundle_values(inst: Instance, alloc: Allocation) -> UtilityProfile:
    """Per-agent bundle totals in halves, sorted ascending."""
    totals = [0] * inst.n
    for g, owner in enumerate(alloc.owners):
        totals[owner] += inst.good_value(owner, g)
    return tuple(sorted(totals))


def nsw_compare(p, q) -> int:
    """-1, 0, or 1 as the NSW of profile ``p`` compares to ``q``.

    Both profiles must have the same number of bundles.
    """
    if len(p) != len(q):
        raise ValueError("profiles have different agent counts")
    a, b = prod(p), prod(q)
    return (a > b) - (a < b)


def format_half(value: int) -> str:
    """Render a half-unit value as a decimal: 6 -> '3', 5 -> '2.5'."""
    return str(value // 2) if value % 2 == 0 else f"{value // 2}.5"


def nsw_display(profile) -> str:
    """Geometric mean of the profile (in units) with 6 decimal places.

    Display only; solver decisions never consume this value.
    """
    n = len(profile)
    product = prod(profile)
    if product == 0 or n == 0:
        return "0.000000"
    with localcontext() as ctx:
        ctx.prec = 50
        mean = Decimal(product) ** (Decimal(1) / Decimal(n)) / 2
        return str(mean.quantize(Decimal("0.000001"), rounding=ROUND_HALF_EVEN))


def factorization_check(min_value: int, profile):
    """Cross-check bundle counts of a three-value profile against its sum.

    ``profile`` may only contain ``min_value``, ``min_value + 1`` and
    ``min_value + 2`` (halves).  The counts of the lowest and highest
    value are determined by the profile size, its total, and the count of
    the middle value; this verifies the counted values against the derived
    ones.  Returns ``None`` when they agree, otherwise a pair
    ``(counted, derived)`` of ``(n_low, n_mid, n_high)`` triples.

    Raises ValueError if ``min_value`` is zero or a value falls outside
    the allowed set.
    """
    if min_value <= 0:
        raise ValueError("min_value must be positive")
    allowed = {min_value, min_value + 1, min_value + 2}
    for v in profile:
        if v not in allowed:
            raise ValueError(f"profile value {v} outside {sorted(allowed)}")
    n_low = sum(1 for v in profile if v == min_value)
    n_mid = sum(1 for v in profile if v == min_value + 1)
    n_high = sum(1 for v in profile if v == min_value + 2)
    count = len(profile)
    total = sum(profile)
    derived_high = (total - count * min_value - n_mid) // 2
    derived_low = (count * (min_value + 2) - total - n_mid) // 2
    if derived_high == n_high and derived_low == n_low:
        return None
    return ((n_low, n_mid, n_high), (derived_low, n_mid, derived_high))
