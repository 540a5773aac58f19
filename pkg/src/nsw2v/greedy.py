"""Greedy placement of light goods onto minimum-value bundles."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .instance import LIGHT_VALUE, Allocation, Instance
from .lexmin import heavy_degrees, level_sets


@dataclass(frozen=True)
class GreedyResult:
    """Allocation after the greedy pass plus the quantities derived from it.

    ``min_value`` is the smallest bundle value (halves).  Bundles worth at
    most ``min_value + 2`` are *small*; the rest are heavy-only *large*
    bundles whose heavy count is at least ``heavy_cutoff``, the smallest
    count whose pure-heavy value exceeds ``min_value + 2``.
    """

    alloc: Allocation
    heavy_owner: dict[int, int]
    values: tuple[int, ...]
    lights_added: tuple[int, ...]
    min_value: int
    heavy_cutoff: int
    small_agents: tuple[int, ...]
    small_goods: tuple[int, ...]


def greedy_fill(inst: Instance, heavy_owner: dict[int, int]) -> GreedyResult:
    """Add light goods one at a time to the currently smallest bundle.

    ``heavy_owner`` must be a lexmin allocation of the heavy goods.  Ties
    go to the lowest agent index, so the result is deterministic.
    """
    degrees = heavy_degrees(inst, heavy_owner)
    values = [d * inst.heavy_value for d in degrees]
    lights_added = [0] * inst.n
    owners = [0] * inst.m
    for g, a in heavy_owner.items():
        owners[g] = a
    heap = [(values[a], a) for a in range(inst.n)]
    heapq.heapify(heap)
    for g in inst.light_goods:
        while True:
            value, a = heapq.heappop(heap)
            if value == values[a]:
                break
        owners[g] = a
        values[a] += LIGHT_VALUE
        lights_added[a] += 1
        heapq.heappush(heap, (values[a], a))
    min_value = min(values)
    heavy_cutoff = (min_value + 2) // inst.heavy_value + 1
    small_agents = tuple(a for a in range(inst.n) if values[a] <= min_value + 2)
    small_set = set(small_agents)
    small_goods = tuple(g for g in range(inst.m) if owners[g] in small_set)
    return GreedyResult(
        alloc=Allocation(owners=tuple(owners)),
        heavy_owner=dict(heavy_owner),
        values=tuple(values),
        lights_added=tuple(lights_added),
        min_value=min_value,
        heavy_cutoff=heavy_cutoff,
        small_agents=small_agents,
        small_goods=small_goods,
    )


def post_greedy_checks(inst: Instance, result: GreedyResult) -> str | None:
    """Verify the structural claims about a greedy result.

    Returns None when everything holds, else the first violation found:
    every bundle value is small or a pure-heavy multiple at or above the
    cutoff; light goods sit only in small bundles; agents one good short
    of the cutoff level that could be handed one are small and received
    at most ``floor_units`` light goods.
    """
    mv = result.min_value
    small_set = set(result.small_agents)
    for a, value in enumerate(result.values):
        if value <= mv + 2:
            if value not in (mv, mv + 1, mv + 2):
                return f"agent {a}: small bundle value {value} outside allowed set"
        else:
            if value % inst.heavy_value != 0:
                return f"agent {a}: large bundle value {value} is not heavy-only"
            if value // inst.heavy_value < result.heavy_cutoff:
                return f"agent {a}: large bundle below the heavy cutoff"
    for g in inst.light_goods:
        if result.alloc.owners[g] not in small_set:
            return f"good {g}: light good in a large bundle"
    levels = level_sets(inst, result.heavy_owner)
    for a in levels.fringe.get(result.heavy_cutoff, frozenset()):
        if a not in small_set:
            return f"agent {a}: cutoff fringe agent outside the small set"
        if result.lights_added[a] > inst.floor_units:
            return f"agent {a}: cutoff fringe agent got too many light goods"
    return None
