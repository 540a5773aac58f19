"""Exhaustive reference implementations for testing the solver.

Plain enumeration with hard size guards: a truncated oracle would be
worse than none, so oversized inputs raise instead of degrading.
"""

from __future__ import annotations

from math import prod

from .errors import OracleTooLarge
from .instance import LIGHT_VALUE, Allocation, Instance
from .matching import ParityProblem, allowed_degrees

OPTIMAL_GUARD = 10**8
PARITY_GUARD = 10**7


def _choices(inst: Instance) -> list[tuple[int, ...]]:
    everyone = tuple(range(inst.n))
    return [
        inst.eligible[g] if inst.heavy[g] else everyone for g in range(inst.m)
    ]


def _guard(sizes, limit) -> None:
    states = 1
    for s in sizes:
        states *= s
        if states > limit:
            raise OracleTooLarge(f"search space exceeds {limit} states")


def brute_force_optimal(inst: Instance, guard: int = OPTIMAL_GUARD):
    """Best profile over every restricted allocation, with one witness.

    Returns ``(profile, allocation)``; the profile is sorted ascending in
    halves.  Ties keep the first witness in enumeration order.
    """
    choices = _choices(inst)
    _guard((len(c) for c in choices), guard)
    weights = [
        inst.heavy_value if inst.heavy[g] else LIGHT_VALUE for g in range(inst.m)
    ]
    values = [0] * inst.n
    owners = [0] * inst.m
    best = {"product": -1, "profile": None, "owners": None}
    m = inst.m

    def explore(g: int) -> None:
        if g == m:
            p = prod(values)
            if p > best["product"]:
                best["product"] = p
                best["profile"] = tuple(sorted(values))
                best["owners"] = tuple(owners)
            return
        w = weights[g]
        for a in choices[g]:
            values[a] += w
            owners[g] = a
            explore(g + 1)
            values[a] -= w

    explore(0)
    return best["profile"], Allocation(owners=best["owners"])


def brute_force_lexmin(inst: Instance, guard: int = OPTIMAL_GUARD) -> tuple[int, ...]:
    """Minimum sorted-descending ownership-count vector over every
    restricted placement of the heavy goods."""
    heavy = inst.heavy_goods
    _guard((len(inst.eligible[g]) for g in heavy), guard)
    counts = [0] * inst.n
    best: list[tuple[int, ...] | None] = [None]

    def explore(pos: int) -> None:
        if pos == len(heavy):
            candidate = tuple(sorted(counts, reverse=True))
            if best[0] is None or candidate < best[0]:
                best[0] = candidate
            return
        for a in inst.eligible[heavy[pos]]:
            counts[a] += 1
            explore(pos + 1)
            counts[a] -= 1

    explore(0)
    return best[0]


def brute_force_parity(problem: ParityProblem, guard: int = PARITY_GUARD) -> bool:
    """Feasibility of a parity problem by trying every good-to-agent map."""
    if any(not agents for agents in problem.eligible):
        return False
    _guard((len(agents) for agents in problem.eligible), guard)
    degree = [0] * len(problem.caps)

    def explore(g: int) -> bool:
        if g == problem.n_goods:
            return all(
                degree[a] in allowed_degrees(cap)
                for a, cap in enumerate(problem.caps)
            )
        for a in problem.eligible[g]:
            degree[a] += 1
            if explore(g + 1):
                return True
            degree[a] -= 1
        return False

    return explore(0)
