"""End-to-end pipeline: lexmin heavies, greedy lights, small-bundle upgrades."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation
from .greedy import GreedyResult, greedy_fill, post_greedy_checks
from .instance import Allocation, Instance, validate_allocation
from .lexmin import lexmin
from .optimizer import OptimizeTrace, optimize
from .valuation import bundle_values, factorization_check


@dataclass
class SolveStats:
    potential_trace: list[int]
    optimize_trace: OptimizeTrace
    greedy: GreedyResult


@dataclass
class SolveResult:
    allocation: Allocation
    profile: tuple[int, ...]
    min_value: int
    heavy_cutoff: int
    small_agents: tuple[int, ...]
    stats: SolveStats


def solve(inst: Instance, check: bool = False) -> SolveResult:
    """Compute an NSW-maximal restricted allocation.

    With ``check`` set, every cross-stage invariant is re-validated and a
    violation raises InvariantViolation instead of returning a result.
    """
    potential_trace: list[int] = []
    heavy_owner = lexmin(inst, potential_trace=potential_trace)
    greedy = greedy_fill(inst, heavy_owner)
    opt_trace = OptimizeTrace()
    allocation = optimize(inst, greedy, trace=opt_trace)
    result = SolveResult(
        allocation=allocation,
        profile=bundle_values(inst, allocation),
        min_value=greedy.min_value,
        heavy_cutoff=greedy.heavy_cutoff,
        small_agents=greedy.small_agents,
        stats=SolveStats(
            potential_trace=potential_trace,
            optimize_trace=opt_trace,
            greedy=greedy,
        ),
    )
    if check:
        problems = audit(inst, result)
        if problems:
            raise InvariantViolation("; ".join(problems))
    return result


def audit(inst: Instance, result: SolveResult) -> list[str]:
    """Re-validate the invariants of a finished solve.  Empty list = clean."""
    problems: list[str] = []
    violation = validate_allocation(inst, result.allocation)
    if violation:
        problems.append(violation)
    greedy = result.stats.greedy
    greedy_problem = post_greedy_checks(inst, greedy)
    if greedy_problem:
        problems.append(greedy_problem)
    trace = result.stats.potential_trace
    if any(b >= a for a, b in zip(trace, trace[1:])):
        problems.append("heavy rebalance potential failed to decrease")
    small = set(result.small_agents)
    mv = result.min_value
    totals = [0] * inst.n
    for g, owner in enumerate(result.allocation.owners):
        totals[owner] += inst.good_value(owner, g)
    small_profile = []
    small_in_range = True
    for a in range(inst.n):
        if a in small:
            small_profile.append(totals[a])
            if totals[a] not in (mv, mv + 1, mv + 2):
                small_in_range = False
                problems.append(f"agent {a}: small bundle value {totals[a]} out of range")
        elif totals[a] != greedy.values[a]:
            problems.append(f"agent {a}: large bundle changed value")
    for g in range(inst.m):
        if greedy.alloc.owners[g] not in small:
            if result.allocation.owners[g] != greedy.alloc.owners[g]:
                problems.append(f"good {g}: large bundle good moved")
    if sum(totals) != sum(greedy.values):
        problems.append("total value not conserved")
    heavy_small_before = sum(1 for g in greedy.small_goods if inst.heavy[g])
    heavy_small_after = sum(
        1
        for g in inst.heavy_goods
        if result.allocation.owners[g] in small
    )
    if heavy_small_before != heavy_small_after:
        problems.append("heavy-good count over the small bundles not conserved")
    if mv > 0 and small_profile and small_in_range:
        mismatch = factorization_check(mv, small_profile)
        if mismatch is not None:
            problems.append(f"profile factorization mismatch: {mismatch}")
    mids = result.stats.optimize_trace.mid_counts
    if any(b - a != 2 for a, b in zip(mids, mids[1:])):
        problems.append("an improvement did not add exactly two mid bundles")
    if 2 * result.stats.optimize_trace.improvements > inst.n:
        problems.append("too many improvement rounds")
    return problems
