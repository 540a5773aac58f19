"""Reallocation of the small bundles to maximize mid-value bundles.

After the greedy pass the small bundles are worth ``min_value``,
``min_value + 1`` or ``min_value + 2`` halves (call the owner classes
low, mid, and high).  With the bundle count and total value fixed, more
mid bundles means a strictly larger NSW, so the optimizer repeatedly
upgrades one low and one high bundle (or two of one kind plus a
compensating third bundle) to mid.  Each candidate upgrade is a parity
problem over the small heavy goods; infeasibility of all candidates
certifies optimality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import InvariantViolation
from .greedy import GreedyResult
from .instance import Allocation, Instance
from .lexmin import alternating_search, path_from_parents
from .matching import ParityProblem, solve_parity


@dataclass(frozen=True)
class HeavyCountMaxima:
    """Most heavy goods a bundle of value ``min_value + d`` may contain,
    for d of 0, 1, and 2 halves.  None when no count fits the value."""

    low: int | None
    mid: int | None
    high: int | None

    def all_defined(self) -> bool:
        return None not in (self.low, self.mid, self.high)


def _max_count(target: int, heavy_value: int) -> int | None:
    # largest r with r * heavy_value <= target and the remainder an even
    # number of halves (a whole count of light goods)
    r = target // heavy_value
    if (r - target) % 2:
        r -= 1
    return r if r >= 0 else None


def heavy_count_maxima(min_value: int, heavy_value: int) -> HeavyCountMaxima:
    maxima = HeavyCountMaxima(
        low=_max_count(min_value, heavy_value),
        mid=_max_count(min_value + 1, heavy_value),
        high=_max_count(min_value + 2, heavy_value),
    )
    if maxima.all_defined():
        maxima_case(min_value, heavy_value, maxima)
    return maxima


def maxima_case(min_value: int, heavy_value: int, maxima: HeavyCountMaxima) -> int:
    """Classify the relation between the three maxima (all defined).

    Case 1: the high value is an exact multiple of the heavy value, then
    low = mid - 1 and high = mid + 1.  Otherwise low = high, sitting one
    above mid (case 2) when the high value exceeds ``(mid + 1)`` heavies,
    else one below (case 3).  Raises when the identity fails.
    """
    low, mid, high = maxima.low, maxima.mid, maxima.high
    top = min_value + 2
    if top % heavy_value == 0:
        if low == mid - 1 and high == mid + 1:
            return 1
        raise InvariantViolation(f"maxima case 1 violated: {maxima}")
    if top > (mid + 1) * heavy_value:
        if low == high == mid + 1:
            return 2
        raise InvariantViolation(f"maxima case 2 violated: {maxima}")
    if low == high == mid - 1:
        return 3
    raise InvariantViolation(f"maxima case 3 violated: {maxima}")


def allowed_sets(maxima: HeavyCountMaxima):
    """Permissible heavy counts per value class: at most the maximum,
    same parity.  Empty when the value is unreachable."""

    def spread(r: int | None) -> tuple[int, ...]:
        return tuple(range(r % 2, r + 1, 2)) if r is not None else ()

    return spread(maxima.low), spread(maxima.mid), spread(maxima.high)


class InjectOutcome(Enum):
    IMPROVED = "improved"
    CREATED = "created-light-high"
    OPTIMAL = "proven-optimal"


@dataclass
class OptimizeTrace:
    """Progress record: mid-bundle counts after the greedy pass and after
    each improvement, plus the inject-phase outcomes seen."""

    mid_counts: list[int] = field(default_factory=list)
    improvements: int = 0
    inject_events: list[str] = field(default_factory=list)


@dataclass
class SmallBundleState:
    """Mutable working copy of the small bundles.

    Heavy goods are tracked by explicit owner; light goods are fungible
    (worth one unit to everyone) so only per-agent counts are kept.
    """

    inst: Instance
    min_value: int
    agents: tuple[int, ...]
    heavy_goods: tuple[int, ...]
    heavy_owner: dict[int, int]
    light_count: dict[int, int]
    small_eligible: dict[int, tuple[int, ...]]

    @classmethod
    def from_greedy(cls, inst: Instance, greedy: GreedyResult) -> "SmallBundleState":
        small = set(greedy.small_agents)
        heavy_goods = tuple(g for g in greedy.small_goods if inst.heavy[g])
        heavy_owner = {g: greedy.alloc.owners[g] for g in heavy_goods}
        light_count = {a: 0 for a in greedy.small_agents}
        for g in inst.light_goods:
            owner = greedy.alloc.owners[g]
            if owner not in small:
                raise InvariantViolation(f"light good {g} outside the small bundles")
            light_count[owner] += 1
        small_eligible = {
            g: tuple(a for a in inst.eligible[g] if a in small) for g in heavy_goods
        }
        return cls(
            inst=inst,
            min_value=greedy.min_value,
            agents=tuple(greedy.small_agents),
            heavy_goods=heavy_goods,
            heavy_owner=dict(heavy_owner),
            light_count=light_count,
            small_eligible=small_eligible,
        )

    def heavy_degree(self, agent: int) -> int:
        return sum(1 for owner in self.heavy_owner.values() if owner == agent)

    def value(self, agent: int) -> int:
        return (
            self.heavy_degree(agent) * self.inst.heavy_value
            + 2 * self.light_count[agent]
        )

    def classes(self):
        """Agents of value min, min + 1, min + 2, each sorted ascending."""
        low, mid, high = [], [], []
        for a in self.agents:
            v = self.value(a)
            if v == self.min_value:
                low.append(a)
            elif v == self.min_value + 1:
                mid.append(a)
            elif v == self.min_value + 2:
                high.append(a)
            else:
                raise InvariantViolation(f"agent {a}: value {v} outside small range")
        return tuple(low), tuple(mid), tuple(high)

    def owned_map(self) -> dict[int, list[int]]:
        owned: dict[int, list[int]] = {a: [] for a in self.agents}
        for g in self.heavy_goods:
            owned[self.heavy_owner[g]].append(g)
        return owned

    def mid_count(self) -> int:
        return sum(1 for a in self.agents if self.value(a) == self.min_value + 1)


def easy_case_optimal(state: SmallBundleState) -> bool:
    """With no low bundles or no high bundles the class counts are forced
    by the totals, so nothing can be improved."""
    low, _, high = state.classes()
    return not low or not high


def inject_light_into_high(state: SmallBundleState) -> InjectOutcome:
    """Break up an all-heavy high class, when possible.

    Precondition: low and high are both nonempty and every high bundle is
    heavy-only.  Searches alternating paths (over the small heavy goods)
    from high owners.  Reaching a low owner turns both endpoints into mid
    bundles (IMPROVED).  Reaching a mid owner with more than
    ``floor_units`` light goods swaps their values and leaves a high
    bundle containing a light good (CREATED).  If no such path exists the
    current allocation is optimal.
    """
    low, mid, high = state.classes()
    if not low or not high:
        raise ValueError("inject needs both low and high bundles")
    if any(state.light_count[a] for a in high):
        raise ValueError("inject needs every high bundle heavy-only")
    floor_units = state.inst.floor_units
    owned = state.owned_map()
    low_set = set(low)
    rich_mid = {a for a in mid if state.light_count[a] > floor_units}
    for targets, outcome in ((low_set, InjectOutcome.IMPROVED),
                             (rich_mid, InjectOutcome.CREATED)):
        if not targets:
            continue
        for source in high:
            hit, parents = alternating_search(
                [source],
                owned.__getitem__,
                state.small_eligible.__getitem__,
                targets.__contains__,
            )
            if hit is None:
                continue
            path = path_from_parents(parents, hit)
            for i in range(1, len(path.vertices), 2):
                state.heavy_owner[path.vertices[i]] = path.vertices[i + 1]
            if state.light_count[hit] < floor_units:
                raise InvariantViolation("target bundle short of light goods")
            state.light_count[hit] -= floor_units
            state.light_count[source] += floor_units
            return outcome
    return InjectOutcome.OPTIMAL


def build_parity_problem(
    state: SmallBundleState, i: int, j: int, k: int | None = None
) -> ParityProblem:
    """Parity problem whose feasibility means (i, j) can both become mid.

    Mid owners and the pair keep/get mid-compatible heavy counts; ``k``
    (the compensating bundle when i and j sit in the same class) gets a
    low-compatible count even when its target value is high, which keeps
    at least one light good in it; every other owner stays in the count
    set of its current class.
    """
    low, mid, high = state.classes()
    low_set, high_set = set(low), set(high)
    pool = low_set | high_set
    if i == j or i not in pool or j not in pool:
        raise ValueError("pair must be two distinct low/high owners")
    if i in low_set and j in low_set:
        if k is None or k not in high_set or state.light_count[k] == 0:
            raise ValueError("low pair needs a high bundle containing a light good")
    elif i in high_set and j in high_set:
        if k is None or k not in low_set:
            raise ValueError("high pair needs a low bundle")
    elif k is not None:
        raise ValueError("mixed pair takes no third bundle")
    maxima = heavy_count_maxima(state.min_value, state.inst.heavy_value)
    _, n_mid, _ = allowed_sets(maxima)
    if not n_mid:
        raise ValueError("no heavy count is compatible with the mid value")
    special = {i, j}
    mid_set = set(mid)
    caps = []
    for a in state.agents:
        if a in special or a in mid_set:
            cap = maxima.mid
        elif a == k or a in low_set:
            cap = maxima.low
        else:
            cap = maxima.high
        if cap is None:
            raise InvariantViolation(f"agent {a}: no admissible heavy count")
        caps.append(cap)
    index = {a: pos for pos, a in enumerate(state.agents)}
    eligible = tuple(
        tuple(index[a] for a in state.small_eligible[g]) for g in state.heavy_goods
    )
    return ParityProblem(
        n_goods=len(state.heavy_goods),
        caps=tuple(caps),
        eligible=eligible,
    )


def apply_improvement(
    state: SmallBundleState,
    assignment: dict[int, int],
    i: int,
    j: int,
    k: int | None = None,
) -> None:
    """Install a parity solution and re-spread the light goods by target.

    Targets: i and j move to the mid value; k, when present, trades
    between the low and high values; everyone else keeps its value.  The
    light counts this forces are checked to be non-negative integers that
    use up exactly the available light goods.
    """
    mv = state.min_value
    targets = {a: state.value(a) for a in state.agents}
    mids_before = sum(1 for v in targets.values() if v == mv + 1)
    targets[i] = targets[j] = mv + 1
    if k is not None:
        targets[k] = mv if state.value(k) == mv + 2 else mv + 2
    if set(assignment) != set(state.heavy_goods):
        raise InvariantViolation("assignment must cover the small heavy goods")
    degree = {a: 0 for a in state.agents}
    for g, a in assignment.items():
        if a not in state.small_eligible[g]:
            raise InvariantViolation(f"good {g} assigned to ineligible agent {a}")
        degree[a] += 1
    lights = {}
    for a in state.agents:
        rest = targets[a] - degree[a] * state.inst.heavy_value
        if rest < 0 or rest % 2:
            raise InvariantViolation(
                f"agent {a}: heavy count {degree[a]} incompatible with target"
            )
        lights[a] = rest // 2
    if sum(lights.values()) != sum(state.light_count.values()):
        raise InvariantViolation("light goods not conserved")
    state.heavy_owner = dict(assignment)
    state.light_count = lights
    _, mid, _ = state.classes()  # raises if a value left the small range
    if len(mid) != mids_before + 2:
        raise InvariantViolation("improvement must add exactly two mid bundles")


def _sweep_once(state: SmallBundleState) -> bool:
    """Try every candidate pair (and compensating bundle) in index order;
    apply the first feasible improvement."""
    low, _, high = state.classes()
    low_set, high_set = set(low), set(high)
    pool = sorted(low + high)
    for pos, i in enumerate(pool):
        for j in pool[pos + 1:]:
            if i in low_set and j in low_set:
                third = [a for a in high if state.light_count[a] > 0]
            elif i in high_set and j in high_set:
                third = list(low)
            else:
                third = [None]
            for k in third:
                problem = build_parity_problem(state, i, j, k)
                solution = solve_parity(problem)
                if solution is None:
                    continue
                assignment = {
                    state.heavy_goods[g]: state.agents[a]
                    for g, a in solution.items()
                }
                apply_improvement(state, assignment, i, j, k)
                return True
    return False


def optimize(
    inst: Instance, greedy: GreedyResult, trace: OptimizeTrace | None = None
) -> Allocation:
    """Optimize the small bundles; the large bundles pass through untouched.

    Loop: stop when one of the low/high classes is empty; while every
    high bundle is heavy-only, inject a light good into the high class
    (or stop if that proves optimality); otherwise sweep the candidate
    pairs and apply the first feasible improvement, stopping when none
    is.  With fewer goods than agents some bundle stays empty in every
    allocation, all of which then tie at NSW zero, so the greedy result
    is returned as is.
    """
    if inst.m < inst.n:
        return greedy.alloc
    state = SmallBundleState.from_greedy(inst, greedy)
    maxima = heavy_count_maxima(greedy.min_value, inst.heavy_value)
    _, n_mid, _ = allowed_sets(maxima)
    if trace is not None:
        trace.mid_counts.append(state.mid_count())
    improvements = 0

    def record_improvement() -> None:
        nonlocal improvements
        improvements += 1
        if trace is not None:
            trace.mid_counts.append(state.mid_count())
        if 2 * improvements > inst.n:
            raise InvariantViolation("more improvements than bundles allow")

    while True:
        low, mid, high = state.classes()
        if not low or not high:
            break
        if all(state.light_count[a] == 0 for a in high):
            outcome = inject_light_into_high(state)
            if trace is not None:
                trace.inject_events.append(outcome.value)
            if outcome is InjectOutcome.OPTIMAL:
                break
            if outcome is InjectOutcome.IMPROVED:
                record_improvement()
            continue
        if not n_mid:
            break
        if not _sweep_once(state):
            break
        record_improvement()
    if trace is not None:
        trace.improvements = improvements
    return _final_allocation(inst, greedy, state)


def _final_allocation(
    inst: Instance, greedy: GreedyResult, state: SmallBundleState
) -> Allocation:
    owners = list(greedy.alloc.owners)
    for g, a in state.heavy_owner.items():
        owners[g] = a
    queue = list(inst.light_goods)
    pos = 0
    for a in state.agents:
        for _ in range(state.light_count[a]):
            owners[queue[pos]] = a
            pos += 1
    if pos != len(queue):
        raise InvariantViolation("light goods left unplaced")
    return Allocation(owners=tuple(owners))
