"""Lexicographically minimal spread of the heavy goods.

Heavy goods move between agents along alternating paths: an agent hands
off one of its owned heavy goods to another agent eligible for it, that
agent hands off one of its own, and so on.  Augmenting such a path moves
exactly one heavy good from the path's first agent to its last.  The
allocation is lexmin when no agent can shed a good to an agent owning at
least two fewer: then the ownership counts, sorted descending, are
lexicographically minimal over all restricted allocations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .instance import Instance


@dataclass(frozen=True)
class AlternatingPath:
    """Vertices agent, good, agent, ..., agent.

    Edges alternate between owned heavy edges (agent to its good) and
    non-owned eligible edges (good to another agent labelling it H).
    Augmentation shifts every good on the path to the next agent, moving
    one unit of ownership from the first agent to the last.
    """

    vertices: tuple[int, ...]

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def target(self) -> int:
        return self.vertices[-1]


def heavy_degrees(inst: Instance, owner: dict[int, int]) -> list[int]:
    """Number of heavy goods owned per agent."""
    degrees = [0] * inst.n
    for agent in owner.values():
        degrees[agent] += 1
    return degrees


def initial_heavy_allocation(inst: Instance) -> dict[int, int]:
    """Every heavy good to its lowest-indexed eligible agent."""
    return {g: inst.eligible[g][0] for g in inst.heavy_goods}


def owned_goods(inst: Instance, owner: dict[int, int]) -> list[list[int]]:
    """Per agent, the sorted heavy goods it owns."""
    out: list[list[int]] = [[] for _ in range(inst.n)]
    for g in sorted(owner):
        out[owner[g]].append(g)
    return out


def alternating_search(sources, owned_of, eligible_of, is_target):
    """Layered BFS over alternating paths starting with an owned edge.

    ``owned_of(agent)`` yields the agent's owned heavy goods and
    ``eligible_of(good)`` the agents that may receive the good.  Returns
    ``(hit, parents)`` where ``hit`` is the lowest-indexed target in the
    shallowest layer containing one (None when unreachable) and
    ``parents`` maps each discovered agent to its ``(agent, good)``
    predecessor step.
    """
    parents: dict[int, tuple[int, int] | None] = {s: None for s in sources}
    layer = sorted(parents)
    while layer:
        fresh = []
        for a in layer:
            for g in owned_of(a):
                for b in eligible_of(g):
                    if b not in parents:
                        parents[b] = (a, g)
                        fresh.append(b)
        hits = sorted(b for b in fresh if is_target(b))
        if hits:
            return hits[0], parents
        layer = fresh
    return None, parents


def path_from_parents(parents, end: int) -> AlternatingPath:
    vertices = [end]
    step = parents[end]
    while step is not None:
        agent, good = step
        vertices.append(good)
        vertices.append(agent)
        step = parents[agent]
    return AlternatingPath(vertices=tuple(reversed(vertices)))


def find_rebalance_path(
    inst: Instance, owner: dict[int, int], source: int
) -> AlternatingPath | None:
    """Shortest alternating path from ``source`` to an agent owning at
    least two heavy goods fewer, lowest target index on ties."""
    degrees = heavy_degrees(inst, owner)
    limit = degrees[source] - 2
    if limit < 0:
        return None
    owned = owned_goods(inst, owner)
    hit, parents = alternating_search(
        [source],
        owned.__getitem__,
        lambda g: inst.eligible[g],
        lambda b: degrees[b] <= limit,
    )
    if hit is None:
        return None
    return path_from_parents(parents, hit)


def augment(owner: dict[int, int], path: AlternatingPath) -> None:
    """Shift every good on the path to the following agent (in place)."""
    vertices = path.vertices
    for i in range(1, len(vertices), 2):
        owner[vertices[i]] = vertices[i + 1]


def lexmin(
    inst: Instance,
    initial: dict[int, int] | None = None,
    potential_trace: list[int] | None = None,
) -> dict[int, int]:
    """Rebalance until no agent can shed a heavy good to one owning at
    least two fewer.

    Agents are scanned in decreasing ownership order (ties by index) and
    the first rebalance path found is augmented.  When ``potential_trace``
    is given, the sum of squared ownership counts is appended after the
    start and after every augmentation; it decreases strictly, which
    bounds the number of rounds.
    """
    owner = dict(initial) if initial is not None else initial_heavy_allocation(inst)
    if potential_trace is not None:
        degrees = heavy_degrees(inst, owner)
        potential_trace.append(sum(d * d for d in degrees))
    while True:
        degrees = heavy_degrees(inst, owner)
        order = sorted(range(inst.n), key=lambda a: (-degrees[a], a))
        for agent in order:
            path = find_rebalance_path(inst, owner, agent)
            if path is not None:
                augment(owner, path)
                if potential_trace is not None:
                    fresh = heavy_degrees(inst, owner)
                    potential_trace.append(sum(d * d for d in fresh))
                break
        else:
            return owner


def is_lexmin(inst: Instance, owner: dict[int, int]) -> bool:
    return all(
        find_rebalance_path(inst, owner, agent) is None for agent in range(inst.n)
    )


@dataclass(frozen=True)
class LevelSets:
    """Agents grouped by heavy-good count in a lexmin allocation.

    ``full[k]`` owns exactly ``k`` goods (and was not claimed by
    ``fringe[k + 1]``); ``fringe[k]`` owns ``k - 1`` goods and is
    reachable from ``full[k]`` by an alternating path starting with an
    owned edge, i.e. could be handed a good by the level above.
    """

    top: int
    full: dict[int, frozenset[int]]
    fringe: dict[int, frozenset[int]]


def level_sets(inst: Instance, owner: dict[int, int]) -> LevelSets:
    """Compute the level sets top-down.  Requires a lexmin allocation."""
    if not is_lexmin(inst, owner):
        raise ValueError("owner map is not lexmin")
    degrees = heavy_degrees(inst, owner)
    owned = owned_goods(inst, owner)
    top = max(degrees)
    full: dict[int, frozenset[int]] = {}
    fringe: dict[int, frozenset[int]] = {top + 1: frozenset()}
    for level in range(top, -1, -1):
        full[level] = frozenset(
            a for a in range(inst.n) if degrees[a] == level
        ) - fringe[level + 1]
        _, parents = alternating_search(
            sorted(full[level]),
            owned.__getitem__,
            lambda g: inst.eligible[g],
            lambda b: False,
        )
        fringe[level] = frozenset(
            a for a in parents if degrees[a] == level - 1
        )
    return LevelSets(top=top, full=full, fringe=fringe)
