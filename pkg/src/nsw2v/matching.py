"""General-graph maximum matching and parity-constrained assignment.

A *parity problem* asks for an assignment of goods to eligible agents in
which every good is placed exactly once and every agent receives a number
of goods that is at most its cap and congruent to the cap modulo 2.  It
reduces to perfect matching in a general graph: each agent becomes a row
of cap-many slot nodes plus absorber pairs that can soak up slots two at
a time, so the externally matched slot count ranges exactly over the
allowed degree set.  The matching itself is found with a blossom
(odd-cycle contracting) search, O(V^3), which is plenty for the bundle
sizes this package handles.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: ``n`` vertices, edges as (u, v) with u < v."""

    n: int
    edges: tuple[tuple[int, int], ...]


def make_graph(n: int, edges) -> Graph:
    """Normalize an edge iterable: orient u < v, drop duplicates, validate."""
    seen = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range")
        seen.add((min(u, v), max(u, v)))
    return Graph(n=n, edges=tuple(sorted(seen)))


def adjacency(graph: Graph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(graph.n)]
    for u, v in graph.edges:
        adj[u].append(v)
        adj[v].append(u)
    for row in adj:
        row.sort()
    return adj


def matching_mates(graph: Graph) -> list[int]:
    """Mate of every vertex in a maximum matching (-1 when unmatched).

    Blossom search: grow alternating trees from free vertices, contract
    odd cycles on the fly via the ``base`` array, augment when another
    free vertex is reached.  Deterministic for a given vertex order.
    """
    n = graph.n
    adj = adjacency(graph)
    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))

    def lowest_common_base(a: int, b: int) -> int:
        marked = [False] * n
        while True:
            a = base[a]
            marked[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if marked[b]:
                return b
            b = parent[match[b]]

    def mark_blossom_path(v: int, stem: int, child: int, in_blossom: list[bool]):
        while base[v] != stem:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def grow_tree(root: int) -> bool:
        used = [False] * n
        for i in range(n):
            parent[i] = -1
            base[i] = i
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # odd cycle: contract the blossom around its base
                    stem = lowest_common_base(v, to)
                    in_blossom = [False] * n
                    mark_blossom_path(v, stem, to, in_blossom)
                    mark_blossom_path(to, stem, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = stem
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # augment along the tree path ending at `to`
                        u = to
                        while u != -1:
                            pv = parent[u]
                            nxt = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            grow_tree(v)
    return match


def max_matching(graph: Graph) -> tuple[tuple[int, int], ...]:
    """Edges of a maximum-cardinality matching, sorted, u < v."""
    mates = matching_mates(graph)
    return tuple(
        (v, mates[v]) for v in range(graph.n) if mates[v] > v
    )


@dataclass(frozen=True)
class ParityProblem:
    """Goods need exactly one eligible agent; agent degrees are capped
    with fixed parity.

    Agent ``a`` may receive any count in ``allowed_degrees(caps[a])``,
    i.e. at most ``caps[a]`` with the same parity.  ``eligible[g]`` lists
    the agents good ``g`` may go to.
    """

    n_goods: int
    caps: tuple[int, ...]
    eligible: tuple[tuple[int, ...], ...]


def allowed_degrees(cap: int) -> range:
    """The degree set encoded by a cap: {cap mod 2, ..., cap - 2, cap}."""
    return range(cap % 2, cap + 1, 2)


@dataclass(frozen=True)
class ParityReduction:
    """Perfect-matching encoding of a parity problem plus its decoder."""

    problem: ParityProblem
    graph: Graph
    slot_agent: dict[int, int]

    def decode(self, mates: list[int]) -> dict[int, int] | None:
        """Map a mate array back to a good->agent assignment.

        Returns None unless the matching is perfect.  The decoded
        assignment is checked against the original eligibility and
        degree sets before being returned.
        """
        if any(mate == -1 for mate in mates):
            return None
        assignment: dict[int, int] = {}
        degree = [0] * len(self.problem.caps)
        for g in range(self.problem.n_goods):
            agent = self.slot_agent[mates[g]]
            assignment[g] = agent
            degree[agent] += 1
        for g, agent in assignment.items():
            assert agent in self.problem.eligible[g]
        for a, cap in enumerate(self.problem.caps):
            assert degree[a] in allowed_degrees(cap)
        return assignment


def reduce_parity(problem: ParityProblem) -> ParityReduction:
    """Build the slot/absorber gadget graph.

    Agent caps are first clamped to the number of incident eligible
    goods (stepping down in twos to preserve parity) whenever that keeps
    an allowed degree available; this only shrinks the gadget and never
    changes feasibility.
    """
    n_agents = len(problem.caps)
    incident = [0] * n_agents
    for agents in problem.eligible:
        for a in agents:
            incident[a] += 1
    node = problem.n_goods
    edges: list[tuple[int, int]] = []
    slot_agent: dict[int, int] = {}
    slots: list[list[int]] = []
    for a, cap in enumerate(problem.caps):
        parity = cap % 2
        r = cap
        if incident[a] < r and incident[a] >= parity:
            r = incident[a] - (incident[a] - parity) % 2
        agent_slots = list(range(node, node + r))
        node += r
        for s in agent_slots:
            slot_agent[s] = a
        for _ in range((r - parity) // 2):
            c1, c2 = node, node + 1
            node += 2
            edges.append((c1, c2))
            for s in agent_slots:
                edges.append((c1, s))
                edges.append((c2, s))
        slots.append(agent_slots)
    for g, agents in enumerate(problem.eligible):
        for a in agents:
            for s in slots[a]:
                edges.append((g, s))
    bound = problem.n_goods + sum(2 * cap - cap % 2 for cap in problem.caps)
    assert node <= bound
    return ParityReduction(
        problem=problem,
        graph=make_graph(node, edges),
        slot_agent=slot_agent,
    )


def solve_parity(problem: ParityProblem) -> dict[int, int] | None:
    """Assignment satisfying the parity problem, or None when infeasible."""
    if any(not agents for agents in problem.eligible):
        return None
    reduction = reduce_parity(problem)
    mates = matching_mates(reduction.graph)
    return reduction.decode(mates)
