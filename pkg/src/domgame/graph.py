"""Undirected simple graphs and the forest matching primitives.

Vertices are dense integer ids ``0..n-1``; adjacency lists are kept
sorted so every derived structure is deterministic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class NotAForestError(ValueError):
    """Raised when an operation that requires a forest gets a cyclic graph."""


class GraphClass(enum.Enum):
    FOREST = "forest"
    SINGLE_PATH = "single-path"
    SINGLE_CYCLE = "single-cycle"
    OTHER = "other"


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph with sorted adjacency lists."""

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    edge_count: int = field(default=0)

    @staticmethod
    def from_edges(vertex_count: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        neighbor_sets: list[set[int]] = [set() for _ in range(vertex_count)]
        m = 0
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range for n={vertex_count}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in neighbor_sets[u]:
                raise ValueError(f"duplicate edge ({u},{v})")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
            m += 1
        adjacency = tuple(tuple(sorted(s)) for s in neighbor_sets)
        return Graph(vertex_count, adjacency, m)

    def __post_init__(self) -> None:
        n = self.vertex_count
        if len(self.adjacency) != n:
            raise ValueError("adjacency length must equal vertex_count")
        neighbor_sets = [frozenset(nbrs) for nbrs in self.adjacency]
        deg_sum = 0
        for u, nbrs in enumerate(self.adjacency):
            prev = -1
            for v in nbrs:
                if not 0 <= v < n:
                    raise ValueError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise ValueError(f"self-loop at vertex {u}")
                if v <= prev:
                    raise ValueError(f"adjacency of {u} not sorted/unique")
                if u not in neighbor_sets[v]:
                    raise ValueError(f"asymmetric edge ({u},{v})")
                prev = v
            deg_sum += len(nbrs)
        if deg_sum % 2 != 0 or deg_sum // 2 != self.edge_count:
            object.__setattr__(self, "edge_count", deg_sum // 2)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(self.adjacency[v]) | {v}

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.vertex_count) for v in self.adjacency[u] if u < v]

    def induced_subgraph(self, vertices: Sequence[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph on `vertices` plus the old-id -> new-id map."""
        keep = sorted(set(vertices))
        remap = {old: new for new, old in enumerate(keep)}
        edges = [
            (remap[u], remap[v])
            for u in keep
            for v in self.adjacency[u]
            if u < v and v in remap
        ]
        return Graph.from_edges(len(keep), edges), remap

    def is_forest(self) -> bool:
        return self.edge_count == self.vertex_count - len(connected_components(self))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def connected_components(g: Graph) -> list[list[int]]:
    """Maximal connected vertex sets, each sorted, ordered by smallest member."""
    seen = [False] * g.vertex_count
    components: list[list[int]] = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        components.append(sorted(comp))
    return components


def classify_graph(g: Graph) -> GraphClass:
    """Dispatch class for the solve pipeline.

    Single paths and cycles take precedence over the generic forest label
    so the closed-form solvers get first pick.
    """
    n = g.vertex_count
    comps = connected_components(g)
    connected = len(comps) == 1
    degrees = [g.degree(v) for v in range(n)]
    if connected:
        if n <= 2:
            return GraphClass.SINGLE_PATH
        if all(d == 2 for d in degrees):
            return GraphClass.SINGLE_CYCLE
        if sorted(degrees)[:2] == [1, 1] and all(d == 2 for d in sorted(degrees)[2:]):
            return GraphClass.SINGLE_PATH
    if g.edge_count == n - len(comps):
        return GraphClass.FOREST
    return GraphClass.OTHER


def _require_forest(g: Graph) -> None:
    if not g.is_forest():
        raise NotAForestError("input graph contains a cycle")


def forest_has_perfect_matching(g: Graph) -> bool:
    """Greedy leaf matching; exact on forests.

    Match each leaf with its unique neighbor, delete both, repeat.  Fails
    as soon as an isolated vertex appears.
    """
    _require_forest(g)
    n = g.vertex_count
    if n % 2 != 0:
        return False
    degree = [g.degree(v) for v in range(n)]
    alive = [True] * n
    remaining = n
    leaves = [v for v in range(n) if degree[v] == 1]
    isolated = sum(1 for v in range(n) if degree[v] == 0)
    if isolated:
        return False
    while leaves:
        leaf = leaves.pop()
        if not alive[leaf] or degree[leaf] != 1:
            continue
        mate = next(v for v in g.adjacency[leaf] if alive[v])
        alive[leaf] = alive[mate] = False
        remaining -= 2
        for w in g.adjacency[mate]:
            if alive[w]:
                degree[w] -= 1
                if degree[w] == 1:
                    leaves.append(w)
                elif degree[w] == 0:
                    return False
        degree[leaf] = degree[mate] = 0
    return remaining == 0


def forest_matching_covering(g: Graph, excluded: int, required: Iterable[int]) -> bool:
    """Is there a matching avoiding `excluded` that covers every `required` vertex?

    Two-state subtree DP (root matched / root free) over each component of
    ``g - excluded``, rooted at the lowest-id vertex for determinism.
    """
    _require_forest(g)
    if not 0 <= excluded < g.vertex_count:
        raise ValueError(f"excluded vertex {excluded} out of range")
    required_set = set(required)
    closed = g.closed_neighborhood(excluded)
    bad = required_set & closed
    if bad:
        raise ValueError(f"required vertices {sorted(bad)} lie inside N[excluded]")

    alive = [v for v in range(g.vertex_count) if v != excluded]
    sub, remap = g.induced_subgraph(alive)
    req = {remap[v] for v in required_set}

    for comp in connected_components(sub):
        root = comp[0]
        matched, free = _covering_dp(sub, root, req)
        if not (matched or free):
            return False
    return True


def _covering_dp(g: Graph, root: int, required: set[int]) -> tuple[bool, bool]:
    """Post-order DP returning (root matched feasible, root unmatched feasible).

    "Feasible" means every required vertex in the subtree is matched; in the
    unmatched state the root itself must not be required.
    """
    order: list[tuple[int, int]] = []
    stack = [(root, -1)]
    while stack:
        v, parent = stack.pop()
        order.append((v, parent))
        for w in g.adjacency[v]:
            if w != parent:
                stack.append((w, v))
    matched: dict[int, bool] = {}
    free_waived: dict[int, bool] = {}  # root unmatched, its own requiredness waived
    for v, parent in reversed(order):
        children = [w for w in g.adjacency[v] if w != parent]
        # all children settled without help from v
        all_ok = all(matched[c] or (free_waived[c] and c not in required) for c in children)
        can_match = False
        for c in children:
            others_ok = all(
                matched[d] or (free_waived[d] and d not in required)
                for d in children
                if d != c
            )
            if free_waived[c] and others_ok:
                can_match = True
                break
        matched[v] = can_match
        free_waived[v] = all_ok
    return matched[root], free_waived[root] and root not in required
