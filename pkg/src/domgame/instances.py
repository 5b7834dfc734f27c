"""Instance file parsing, canonical serialization, and random generators.

File format: '#' comment lines; header ``p <n> <m>``; m edge lines
``e <u> <v>``; optional claim lines ``a <v>`` / ``b <v>``; optional turn
line ``t A|B`` (default A).  Vertex ids are 0-based integers below n.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph
from .position import Claim, Player, PointedPosition, Position


class InstanceParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class InstanceFile:
    graph: Graph
    claims: Optional[tuple[Claim, ...]] = None
    turn: Player = Player.A
    label_map: dict[int, int] = field(default_factory=dict)  # dense id -> original label

    def position(self) -> Position:
        if self.claims is None:
            return Position.fresh(self.graph)
        return Position(self.graph, self.claims)

    def pointed(self) -> PointedPosition:
        return PointedPosition(self.position(), self.turn)

    @property
    def has_claims(self) -> bool:
        return self.claims is not None and any(c is not Claim.UNCLAIMED for c in self.claims)


def parse_instance(text: str) -> InstanceFile:
    n: Optional[int] = None
    m_declared = 0
    edges: list[tuple[int, int]] = []
    claims: list[Claim] = []
    any_claim = False
    turn = Player.A
    turn_seen = False

    def want_vertex(token: str, line_no: int) -> int:
        try:
            v = int(token)
        except ValueError:
            raise InstanceParseError(line_no, f"not a vertex id: {token!r}")
        if n is None:
            raise InstanceParseError(line_no, "vertex line before 'p' header")
        if not 0 <= v < n:
            raise InstanceParseError(line_no, f"vertex id {v} out of range 0..{n - 1}")
        return v

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "p":
            if n is not None:
                raise InstanceParseError(line_no, "duplicate 'p' header")
            if len(fields) != 3:
                raise InstanceParseError(line_no, "expected 'p <n> <m>'")
            try:
                n, m_declared = int(fields[1]), int(fields[2])
            except ValueError:
                raise InstanceParseError(line_no, "n and m must be integers")
            if n < 0 or m_declared < 0:
                raise InstanceParseError(line_no, "n and m must be nonnegative")
            claims = [Claim.UNCLAIMED] * n
        elif kind == "e":
            if len(fields) != 3:
                raise InstanceParseError(line_no, "expected 'e <u> <v>'")
            u, v = want_vertex(fields[1], line_no), want_vertex(fields[2], line_no)
            if u == v:
                raise InstanceParseError(line_no, f"self-loop at {u}")
            if (min(u, v), max(u, v)) in {(min(a, b), max(a, b)) for a, b in edges}:
                raise InstanceParseError(line_no, f"duplicate edge ({u},{v})")
            edges.append((u, v))
        elif kind in ("a", "b"):
            if len(fields) != 2:
                raise InstanceParseError(line_no, f"expected '{kind} <v>'")
            v = want_vertex(fields[1], line_no)
            if claims[v] is not Claim.UNCLAIMED:
                raise InstanceParseError(line_no, f"vertex {v} claimed twice")
            claims[v] = Claim.ALICE if kind == "a" else Claim.BOB
            any_claim = True
        elif kind == "t":
            if turn_seen:
                raise InstanceParseError(line_no, "duplicate 't' line")
            if len(fields) != 2 or fields[1] not in ("A", "B"):
                raise InstanceParseError(line_no, "expected 't A' or 't B'")
            turn = Player.A if fields[1] == "A" else Player.B
            turn_seen = True
        else:
            raise InstanceParseError(line_no, f"unknown directive {kind!r}")

    if n is None:
        raise InstanceParseError(0, "missing 'p' header")
    if len(edges) != m_declared:
        raise InstanceParseError(0, f"header declares {m_declared} edges, found {len(edges)}")
    graph = Graph.from_edges(n, edges)
    return InstanceFile(
        graph=graph,
        claims=tuple(claims) if any_claim else None,
        turn=turn,
        label_map={v: v for v in range(n)},
    )


def serialize_instance(inst: InstanceFile) -> str:
    g = inst.graph
    lines = [f"p {g.vertex_count} {g.edge_count}"]
    lines += [f"e {u} {v}" for u, v in g.edges()]
    if inst.claims is not None:
        lines += [f"a {v}" for v, c in enumerate(inst.claims) if c is Claim.ALICE]
        lines += [f"b {v}" for v, c in enumerate(inst.claims) if c is Claim.BOB]
    lines.append(f"t {inst.turn.value}")
    return "\n".join(lines) + "\n"


def generate_random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree from a random parent-code (Pruefer) sequence."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    return tree_from_rng(n, rng)


def tree_from_rng(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Graph.from_edges(n, prufer_decode(seq, n))


def prufer_decode(seq: list[int], n: int) -> list[tuple[int, int]]:
    """Edges of the labeled tree encoded by a Pruefer sequence of length n-2."""
    import heapq

    if len(seq) != n - 2:
        raise ValueError("sequence length must be n - 2")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((leaves[0], leaves[1]))
    return edges


def generate_random_forest(total: int, components: int, seed: int) -> Graph:
    """Random forest: `components` random trees with sizes summing to `total`."""
    if components < 1 or total < components:
        raise ValueError("need at least one vertex per component")
    rng = random.Random(seed)
    return forest_from_rng(total, components, rng)


def forest_from_rng(total: int, components: int, rng: random.Random) -> Graph:
    cuts = sorted(rng.sample(range(1, total), components - 1)) if components > 1 else []
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [total])]
    edges: list[tuple[int, int]] = []
    offset = 0
    for s in sizes:
        sub = tree_from_rng(s, rng)
        edges += [(u + offset, v + offset) for u, v in sub.edges()]
        offset += s
    return Graph.from_edges(total, edges)
