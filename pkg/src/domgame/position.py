"""Game positions for the Maker-Maker domination game.

A position is a graph plus a claim per vertex; a pointed position adds
whose turn it is.  Alice always denotes the player trying to dominate
first from the starting position; outcomes collapse to {A, D} because the
second player can never win from a fresh board.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .graph import Graph


class IllegalStateError(ValueError):
    """Both players dominate at once: unreachable through legal play."""


class IllegalMoveError(ValueError):
    """Claiming a vertex that is already claimed or out of range."""


class Player(enum.Enum):
    A = "A"
    B = "B"

    @property
    def other(self) -> "Player":
        return Player.B if self is Player.A else Player.A


class Claim(enum.Enum):
    UNCLAIMED = "-"
    ALICE = "A"
    BOB = "B"


CLAIM_OF_PLAYER = {Player.A: Claim.ALICE, Player.B: Claim.BOB}


class Outcome(enum.Enum):
    """Two-valued outcome, ordered A > D."""

    A = "A"
    D = "D"

    def __lt__(self, other: "Outcome") -> bool:
        return self is Outcome.D and other is Outcome.A

    def __le__(self, other: "Outcome") -> bool:
        return self is other or self < other

    def __gt__(self, other: "Outcome") -> bool:
        return other < self

    def __ge__(self, other: "Outcome") -> bool:
        return self is other or other < self


class GameValue(enum.IntEnum):
    """Three-valued search result ordered from Alice's perspective."""

    BOB_WIN = 0
    DRAW = 1
    ALICE_WIN = 2

    @property
    def outcome(self) -> Outcome:
        return Outcome.A if self is GameValue.ALICE_WIN else Outcome.D


class GameStatus(enum.Enum):
    ONGOING = "ongoing"
    ALICE_DOMINATES = "alice-dominates"
    BOB_DOMINATES = "bob-dominates"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class Position:
    graph: Graph
    claims: tuple[Claim, ...]

    @staticmethod
    def fresh(graph: Graph) -> "Position":
        return Position(graph, (Claim.UNCLAIMED,) * graph.vertex_count)

    @staticmethod
    def from_sets(graph: Graph, alice: Iterable[int] = (), bob: Iterable[int] = ()) -> "Position":
        claims = [Claim.UNCLAIMED] * graph.vertex_count
        for v in alice:
            claims[v] = Claim.ALICE
        for v in bob:
            if claims[v] is Claim.ALICE:
                raise ValueError(f"vertex {v} claimed by both players")
            claims[v] = Claim.BOB
        return Position(graph, tuple(claims))

    def __post_init__(self) -> None:
        if len(self.claims) != self.graph.vertex_count:
            raise ValueError("claims length must equal vertex_count")

    def claimed_by(self, player: Player) -> list[int]:
        want = CLAIM_OF_PLAYER[player]
        return [v for v, c in enumerate(self.claims) if c is want]

    def unclaimed(self) -> list[int]:
        return [v for v, c in enumerate(self.claims) if c is Claim.UNCLAIMED]


@dataclass(frozen=True)
class PointedPosition:
    position: Position
    turn: Player

    @staticmethod
    def fresh(graph: Graph, turn: Player = Player.A) -> "PointedPosition":
        return PointedPosition(Position.fresh(graph), turn)


def dominates(p: Position, player: Player) -> bool:
    """True iff every vertex lies in the closed neighborhood of a claim of `player`."""
    g = p.graph
    want = CLAIM_OF_PLAYER[player]
    covered = [False] * g.vertex_count
    for v, c in enumerate(p.claims):
        if c is want:
            covered[v] = True
            for w in g.adjacency[v]:
                covered[w] = True
    return all(covered)


def legal_moves(pp: PointedPosition) -> list[int]:
    return pp.position.unclaimed()


def apply_move(pp: PointedPosition, v: int) -> PointedPosition:
    p = pp.position
    if not 0 <= v < p.graph.vertex_count:
        raise IllegalMoveError(f"vertex {v} out of range")
    if p.claims[v] is not Claim.UNCLAIMED:
        raise IllegalMoveError(f"vertex {v} already claimed")
    claims = list(p.claims)
    claims[v] = CLAIM_OF_PLAYER[pp.turn]
    return PointedPosition(Position(p.graph, tuple(claims)), pp.turn.other)


def game_status(pp: PointedPosition) -> GameStatus:
    p = pp.position
    if p.graph.vertex_count == 0:
        # vacuous domination; credited to the player to move so that an
        # isolated-edge reduction to the empty board stays a win for the mover
        return GameStatus.ALICE_DOMINATES if pp.turn is Player.A else GameStatus.BOB_DOMINATES
    dom_a = dominates(p, Player.A)
    dom_b = dominates(p, Player.B)
    if dom_a and dom_b:
        raise IllegalStateError("both players dominate simultaneously")
    if dom_a:
        return GameStatus.ALICE_DOMINATES
    if dom_b:
        return GameStatus.BOB_DOMINATES
    if not p.unclaimed():
        return GameStatus.EXHAUSTED
    return GameStatus.ONGOING


class TrapKind(enum.Enum):
    A_TRAP = "A"
    B_TRAP = "B"


class Trap(NamedTuple):
    vertex: int
    witness: int


def find_traps(p: Position, kind: TrapKind) -> list[Trap]:
    """All unclaimed v with a witness w whose neighborhood forces v.

    A-trap: N[w] minus Bob's vertices is exactly {v}; B-trap symmetric with
    Alice's vertices removed.  Each trap vertex is reported once with its
    lowest-id witness.
    """
    g = p.graph
    removed = Claim.BOB if kind is TrapKind.A_TRAP else Claim.ALICE
    hits: dict[int, int] = {}
    for w in range(g.vertex_count):
        survivors = [u for u in (w, *g.adjacency[w]) if p.claims[u] is not removed]
        if len(survivors) == 1 and p.claims[survivors[0]] is Claim.UNCLAIMED:
            v = survivors[0]
            if v not in hits or w < hits[v]:
                hits[v] = w
    return [Trap(v, hits[v]) for v in sorted(hits)]


@dataclass(frozen=True)
class BoundedPathSpec:
    """Bounded path [left o^n right]^U with Bob-dominating pendants at U."""

    left: Player
    n: int
    right: Player
    pendants: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")
        if not all(1 <= i <= self.n for i in self.pendants):
            raise ValueError("pendant indices must lie in 1..n")
        if self.right is Player.B and self.n in self.pendants:
            raise ValueError("index n is redundant when the right bound is Bob's")
        if self.left is Player.B and 1 in self.pendants:
            raise ValueError("index 1 is redundant when the left bound is Bob's")


def build_bounded_path(spec: BoundedPathSpec) -> Position:
    """Materialize the spec as a position with dense vertex ids.

    Layout: main path 0..n+3 maps to v_{-1}..v_{n+2}; pendant pairs
    (x_i, y_i) are appended in increasing i, x_i adjacent to v_i.
    """
    n = spec.n
    main = n + 4
    edges = [(i, i + 1) for i in range(main - 1)]
    alice: list[int] = []
    bob: list[int] = []

    def claim(vertex: int, player: Player) -> None:
        (alice if player is Player.A else bob).append(vertex)

    claim(1, spec.left)           # v_0
    claim(0, spec.left.other)     # v_{-1}
    claim(n + 2, spec.right)      # v_{n+1}
    claim(n + 3, spec.right.other)  # v_{n+2}
    nxt = main
    for i in sorted(spec.pendants):
        x, y = nxt, nxt + 1
        edges.append((i + 1, x))
        edges.append((x, y))
        bob.append(x)
        alice.append(y)
        nxt += 2
    g = Graph.from_edges(nxt, edges)
    return Position.from_sets(g, alice, bob)


def derive_bounded_path_spec(p: Position) -> BoundedPathSpec:
    """Invert build_bounded_path; raises if `p` was not built by it."""
    g = p.graph
    if g.vertex_count < 5:
        raise ValueError("not a bounded-path position")
    i = 0
    while i + 1 < g.vertex_count and (i + 1) in g.adjacency[i]:
        i += 1
    n = i + 1 - 4
    if n < 1 or (g.vertex_count - (n + 4)) % 2 != 0:
        raise ValueError("not a bounded-path position")
    pendants = []
    for x in range(n + 4, g.vertex_count, 2):
        anchors = [w for w in g.adjacency[x] if w != x + 1]
        if len(anchors) != 1:
            raise ValueError("not a bounded-path position")
        pendants.append(anchors[0] - 1)
    left = Player.A if p.claims[1] is Claim.ALICE else Player.B
    right = Player.A if p.claims[n + 2] is Claim.ALICE else Player.B
    spec = BoundedPathSpec(left, n, right, frozenset(pendants))
    if build_bounded_path(spec) != p:
        raise ValueError("not a bounded-path position")
    return spec


def union_positions(ps: Sequence[Position]) -> tuple[Position, list[int]]:
    """Disjoint union; returns the combined position and per-part id offsets."""
    offsets: list[int] = []
    total = 0
    edges: list[tuple[int, int]] = []
    claims: list[Claim] = []
    for p in ps:
        offsets.append(total)
        edges.extend((u + total, v + total) for u, v in p.graph.edges())
        claims.extend(p.claims)
        total += p.graph.vertex_count
    g = Graph.from_edges(total, edges)
    return Position(g, tuple(claims)), offsets


def split_on_cutset(
    p: Position, v1: Iterable[int], v2: Iterable[int], x: Iterable[int]
) -> tuple[Position, Position]:
    """Split on a fully claimed, doubly dominated cutset X.

    Returns the induced subpositions on V1 + X and V2 + X (X duplicated),
    each re-based to dense ids.
    """
    g = p.graph
    s1, s2, sx = set(v1), set(v2), set(x)
    all_vs = set(range(g.vertex_count))
    if s1 | s2 | sx != all_vs or s1 & s2 or s1 & sx or s2 & sx:
        raise ValueError("V1, V2, X must partition the vertex set")
    for u in s1:
        if any(w in s2 for w in g.adjacency[u]):
            raise ValueError("edges between V1 and V2 are not allowed")
    for u in sx:
        if p.claims[u] is Claim.UNCLAIMED:
            raise ValueError("cutset X must be fully claimed")
        nbhd = (u, *g.adjacency[u])
        if not any(p.claims[w] is Claim.ALICE and w in sx for w in nbhd):
            raise ValueError(f"cutset vertex {u} not dominated by Alice within X")
        if not any(p.claims[w] is Claim.BOB and w in sx for w in nbhd):
            raise ValueError(f"cutset vertex {u} not dominated by Bob within X")

    def induced(keep: set[int]) -> Position:
        sub, remap = g.induced_subgraph(sorted(keep))
        claims = [Claim.UNCLAIMED] * sub.vertex_count
        for old, new in remap.items():
            claims[new] = p.claims[old]
        return Position(sub, tuple(claims))

    return induced(s1 | sx), induced(s2 | sx)
