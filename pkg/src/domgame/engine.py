"""Exact memoized minimax over positions: the ground-truth oracle.

The search itself lives in a bitmask kernel with two interchangeable
implementations: a numba-compiled one (default) and a pure-Python twin,
selected by the ``DOMGAME_NO_NUMBA`` environment variable or by numba
being unavailable.  All pruning flags default off so the plain engine
stays a trustworthy oracle.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from . import _search_py
from .graph import Graph
from .position import (
    Claim,
    GameStatus,
    GameValue,
    Outcome,
    Player,
    PointedPosition,
    apply_move,
    game_status,
    legal_moves,
)

MAX_VERTICES = 60  # int64 bitmask kernels

if os.environ.get("DOMGAME_NO_NUMBA"):
    _search_nb = None
else:
    try:
        from . import _search_nb
    except ImportError:  # pragma: no cover - numba is a declared dependency
        _search_nb = None

ACTIVE_KERNEL = "python" if _search_nb is None else "numba"


class EngineError(RuntimeError):
    pass


class EngineCapacityError(EngineError):
    """Memo table hit its configured capacity; carries partial stats."""

    def __init__(self, stats: "EngineStats"):
        super().__init__(f"memo capacity exhausted after {stats.nodes_expanded} nodes")
        self.stats = stats


@dataclass(frozen=True)
class EngineConfig:
    prune_dominated_moves: bool = False
    prune_forced_traps: bool = False
    cutoff_double_trap: bool = False
    memo_capacity: int = 8_000_000

    def __post_init__(self) -> None:
        if self.memo_capacity <= 0:
            raise ValueError("memo_capacity must be positive")

    @property
    def flags(self) -> int:
        return (
            (_search_py.FLAG_PRUNE_DOMINATED if self.prune_dominated_moves else 0)
            | (_search_py.FLAG_FORCED_TRAP if self.prune_forced_traps else 0)
            | (_search_py.FLAG_DOUBLE_TRAP if self.cutoff_double_trap else 0)
        )


@dataclass
class EngineStats:
    nodes_expanded: int = 0
    memo_hits: int = 0
    memo_entries: int = 0


class MoveEval(NamedTuple):
    vertex: int
    value: GameValue
    plies_to_end: int


class Engine:
    """Search engine bound to one graph; the memo persists across calls."""

    def __init__(self, graph: Graph, config: Optional[EngineConfig] = None, *, kernel: Optional[str] = None):
        n = graph.vertex_count
        if n > MAX_VERTICES:
            raise EngineError(f"engine supports at most {MAX_VERTICES} vertices, got {n}")
        self.graph = graph
        self.config = config or EngineConfig()
        self.kernel_name = kernel or ACTIVE_KERNEL
        if self.kernel_name == "numba" and _search_nb is None:
            raise EngineError("numba kernel requested but unavailable")
        masks = [0] * n
        for v in range(n):
            m = 1 << v
            for w in graph.adjacency[v]:
                m |= 1 << w
            masks[v] = m
        self._full = (1 << n) - 1
        self._stats = np.zeros(2, dtype=np.int64)
        if self.kernel_name == "numba":
            self._nbh = np.array(masks, dtype=np.int64) if n else np.zeros(0, dtype=np.int64)
            self._memo = _search_nb.make_memo()
            self._kernel = _search_nb.solve_kernel
        else:
            self._nbh = masks
            self._memo = {}
            self._kernel = _search_py.solve_kernel

    @property
    def stats(self) -> EngineStats:
        return EngineStats(
            nodes_expanded=int(self._stats[0]),
            memo_hits=int(self._stats[1]),
            memo_entries=len(self._memo),
        )

    def _masks(self, pp: PointedPosition) -> tuple[int, int, int, int]:
        a = b = cov_a = cov_b = 0
        for v, c in enumerate(pp.position.claims):
            if c is Claim.ALICE:
                a |= 1 << v
                cov_a |= self._nbh[v]
            elif c is Claim.BOB:
                b |= 1 << v
                cov_b |= self._nbh[v]
        return a, b, int(cov_a), int(cov_b)

    def _check(self, pp: PointedPosition) -> GameStatus:
        if pp.position.graph != self.graph:
            raise EngineError("position is on a different graph than the engine")
        return game_status(pp)  # raises on double domination

    def solve_with_plies(self, pp: PointedPosition) -> tuple[GameValue, int]:
        self._check(pp)
        if self.graph.vertex_count == 0:
            return (GameValue.ALICE_WIN if pp.turn is Player.A else GameValue.BOB_WIN), 0
        a, b, cov_a, cov_b = self._masks(pp)
        turn = 0 if pp.turn is Player.A else 1
        res = self._kernel(
            a, b, cov_a, cov_b, turn,
            self._nbh, self.graph.vertex_count, self._full,
            self.config.flags, self.config.memo_capacity,
            self._memo, self._stats,
        )
        if res < 0:
            raise EngineCapacityError(self.stats)
        return GameValue(int(res) >> 8), int(res) & 255

    def solve(self, pp: PointedPosition) -> GameValue:
        return self.solve_with_plies(pp)[0]

    def outcome(self, pp: PointedPosition) -> Outcome:
        return self.solve(pp).outcome

    def evaluate_moves(self, pp: PointedPosition) -> list[MoveEval]:
        status = self._check(pp)
        if status is GameStatus.EXHAUSTED:
            return []
        if status is not GameStatus.ONGOING:
            raise EngineError(f"game is over: {status.value}")
        evals = []
        for v in legal_moves(pp):
            value, plies = self.solve_with_plies(apply_move(pp, v))
            evals.append(MoveEval(v, value, plies + 1))
        mover_max = pp.turn is Player.A

        def sort_key(ev: MoveEval):
            rank = int(ev.value) if mover_max else 2 - int(ev.value)
            tiebreak = ev.plies_to_end if rank == 2 else -ev.plies_to_end
            return (-rank, tiebreak, ev.vertex)

        evals.sort(key=sort_key)
        return evals

    def best_move(self, pp: PointedPosition) -> int:
        evals = self.evaluate_moves(pp)
        if not evals:
            raise EngineError("no legal moves")
        return evals[0].vertex


def solve(pp: PointedPosition, config: Optional[EngineConfig] = None) -> GameValue:
    return Engine(pp.position.graph, config).solve(pp)


def outcome(pp: PointedPosition) -> Outcome:
    return solve(pp).outcome


def evaluate_moves(pp: PointedPosition, config: Optional[EngineConfig] = None) -> list[MoveEval]:
    return Engine(pp.position.graph, config).evaluate_moves(pp)


def best_move(pp: PointedPosition, config: Optional[EngineConfig] = None) -> int:
    return Engine(pp.position.graph, config).best_move(pp)
