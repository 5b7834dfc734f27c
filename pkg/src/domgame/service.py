"""Session-based HTTP API for playing against the engine.

Sessions live in memory; each holds its own engine (the memo persists for
the whole game) and a lock so concurrent move posts on one session are
serialized.  The engine's deterministic tie-breaking makes replies
reproducible for identical human input.
"""

from __future__ import annotations

import secrets
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .engine import Engine
from .instances import InstanceParseError, parse_instance
from .position import (
    Claim,
    GameStatus,
    Player,
    PointedPosition,
    apply_move,
    game_status,
    legal_moves,
)

DEFAULT_GUARD = 14


class ApiError(Exception):
    def __init__(self, status_code: int, code: str, message: str):
        super().__init__(message)
        self.status_code = status_code
        self.code = code
        self.message = message


@dataclass
class Session:
    id: str
    engine: Engine
    pointed: PointedPosition
    human_plays: Player
    history: list[tuple[str, int]] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def status(self) -> GameStatus:
        return game_status(self.pointed)

    def state(self) -> dict:
        p = self.pointed.position
        status = self.status
        out = {
            "n": p.graph.vertex_count,
            "edges": [[u, v] for u, v in p.graph.edges()],
            "claims": [c.value for c in p.claims],
            "turn": self.pointed.turn.value,
            "status": status.value,
            "human": self.human_plays.value,
            "history": [[player, vertex] for player, vertex in self.history],
        }
        if status in (GameStatus.ALICE_DOMINATES, GameStatus.BOB_DOMINATES):
            winner = Player.A if status is GameStatus.ALICE_DOMINATES else Player.B
            out["dominatingSet"] = p.claimed_by(winner)
        return out

    def engine_move_if_due(self) -> None:
        if self.status is GameStatus.ONGOING and self.pointed.turn is not self.human_plays:
            v = self.engine.best_move(self.pointed)
            self.pointed = apply_move(self.pointed, v)
            self.history.append((self.human_plays.other.value, v))


class SessionStore:
    def __init__(self, max_unclaimed: int = DEFAULT_GUARD):
        self.max_unclaimed = max_unclaimed
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, graph_text: str, human: Player) -> Session:
        try:
            inst = parse_instance(graph_text)
        except InstanceParseError as exc:
            raise ApiError(400, "bad-instance", str(exc))
        pointed = inst.pointed()
        unclaimed = len(pointed.position.unclaimed())
        if unclaimed > self.max_unclaimed:
            raise ApiError(
                400,
                "resource-guard",
                f"{unclaimed} unclaimed vertices exceed the guard of {self.max_unclaimed}",
            )
        session = Session(
            id=secrets.token_urlsafe(12),
            engine=Engine(inst.graph),
            pointed=pointed,
            human_plays=human,
        )
        session.engine_move_if_due()
        with self._lock:
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise ApiError(404, "unknown-game", f"no session {session_id!r}")
        return session


class CreateGameBody(BaseModel):
    graph: str
    human: str = "A"


class MoveBody(BaseModel):
    vertex: int


def create_app(max_unclaimed: int = DEFAULT_GUARD, static_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="domgame")
    store = SessionStore(max_unclaimed=max_unclaimed)
    app.state.store = store

    @app.exception_handler(ApiError)
    async def handle_api_error(_request, exc: ApiError):
        return JSONResponse(status_code=exc.status_code, content={"code": exc.code, "message": exc.message})

    @app.post("/api/games")
    def create_game(body: CreateGameBody):
        if body.human not in ("A", "B"):
            raise ApiError(400, "bad-human", "human must be 'A' or 'B'")
        session = store.create(body.graph, Player(body.human))
        return {"id": session.id, "state": session.state()}

    @app.get("/api/games/{session_id}")
    def get_game(session_id: str):
        return store.get(session_id).state()

    @app.post("/api/games/{session_id}/moves")
    def post_move(session_id: str, body: MoveBody):
        session = store.get(session_id)
        with session.lock:
            status = session.status
            if status is not GameStatus.ONGOING:
                raise ApiError(409, "game-over", f"game is over: {status.value}")
            if session.pointed.turn is not session.human_plays:
                raise ApiError(409, "out-of-turn", "it is the engine's turn")
            v = body.vertex
            p = session.pointed.position
            if not 0 <= v < p.graph.vertex_count or p.claims[v] is not Claim.UNCLAIMED:
                raise ApiError(400, "illegal-vertex", f"vertex {v} is not an unclaimed vertex")
            session.pointed = apply_move(session.pointed, v)
            session.history.append((session.human_plays.value, v))
            session.engine_move_if_due()
            return session.state()

    @app.get("/api/games/{session_id}/analysis")
    def get_analysis(session_id: str):
        session = store.get(session_id)
        with session.lock:
            if session.status is not GameStatus.ONGOING:
                return []
            return [
                {"vertex": ev.vertex, "outcome": ev.value.outcome.value, "plies": ev.plies_to_end}
                for ev in session.engine.evaluate_moves(session.pointed)
            ]

    ui_dir = Path(static_dir) if static_dir else Path(__file__).resolve().parents[2] / "frontend" / "dist"
    if ui_dir.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")
    return app
