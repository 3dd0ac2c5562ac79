"""HTTP session service for the interactive explorer.

Sessions live in memory only, capped in number with least-recently-used
eviction. Every response carries the full current state (document, foliage,
components, history, watched target and its feasibility), so clients stay
stateless. Mutations within one session are serialized by a per-session lock;
reads are unrestricted.
"""

from __future__ import annotations

import secrets
import threading
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Literal

from fastapi import FastAPI, HTTPException, Response
from pydantic import BaseModel

from .foliage import foliage_decomposition
from .formats import GraphDocument
from .graph import Graph
from .search import BellPairTarget, SearchLimitExceeded, can_extract_bell_pairs

DEFAULT_MAX_SESSIONS = 64
DEFAULT_CHECK_BUDGET = 250_000


class CreateRequest(BaseModel):
    graph: dict


class StepRequest(BaseModel):
    op: Literal["lc", "measure", "cz", "undo"]
    vertex: int | None = None
    basis: str | None = None
    neighbor: int | None = None
    u: int | None = None
    v: int | None = None


class TargetRequest(BaseModel):
    pair_a: tuple[int, int] | None = None
    pair_b: tuple[int, int] | None = None


@dataclass
class _Session:
    id: str
    history: list[tuple[Graph, str]]
    target: BellPairTarget | None = None
    lock: threading.Lock = field(default_factory=threading.Lock)
    status_cache: dict = field(default_factory=dict)

    @property
    def current(self) -> Graph:
        return self.history[-1][0]


class _SessionStore:
    def __init__(self, cap: int):
        self._cap = cap
        self._lock = threading.Lock()
        self._sessions: OrderedDict[str, _Session] = OrderedDict()

    def add(self, session: _Session) -> None:
        with self._lock:
            self._sessions[session.id] = session
            while len(self._sessions) > self._cap:
                self._sessions.popitem(last=False)

    def get(self, sid: str) -> _Session:
        with self._lock:
            session = self._sessions.get(sid)
            if session is None:
                raise HTTPException(status_code=404, detail=f"unknown session {sid}")
            self._sessions.move_to_end(sid)
            return session

    def remove(self, sid: str) -> None:
        with self._lock:
            if self._sessions.pop(sid, None) is None:
                raise HTTPException(status_code=404, detail=f"unknown session {sid}")


def _target_status(session: _Session, g: Graph, budget: int) -> str:
    if session.target is None:
        return "none"
    key = (g, session.target)
    cached = session.status_cache.get(key)
    if cached is not None:
        return cached
    if not all(g.has_vertex(v) for v in session.target.labels):
        status = "infeasible"
    else:
        try:
            report = can_extract_bell_pairs(g, session.target, budget=budget)
            status = "feasible" if report.decision else "infeasible"
        except SearchLimitExceeded:
            status = "unknown_budget"
    session.status_cache[key] = status
    return status


def _view(session: _Session, budget: int) -> dict:
    g = session.current
    dec = foliage_decomposition(g)
    return {
        "id": session.id,
        "document": GraphDocument.from_graph(g).to_dict(),
        "foliage": {
            "leaves": sorted(dec.leaves),
            "axils": sorted(dec.axils),
            "twins": sorted(list(p) for p in dec.twins),
        },
        "components": [list(c) for c in g.connected_components()],
        "history": [desc for _, desc in session.history],
        "history_length": len(session.history),
        "target": session.target.as_dict() if session.target else None,
        "target_status": _target_status(session, g, budget),
    }


def _apply_step(g: Graph, req: StepRequest) -> tuple[Graph, str]:
    if req.op == "lc":
        if req.vertex is None:
            raise ValueError("lc needs a vertex")
        return g.local_complement(req.vertex), f"lc {req.vertex}"
    if req.op == "measure":
        if req.vertex is None or req.basis is None:
            raise ValueError("measure needs a vertex and a basis")
        out = g.measure(req.vertex, req.basis, req.neighbor)
        desc = f"measure {req.vertex} {req.basis.upper()}"
        if req.neighbor is not None:
            desc += f" w={req.neighbor}"
        return out, desc
    if req.op == "cz":
        if req.u is None or req.v is None:
            raise ValueError("cz needs two vertices u and v")
        return g.toggle_cz(req.u, req.v), f"cz {req.u} {req.v}"
    raise ValueError(f"unknown step op {req.op!r}")


def create_app(
    max_sessions: int = DEFAULT_MAX_SESSIONS,
    check_budget: int = DEFAULT_CHECK_BUDGET,
) -> FastAPI:
    app = FastAPI(title="lcgraph explorer service")
    store = _SessionStore(max_sessions)

    @app.post("/sessions", status_code=201)
    def create_session(req: CreateRequest) -> dict:
        try:
            g = GraphDocument.from_dict(req.graph).to_graph()
        except ValueError as e:
            raise HTTPException(status_code=400, detail=str(e))
        session = _Session(id=secrets.token_hex(8), history=[(g, "init")])
        store.add(session)
        return _view(session, check_budget)

    @app.get("/sessions/{sid}")
    def get_session(sid: str) -> dict:
        session = store.get(sid)
        return _view(session, check_budget)

    @app.post("/sessions/{sid}/step")
    def step(sid: str, req: StepRequest) -> dict:
        session = store.get(sid)
        with session.lock:
            if req.op == "undo":
                if len(session.history) <= 1:
                    raise HTTPException(status_code=400, detail="nothing to undo")
                session.history.pop()
            else:
                try:
                    g, desc = _apply_step(session.current, req)
                except ValueError as e:
                    raise HTTPException(status_code=400, detail=str(e))
                session.history.append((g, desc))
            return _view(session, check_budget)

    @app.post("/sessions/{sid}/target")
    def set_target(sid: str, req: TargetRequest) -> dict:
        session = store.get(sid)
        with session.lock:
            if req.pair_a is None and req.pair_b is None:
                session.target = None
            elif req.pair_a is None or req.pair_b is None:
                raise HTTPException(status_code=400, detail="target needs both pairs (or neither)")
            else:
                try:
                    session.target = BellPairTarget(req.pair_a, req.pair_b)
                except ValueError as e:
                    raise HTTPException(status_code=400, detail=str(e))
            return _view(session, check_budget)

    @app.delete("/sessions/{sid}", status_code=204)
    def delete_session(sid: str) -> Response:
        store.remove(sid)
        return Response(status_code=204)

    return app


app = create_app()
