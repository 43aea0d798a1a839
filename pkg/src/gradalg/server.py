"""HTTP session service: mutation sessions over the bundled models.

State is authoritative on the server; every response carries the full
session state so a client can rerender from scratch after each call.
"""

import threading
import uuid
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .errors import BadParameters, GradalgError, IndexOutOfRange, UnknownSession
from .laurent import ClusterState, degree_of, initial_state, mutate_cluster
from .models import dynkin_seed, grassmannian_seed, markov_seed
from .seedcore import (
    GradedSeed,
    mutate_graded_seed,
    seed_from_document,
    seed_to_document,
    standard_gradings,
)


@dataclass
class Session:
    id: str
    model: str
    initial: GradedSeed  # gradings here fix the degree map once and for all
    graded: GradedSeed
    state: ClusterState
    history: List[Tuple[int, GradedSeed, ClusterState]] = field(default_factory=list)
    seen: Dict[str, dict] = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock)


app = FastAPI(title="gradalg sessions")
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["*"],
    allow_headers=["*"],
)

_sessions: Dict[str, Session] = {}
_registry = threading.Lock()


@app.exception_handler(GradalgError)
def _domain_error(request, exc):
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(UnknownSession)
def _unknown_session(request, exc):
    return JSONResponse(status_code=404, content={"detail": str(exc)})


def _build_graded(payload: dict) -> Tuple[str, GradedSeed]:
    if "seed" in payload:
        return "custom", seed_from_document(payload["seed"])
    model = payload.get("model")
    if model == "markov":
        return "markov", markov_seed()
    if model == "dynkin":
        kind = str(payload.get("kind", "A"))
        rank = payload.get("rank")
        if not isinstance(rank, int):
            raise BadParameters("dynkin model needs an integer 'rank'")
        return f"{kind}{rank}", standard_gradings(dynkin_seed(kind, rank))
    if model == "grassmannian":
        k, n = payload.get("k"), payload.get("n")
        if not isinstance(k, int) or not isinstance(n, int):
            raise BadParameters("grassmannian model needs integers 'k' and 'n'")
        return f"Gr({k},{n})", grassmannian_seed(k, n)
    raise BadParameters(
        f"unknown model {model!r}; expected markov, dynkin, grassmannian, "
        "or a 'seed' document"
    )


def _variable_degrees(session: Session, poly) -> List[List[int]]:
    return [list(degree_of(poly, g)) for g in session.initial.gradings]


def _note_cluster(session: Session) -> None:
    step = len(session.history)
    for poly in session.state.variables:
        key = poly.serialize()
        if key not in session.seen:
            session.seen[key] = {
                "laurent": key,
                "degrees": _variable_degrees(session, poly),
                "first_seen": step,
            }


def _payload(session: Session) -> dict:
    return {
        "id": session.id,
        "model": session.model,
        "seed": seed_to_document(session.graded),
        "cluster": [p.serialize() for p in session.state.variables],
        "degrees": [
            [list(degree_of(p, g)) for p in session.state.variables]
            for g in session.initial.gradings
        ],
        "history": [k for k, _, _ in session.history],
        "history_length": len(session.history),
    }


def _get(sid: str) -> Session:
    with _registry:
        session = _sessions.get(sid)
    if session is None:
        raise UnknownSession(f"no session {sid!r}")
    return session


@app.post("/session")
def create_session(payload: dict):
    name, graded = _build_graded(payload)
    session = Session(
        id=uuid.uuid4().hex,
        model=name,
        initial=graded,
        graded=graded,
        state=initial_state(graded.seed),
    )
    _note_cluster(session)
    with _registry:
        _sessions[session.id] = session
    return {"id": session.id, "state": _payload(session)}


@app.get("/session/{sid}")
def read_session(sid: str):
    session = _get(sid)
    with session.lock:
        return _payload(session)


@app.post("/session/{sid}/mutate")
def mutate_session(sid: str, payload: dict):
    session = _get(sid)
    k = payload.get("k")
    if isinstance(k, bool) or not isinstance(k, int):
        raise IndexOutOfRange("body must carry an integer 'k'")
    with session.lock:
        if not 1 <= k <= session.graded.seed.r:
            raise IndexOutOfRange(
                f"k = {k} is not an exchangeable index (1..{session.graded.seed.r})"
            )
        session.history.append((k, session.graded, session.state))
        session.graded = mutate_graded_seed(session.graded, k)
        session.state = mutate_cluster(session.state, k)
        _note_cluster(session)
        return _payload(session)


@app.post("/session/{sid}/undo")
def undo_session(sid: str):
    session = _get(sid)
    with session.lock:
        if not session.history:
            raise IndexOutOfRange("nothing to undo")
        _, graded, state = session.history.pop()
        session.graded = graded
        session.state = state
        return _payload(session)


@app.get("/session/{sid}/variables")
def session_variables(sid: str):
    session = _get(sid)
    with session.lock:
        return {"variables": list(session.seen.values())}
