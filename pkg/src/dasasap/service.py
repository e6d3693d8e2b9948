"""HTTP facade: decision endpoints, session lifecycle, leaderboard.

The server is the single authority on validity; clients never decide
locally. Sessions live in memory with idle eviction (default one hour) and
only ranking entries persist, as line-delimited JSON behind RankingStore.

Environment knobs: DASASAP_PORT (default 8787), DASASAP_RANKINGS (ranking
file path), DASASAP_CORS_ORIGIN (allow-origin for the UI host).
"""

from __future__ import annotations

import os
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .diagram import decide, encode, middle_edges, middle_interlocks
from .engine import (
    Challenge,
    ChallengeKind,
    GameSession,
    Page,
    ScoreEntry,
    SessionMode,
    finish_session,
    learning_content,
    new_session,
    random_syllogism,
    submit_answer,
)
from .errors import (
    BadCount,
    DuplicateAnswer,
    MalformedSyllogism,
    MissingMiddleTerm,
    ParseError,
    SessionFinished,
    SessionNotComplete,
    UnknownChallenge,
    UnknownTopic,
)
from .model import Proposition, mnemonic_of_syllogism
from .notation import parse_proposition, parse_syllogism
from .rankings import RankingStore
from .semantics import oracle_decide

DEFAULT_PORT = 8787
DEFAULT_RANKINGS = "rankings.jsonl"
DEFAULT_SESSION_TTL = 3600.0


class DecideBody(BaseModel):
    syllogism: str


class InterlockBody(BaseModel):
    major: str
    minor: str


class SessionBody(BaseModel):
    mode: str = SessionMode.LEARNING_QUIZ.value
    seed: int | None = None
    count: int = 10


class AnswerBody(BaseModel):
    challengeId: str
    answer: str
    elapsedMs: int = 0


class FinishBody(BaseModel):
    player: str = "anonymous"
    abandon: bool = False


@dataclass
class _Slot:
    session: GameSession
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_access: float = field(default_factory=time.monotonic)


def _piece_json(p: Proposition) -> dict:
    return {"text": str(p), "diagram": encode(p).to_json()}


def _challenge_json(c: Challenge) -> dict:
    out = {
        "id": c.id,
        "kind": c.kind.value,
        "issuedAt": c.issued_at,
        "pieces": [_piece_json(p) for p in c.pieces],
    }
    if c.kind is ChallengeKind.JUDGE:
        # judged whole: show the full triple, conclusion piece included
        out["syllogism"] = str(c.syllogism)
        out["conclusionPiece"] = _piece_json(c.syllogism.conclusion)
    return out


def _session_json(s: GameSession) -> dict:
    return {
        "id": s.id,
        "mode": s.mode.value,
        "seed": s.seed,
        "state": s.state.value,
        "score": s.score,
        "streak": s.streak,
        "count": len(s.challenges),
        "answeredCount": len(s.answers),
        "challenges": [_challenge_json(c) for c in s.challenges],
        "answers": [
            {
                "challengeId": a.challenge_id,
                "answer": a.answer,
                "elapsedMs": a.elapsed_ms,
                "correct": a.correct,
                "delta": a.delta,
            }
            for a in s.answers
        ],
    }


def _page_json(page: Page) -> dict:
    out: dict = {
        "topic": page.topic,
        "title": page.title,
        "sections": [{"heading": s.heading, "body": s.body} for s in page.sections],
    }
    if page.quiz is not None:
        out["quiz"] = {
            "mode": page.quiz.mode.value,
            "defaultCount": page.quiz.default_count,
        }
    return out


def create_app(
    rankings_path: str | Path | None = None,
    cors_origin: str | None = None,
    session_ttl: float = DEFAULT_SESSION_TTL,
) -> FastAPI:
    """Build the service around one ranking file and an in-memory registry."""
    store = RankingStore(
        rankings_path
        if rankings_path is not None
        else os.environ.get("DASASAP_RANKINGS", DEFAULT_RANKINGS)
    )
    origin = cors_origin or os.environ.get("DASASAP_CORS_ORIGIN")

    app = FastAPI(title="dasasap", version="0.1.0")
    app.state.store = store
    if origin:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=[origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    slots: dict[str, _Slot] = {}
    registry_lock = threading.Lock()

    def _evict() -> None:
        cutoff = time.monotonic() - session_ttl
        for sid in [sid for sid, slot in slots.items() if slot.last_access < cutoff]:
            del slots[sid]

    def _slot(session_id: str) -> _Slot:
        with registry_lock:
            _evict()
            slot = slots.get(session_id)
            if slot is None:
                raise LookupError(session_id)
            slot.last_access = time.monotonic()
            return slot

    def _error(status: int, exc: Exception, **extra) -> JSONResponse:
        return JSONResponse({"detail": str(exc), **extra}, status_code=status)

    @app.exception_handler(ParseError)
    async def _parse_error(request: Request, exc: ParseError):
        return _error(400, exc, position=exc.position)

    @app.exception_handler(MalformedSyllogism)
    async def _malformed(request: Request, exc: MalformedSyllogism):
        return _error(422, exc)

    @app.exception_handler(MissingMiddleTerm)
    async def _no_middle(request: Request, exc: MissingMiddleTerm):
        return _error(422, exc)

    @app.exception_handler(BadCount)
    async def _bad_count(request: Request, exc: BadCount):
        return _error(400, exc)

    @app.exception_handler(UnknownChallenge)
    async def _unknown_challenge(request: Request, exc: UnknownChallenge):
        return _error(400, exc)

    @app.exception_handler(DuplicateAnswer)
    async def _duplicate(request: Request, exc: DuplicateAnswer):
        return _error(409, exc)

    @app.exception_handler(SessionFinished)
    async def _finished(request: Request, exc: SessionFinished):
        return _error(409, exc)

    @app.exception_handler(SessionNotComplete)
    async def _incomplete(request: Request, exc: SessionNotComplete):
        return _error(409, exc)

    @app.exception_handler(UnknownTopic)
    async def _unknown_topic(request: Request, exc: UnknownTopic):
        return _error(404, exc)

    @app.exception_handler(ValueError)
    async def _value_error(request: Request, exc: ValueError):
        return _error(400, exc)

    @app.post("/api/decide")
    def api_decide(body: DecideBody):
        s = parse_syllogism(body.syllogism)
        decision = decide(s)
        out: dict = {
            "syllogism": str(s),
            "verdict": decision.verdict.value,
            "trace": decision.trace.to_json(),
        }
        name = mnemonic_of_syllogism(s)
        if name:
            out["mnemonic"] = name
        if not decision.valid:
            verdict = oracle_decide(s)
            out["countermodel"] = verdict.countermodel.to_json()
        return out

    @app.post("/api/interlock")
    def api_interlock(body: InterlockBody):
        major = parse_proposition(body.major)
        minor = parse_proposition(body.minor)
        shared = {major.subject.name, major.predicate.name} & {
            minor.subject.name,
            minor.predicate.name,
        }
        if not shared:
            raise MissingMiddleTerm("propositions share no term")
        if len(shared) > 1:
            raise MissingMiddleTerm("propositions share more than one term")
        m = next(
            t
            for t in (major.subject, major.predicate)
            if t.name == next(iter(shared))
        )
        dmaj, dmin = encode(major), encode(minor)
        edges = middle_edges(dmaj, dmin, m)
        ok, reason = middle_interlocks(dmaj, dmin, m)
        out: dict = {
            "interlocks": ok,
            "middleEdges": [e.to_json() for e in edges],
        }
        if reason is not None:
            out["failureReason"] = reason.value
        return out

    @app.post("/api/sessions", status_code=201)
    def api_create_session(body: SessionBody):
        try:
            mode = SessionMode(body.mode)
        except ValueError:
            raise ValueError(
                f"mode must be one of {[m.value for m in SessionMode]}, got {body.mode!r}"
            ) from None
        seed = body.seed if body.seed is not None else uuid.uuid4().int % 2**63
        session = new_session(mode, seed, body.count)
        with registry_lock:
            _evict()
            slots[session.id] = _Slot(session)
        return _session_json(session)

    @app.get("/api/sessions/{session_id}")
    def api_get_session(session_id: str):
        try:
            slot = _slot(session_id)
        except LookupError:
            return JSONResponse(
                {"detail": f"unknown session {session_id!r}"}, status_code=404
            )
        with slot.lock:
            return _session_json(slot.session)

    @app.post("/api/sessions/{session_id}/answers")
    def api_submit_answer(session_id: str, body: AnswerBody):
        try:
            slot = _slot(session_id)
        except LookupError:
            return JSONResponse(
                {"detail": f"unknown session {session_id!r}"}, status_code=404
            )
        with slot.lock:
            record = submit_answer(
                slot.session, body.challengeId, body.answer, body.elapsedMs
            )
            session = slot.session
            return {
                "challengeId": record.challenge_id,
                "correct": record.correct,
                "delta": record.delta,
                "score": session.score,
                "streak": session.streak,
                "remaining": len(session.challenges) - len(session.answers),
            }

    @app.post("/api/sessions/{session_id}/finish")
    def api_finish_session(session_id: str, body: FinishBody):
        try:
            slot = _slot(session_id)
        except LookupError:
            return JSONResponse(
                {"detail": f"unknown session {session_id!r}"}, status_code=404
            )
        with slot.lock:
            entry = finish_session(
                slot.session, body.player, store=store, abandon=body.abandon
            )
        return {"entry": entry.to_json(), "rank": store.rank_of(entry)}

    @app.get("/api/rankings")
    def api_rankings(
        mode: str | None = None, limit: int | None = Query(default=None, ge=1)
    ):
        mode_filter = SessionMode(mode) if mode is not None else None
        entries = store.top(limit=limit, mode=mode_filter)
        return {"entries": [e.to_json() for e in entries]}

    @app.get("/api/learning/{topic}")
    def api_learning(topic: str):
        return _page_json(learning_content(topic))

    @app.get("/api/syllogisms/random")
    def api_random(seed: int | None = None, valid: bool | None = None):
        s, is_valid = random_syllogism(seed, valid)
        out = {"syllogism": str(s), "valid": is_valid}
        name = mnemonic_of_syllogism(s)
        if name:
            out["mnemonic"] = name
        return out

    return app
