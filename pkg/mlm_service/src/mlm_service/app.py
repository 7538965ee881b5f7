"""The HTTP application: /candidates, /health and /schema.

The app holds one read-only backend shared across requests. Until the
backend is in place every /candidates call answers 503, and /health says
whether the service is loading, ready, or failed to load. Invariant
violations in a request answer 400 rather than FastAPI's default 422, so
clients see one consistent client-error code.
"""

from __future__ import annotations

import threading
from contextlib import asynccontextmanager
from typing import Callable

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .backends import BackendError, CandidateBackend
from .schemas import (
    SCHEMA_VERSION,
    CandidateRequest,
    CandidateResponse,
    ScoredCandidate,
    published_schemas,
)

SERVICE_VERSION = "0.1.0"


class _State:
    """Backend slot guarded for concurrent readers and one writer."""

    def __init__(self):
        self.backend: CandidateBackend | None = None
        self.error: str | None = None
        self.ready = threading.Event()

    def install(self, backend: CandidateBackend) -> None:
        self.backend = backend
        self.ready.set()

    def fail(self, message: str) -> None:
        self.error = message


def create_app(
    backend: CandidateBackend | None = None,
    backend_factory: Callable[[], CandidateBackend] | None = None,
) -> FastAPI:
    """Build the service around a backend.

    Pass ``backend`` to start ready immediately, or ``backend_factory``
    to load in a background thread at startup; requests arriving before
    the factory finishes get 503.
    """
    if (backend is None) == (backend_factory is None):
        raise ValueError("pass exactly one of backend or backend_factory")

    state = _State()
    if backend is not None:
        state.install(backend)

    @asynccontextmanager
    async def _lifespan(app: FastAPI):
        if backend_factory is not None:
            def work():
                try:
                    state.install(backend_factory())
                except Exception as e:
                    state.fail(str(e))
            threading.Thread(target=work, daemon=True).start()
        yield

    app = FastAPI(title="mlm-service", version=SERVICE_VERSION,
                  lifespan=_lifespan)
    app.state.candidates = state

    @app.exception_handler(RequestValidationError)
    async def _bad_request(request: Request, exc: RequestValidationError):
        # drop pydantic's ctx: it can hold the raising exception object,
        # which is not JSON-serializable
        detail = [
            {"loc": list(err.get("loc", ())), "msg": err.get("msg", ""),
             "type": err.get("type", "")}
            for err in exc.errors()
        ]
        return JSONResponse(status_code=400, content={"detail": detail})

    @app.get("/health")
    def health() -> dict:
        if state.ready.is_set():
            status = "ok"
        elif state.error is not None:
            status = "error"
        else:
            status = "loading"
        return {
            "status": status,
            "ready": state.ready.is_set(),
            "model": state.backend.model_id if state.backend else None,
            "error": state.error,
            "version": SERVICE_VERSION,
        }

    @app.get("/schema")
    def schema() -> dict:
        return published_schemas()

    @app.post("/candidates", response_model=CandidateResponse)
    def candidates(request: CandidateRequest):
        if not state.ready.is_set():
            detail = (
                f"model failed to load: {state.error}"
                if state.error is not None else "model is still loading"
            )
            return JSONResponse(
                status_code=503,
                content={"detail": detail},
                headers={"Retry-After": "1"},
            )
        try:
            pairs = state.backend.candidates(
                request.tokens, request.mask_index, request.top_k
            )
        except BackendError as e:
            return JSONResponse(status_code=500, content={"detail": str(e)})
        return CandidateResponse(
            candidates=[ScoredCandidate(token=t, prob=p) for t, p in pairs]
        )

    return app


__all__ = ["create_app", "SCHEMA_VERSION", "SERVICE_VERSION"]
