"""HTTP sidecar serving masked-token fill-in candidates.

POST /candidates takes a tokenized utterance, a mask position and a
budget, and answers whole-word candidates with non-increasing
probabilities; /health reports readiness and the model identifier;
/schema publishes the versioned wire schemas. The default backend is a
self-contained bigram model over a bundled command corpus, so the
service runs with no model download; point it at a local fill-mask
checkpoint to serve a pretrained masked LM instead.
"""

from .app import SCHEMA_VERSION, SERVICE_VERSION, create_app
from .backends import (
    BackendError,
    CandidateBackend,
    MaskedBigramBackend,
    TransformersBackend,
    load_backend,
)
from .schemas import CandidateRequest, CandidateResponse, ScoredCandidate

__all__ = [
    "BackendError",
    "CandidateBackend",
    "CandidateRequest",
    "CandidateResponse",
    "MaskedBigramBackend",
    "SCHEMA_VERSION",
    "SERVICE_VERSION",
    "ScoredCandidate",
    "TransformersBackend",
    "create_app",
    "load_backend",
]
