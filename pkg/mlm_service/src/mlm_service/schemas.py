"""Wire types for the candidate endpoint, with their JSON schemas.

The request carries a whitespace-tokenized utterance, the index of the
masked position, and a candidate budget. The response is an ordered list
of whole-word candidates with probabilities. Both models enforce their
invariants at the boundary, so a violating payload never crosses it in
either direction.
"""

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

SCHEMA_VERSION = "1"

TOP_K_MAX = 200


class CandidateRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    tokens: list[str] = Field(min_length=1)
    mask_index: int
    top_k: int = Field(ge=1, le=TOP_K_MAX)

    @field_validator("tokens")
    @classmethod
    def _tokens_nonempty(cls, tokens: list[str]) -> list[str]:
        for t in tokens:
            if not t or any(c.isspace() for c in t):
                raise ValueError(
                    f"tokens must be non-empty and whitespace-free, got {t!r}"
                )
        return tokens

    @model_validator(mode="after")
    def _mask_in_range(self) -> "CandidateRequest":
        if not 0 <= self.mask_index < len(self.tokens):
            raise ValueError(
                f"mask_index {self.mask_index} out of range for "
                f"{len(self.tokens)} tokens"
            )
        return self


class ScoredCandidate(BaseModel):
    model_config = ConfigDict(extra="forbid")

    token: str
    prob: float = Field(gt=0.0, le=1.0)

    @field_validator("token")
    @classmethod
    def _whole_word(cls, token: str) -> str:
        if not token or any(c.isspace() for c in token):
            raise ValueError(f"candidate must be a single whole word, got {token!r}")
        return token


class CandidateResponse(BaseModel):
    model_config = ConfigDict(extra="forbid")

    candidates: list[ScoredCandidate]

    @model_validator(mode="after")
    def _non_increasing(self) -> "CandidateResponse":
        probs = [c.prob for c in self.candidates]
        for a, b in zip(probs, probs[1:]):
            if b > a:
                raise ValueError("candidate probabilities must be non-increasing")
        return self


def published_schemas() -> dict:
    """The versioned request/response schemas served under /schema."""
    return {
        "version": SCHEMA_VERSION,
        "request": CandidateRequest.model_json_schema(),
        "response": CandidateResponse.model_json_schema(),
    }
