"""Sources of fill-in candidates for a masked token position.

A provider answers ``candidates(tokens, mask_index, top_k)`` with at most
``top_k`` candidates in non-increasing weight order. The dictionary-backed
provider is the offline default; the remote provider speaks the masked-LM
sidecar's wire contract (POST /candidates). Providers may return the
original surface; the synonym filter removes it downstream.
"""

from __future__ import annotations

import json
import urllib.error
import urllib.request
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol

from .errors import ParseError, ProviderError


@dataclass(frozen=True, slots=True)
class Candidate:
    """A proposed surface plus a non-negative, provider-defined weight."""

    token: str
    weight: float

    def __post_init__(self):
        if not self.token or any(c.isspace() for c in self.token):
            raise ValueError(
                f"candidate token must be non-empty and whitespace-free, "
                f"got {self.token!r}"
            )
        if self.weight < 0:
            raise ValueError(f"candidate weight must be >= 0, got {self.weight}")


class CandidateProvider(Protocol):
    def candidates(
        self, tokens: tuple[str, ...], mask_index: int, top_k: int
    ) -> list[Candidate]:
        """At most ``top_k`` candidates for the masked position, best first."""
        ...


class DictionaryProvider:
    """Context-free synonym dictionary with rank-based weights (1/rank)."""

    def __init__(self, synonyms: dict[str, tuple[str, ...]]):
        self.synonyms = {k.lower(): tuple(v) for k, v in synonyms.items()}

    @classmethod
    def from_path(cls, path: str | Path) -> "DictionaryProvider":
        """Load a `word<TAB>syn1,syn2,...` file."""
        synonyms: dict[str, tuple[str, ...]] = {}
        text = Path(path).read_text(encoding="utf-8")
        for lineno, line in enumerate(text.split("\n"), start=1):
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ParseError(
                    f"expected 'word<TAB>syn1,syn2,...', got {line!r}",
                    line=lineno,
                )
            word = parts[0].strip().lower()
            syns = tuple(
                s.strip() for s in parts[1].split(",") if s.strip()
            )
            if not word or not syns:
                raise ParseError(f"empty word or synonym list: {line!r}",
                                 line=lineno)
            synonyms[word] = syns
        return cls(synonyms)

    def candidates(
        self, tokens: tuple[str, ...], mask_index: int, top_k: int
    ) -> list[Candidate]:
        word = tokens[mask_index].lower()
        syns = self.synonyms.get(word, ())
        return [
            Candidate(token=s, weight=1.0 / rank)
            for rank, s in enumerate(syns[:top_k], start=1)
        ]


class RemoteMlmProvider:
    """HTTP client for the masked-LM candidate sidecar.

    Wire contract: POST <base_url>/candidates with
    ``{"tokens": [...], "mask_index": i, "top_k": k}`` returns
    ``{"candidates": [{"token": ..., "prob": ...}, ...]}``.
    """

    def __init__(self, base_url: str, timeout: float = 30.0):
        self.base_url = base_url.rstrip("/")
        self.timeout = timeout

    def candidates(
        self, tokens: tuple[str, ...], mask_index: int, top_k: int
    ) -> list[Candidate]:
        payload = json.dumps({
            "tokens": list(tokens),
            "mask_index": mask_index,
            "top_k": top_k,
        }).encode("utf-8")
        request = urllib.request.Request(
            f"{self.base_url}/candidates",
            data=payload,
            headers={"Content-Type": "application/json"},
            method="POST",
        )
        try:
            with urllib.request.urlopen(request, timeout=self.timeout) as resp:
                body = resp.read().decode("utf-8")
        except urllib.error.HTTPError as e:
            raise ProviderError(
                f"candidate service returned HTTP {e.code}",
                diagnostics={"status": e.code,
                             "body": e.read().decode("utf-8", "replace")[:500]},
            ) from e
        except urllib.error.URLError as e:
            raise ProviderError(
                f"candidate service unreachable at {self.base_url}: {e.reason}",
                diagnostics={"url": self.base_url},
            ) from e
        try:
            data = json.loads(body)
            return [
                Candidate(token=c["token"], weight=float(c["prob"]))
                for c in data["candidates"]
            ]
        except (KeyError, TypeError, ValueError) as e:
            raise ProviderError(
                f"malformed candidate service response: {e}",
                diagnostics={"body": body[:500]},
            ) from e
