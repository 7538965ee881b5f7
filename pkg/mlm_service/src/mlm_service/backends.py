"""Candidate backends: where the fill-in distribution comes from.

A backend answers ``candidates(tokens, mask_index, top_k)`` with whole-word
(token, prob) pairs in non-increasing probability order and reports a
``model_id`` so runs are attributable to a concrete model.

Two implementations ship: a self-contained masked-bigram model estimated
from a bundled command corpus (the default; no model download needed) and
a fill-mask wrapper around a local transformers checkpoint.
"""

from __future__ import annotations

import hashlib
import math
from collections import Counter
from importlib import resources as _resources
from pathlib import Path
from typing import Protocol

# sentence-boundary sentinels for the bigram counts; never emitted
_BOS = "<s>"
_EOS = "</s>"


class BackendError(Exception):
    """A backend could not be constructed or could not answer."""


class CandidateBackend(Protocol):
    model_id: str

    def candidates(
        self, tokens: list[str], mask_index: int, top_k: int
    ) -> list[tuple[str, float]]:
        """At most top_k (token, prob) pairs, best first, probs in (0,1]."""
        ...


def _bundled_corpus_text() -> str:
    return (
        _resources.files("mlm_service").joinpath("data/commands.txt")
        .read_text(encoding="utf-8")
    )


class MaskedBigramBackend:
    """Fill-mask distribution from an add-k smoothed bigram model.

    A candidate w for the masked position is scored by
    P(w | left neighbor) * P(right neighbor | w) over the corpus counts,
    then normalized over the whole vocabulary, so probabilities behave
    like a masked-LM softmax: each in (0,1], summing to one across the
    vocabulary. The surface at ``mask_index`` itself is ignored; only the
    neighbors condition the distribution.
    """

    def __init__(self, corpus_path: str | Path | None = None, smoothing: float = 0.05):
        if smoothing <= 0:
            raise BackendError(f"smoothing must be > 0, got {smoothing}")
        if corpus_path is None:
            text = _bundled_corpus_text()
            origin = "bundled"
        else:
            text = Path(corpus_path).read_text(encoding="utf-8")
            origin = Path(corpus_path).name
        sentences = [
            line.split()
            for line in text.split("\n")
            if line.strip() and not line.startswith("#")
        ]
        if not sentences:
            raise BackendError(f"corpus {origin!r} contains no utterances")

        self.smoothing = smoothing
        self._unigrams: Counter[str] = Counter()
        self._bigrams: Counter[tuple[str, str]] = Counter()
        for words in sentences:
            run = [_BOS] + [w.lower() for w in words] + [_EOS]
            for a, b in zip(run, run[1:]):
                self._unigrams[a] += 1
                self._bigrams[(a, b)] += 1
        self.vocabulary = tuple(sorted(
            w for w in self._unigrams if w != _BOS
        ))
        # successor space: any vocabulary word or end of sentence
        self._n_successors = len(self.vocabulary) + 1

        digest = hashlib.sha256(text.encode("utf-8")).hexdigest()[:12]
        self.model_id = f"masked-bigram-v1:{origin}:{digest}"

    def _cond(self, following: str, given: str) -> float:
        k = self.smoothing
        return (self._bigrams[(given, following)] + k) / (
            self._unigrams[given] + k * self._n_successors
        )

    def candidates(
        self, tokens: list[str], mask_index: int, top_k: int
    ) -> list[tuple[str, float]]:
        left = tokens[mask_index - 1].lower() if mask_index > 0 else _BOS
        right = tokens[mask_index + 1].lower() if mask_index + 1 < len(tokens) else _EOS
        scores = {
            w: self._cond(w, left) * self._cond(right, w)
            for w in self.vocabulary
        }
        total = math.fsum(scores.values())
        ranked = sorted(scores, key=lambda w: (-scores[w], w))[:top_k]
        return [(w, scores[w] / total) for w in ranked]


class TransformersBackend:
    """Fill-mask over a local masked-LM checkpoint.

    Candidates that re-tokenize into more than one subword (or into a
    continuation piece) are dropped rather than merged, keeping the
    whole-word contract; the distribution is oversampled before filtering
    so top_k survivors usually remain.
    """

    OVERSAMPLE = 4

    def __init__(self, checkpoint: str):
        try:
            import torch
            from transformers import AutoModelForMaskedLM, AutoTokenizer
        except ImportError as e:
            raise BackendError(
                "the transformers backend needs the 'transformers' extra "
                f"installed: {e}"
            ) from e
        try:
            self._tokenizer = AutoTokenizer.from_pretrained(checkpoint)
            self._model = AutoModelForMaskedLM.from_pretrained(checkpoint)
        except Exception as e:
            raise BackendError(f"cannot load checkpoint {checkpoint!r}: {e}") from e
        self._model.eval()
        self._torch = torch
        self.model_id = f"fill-mask:{checkpoint}"

    def _is_whole_word(self, token: str) -> bool:
        if not token or any(c.isspace() for c in token) or not token.isalpha():
            return False
        pieces = self._tokenizer.tokenize(token)
        return len(pieces) == 1 and not pieces[0].startswith("##")

    def candidates(
        self, tokens: list[str], mask_index: int, top_k: int
    ) -> list[tuple[str, float]]:
        torch = self._torch
        tok = self._tokenizer
        masked = list(tokens)
        masked[mask_index] = tok.mask_token
        encoded = tok(" ".join(masked), return_tensors="pt")
        positions = (encoded["input_ids"][0] == tok.mask_token_id).nonzero()
        if len(positions) != 1:
            raise BackendError(
                f"expected exactly one mask position, found {len(positions)}"
            )
        with torch.no_grad():
            logits = self._model(**encoded).logits[0, positions[0, 0]]
        probs = torch.softmax(logits, dim=-1)
        ranked = torch.argsort(probs, descending=True)

        out: list[tuple[str, float]] = []
        for token_id in ranked[: top_k * self.OVERSAMPLE].tolist():
            word = tok.decode([token_id]).strip()
            if not self._is_whole_word(word):
                continue
            out.append((word.lower(), float(probs[token_id])))
            if len(out) == top_k:
                break
        return out


def load_backend(spec: str) -> CandidateBackend:
    """Build a backend from a spec string.

    ``bigram`` uses the bundled corpus; ``bigram:<path>`` a corpus file;
    ``transformers:<checkpoint>`` a local fill-mask checkpoint.
    """
    kind, _, arg = spec.partition(":")
    if kind == "bigram":
        return MaskedBigramBackend(arg or None)
    if kind == "transformers":
        if not arg:
            raise BackendError(
                "the transformers backend needs a checkpoint: "
                "'transformers:<path-or-name>'"
            )
        return TransformersBackend(arg)
    raise BackendError(
        f"unknown backend {spec!r}; expected 'bigram', 'bigram:<corpus>' "
        f"or 'transformers:<checkpoint>'"
    )
