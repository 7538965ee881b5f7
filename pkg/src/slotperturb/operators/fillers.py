"""Filler insertion operators: BOS, EOS, pre-verb and post-verb.

A filler is a semantically empty phrase inserted as outside-tagged tokens.
Insertion never lands strictly inside a slot chunk: an illegal position is
shifted to the nearest chunk boundary (leftward on ties). When no verb
exists for the pre/post-verb variants, the fail-safe inserts the
inventory's fail-safe word directly before the first slot token (or at the
utterance start when there are no slots at all).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from ..corpus import PerturbedUtterance, Utterance, chunks
from ..errors import OperatorError, ParseError
from ..tagger import CoarsePos, first_verb_index
from .base import OperatorId, SingleEditPerturber, insert_tokens, new_rng


class FillerKind(str, Enum):
    BOS = "bos"
    EOS = "eos"
    PRE_VERB = "pre_verb"
    POST_VERB = "post_verb"


_KIND_TO_OPERATOR = {
    FillerKind.BOS: OperatorId.BOS_FILLER,
    FillerKind.EOS: OperatorId.EOS_FILLER,
    FillerKind.PRE_VERB: OperatorId.PRE_V_FILLER,
    FillerKind.POST_VERB: OperatorId.POST_V_FILLER,
}

Phrase = tuple[str, ...]


def _phrases(items: list[str]) -> tuple[Phrase, ...]:
    return tuple(tuple(p.split()) for p in items)


@dataclass(frozen=True)
class FillerInventory:
    """Phrase lists per filler kind plus the fail-safe word."""

    bos: tuple[Phrase, ...]
    eos: tuple[Phrase, ...]
    pre_verb: tuple[Phrase, ...]
    post_verb: tuple[Phrase, ...]
    failsafe_word: str = "like"

    def __post_init__(self):
        for name in ("bos", "eos", "pre_verb", "post_verb"):
            phrases = getattr(self, name)
            if not phrases:
                raise ValueError(f"filler inventory {name!r} is empty")
            for phrase in phrases:
                if not phrase or any(not tok for tok in phrase):
                    raise ValueError(
                        f"filler inventory {name!r} has an empty phrase/token"
                    )
        if not self.failsafe_word:
            raise ValueError("failsafe_word must be non-empty")

    def for_kind(self, kind: FillerKind) -> tuple[Phrase, ...]:
        return getattr(self, kind.value)

    @classmethod
    def from_json(cls, text: str) -> "FillerInventory":
        try:
            data = json.loads(text)
            return cls(
                bos=_phrases(data["bos"]),
                eos=_phrases(data["eos"]),
                pre_verb=_phrases(data["pre_verb"]),
                post_verb=_phrases(data["post_verb"]),
                failsafe_word=data.get("failsafe_word", "like"),
            )
        except (KeyError, TypeError, json.JSONDecodeError) as e:
            raise ParseError(f"bad filler inventory JSON: {e}") from None

    @classmethod
    def from_path(cls, path: str | Path) -> "FillerInventory":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


def legal_insertion_points(u: Utterance) -> set[int]:
    """All indices in [0, len] not strictly inside any slot chunk."""
    points = set(range(len(u) + 1))
    for chunk in chunks(u):
        points.difference_update(range(chunk.start + 1, chunk.end))
    return points


def _nearest_legal(pos: int, legal: set[int]) -> int:
    return min(legal, key=lambda x: (abs(x - pos), x))


def apply_filler(
    u: Utterance,
    kind: FillerKind,
    inventory: FillerInventory,
    tags: list[CoarsePos] | tuple[CoarsePos, ...],
    seed: int,
    verb_phrase: bool = False,
) -> PerturbedUtterance:
    """Insert one uniformly drawn filler phrase of the given kind.

    ``tags`` must align with ``u``. With ``verb_phrase`` the post-verb
    position extends past noun tokens directly following the verb (so the
    filler lands after the verb phrase rather than after the bare verb).
    """
    if len(tags) != len(u):
        raise OperatorError(
            f"tag sequence length {len(tags)} does not match utterance "
            f"length {len(u)} (id {u.id!r})"
        )
    phrases = inventory.for_kind(kind)
    if not phrases:
        raise OperatorError(f"no phrases configured for filler kind {kind.value}")
    rng = new_rng(seed)
    phrase = phrases[rng.randrange(len(phrases))]
    detail: dict = {"kind": kind.value}

    if kind is FillerKind.BOS:
        pos = 0
    elif kind is FillerKind.EOS:
        pos = len(u)
    else:
        verb_at = first_verb_index(tags)
        if verb_at is None:
            # fail-safe: pivot on the first slot token instead of a verb
            phrase = (inventory.failsafe_word,)
            detail["failsafe"] = True
            slot_at = next(
                (i for i, t in enumerate(u.tokens) if t.slot_tag != "O"), None
            )
            pos = slot_at if slot_at is not None else 0
        elif kind is FillerKind.PRE_VERB:
            pos = verb_at
        else:
            pos = verb_at + 1
            if verb_phrase:
                while pos < len(u) and tags[pos] is CoarsePos.NOUN:
                    pos += 1

    legal = legal_insertion_points(u)
    if pos not in legal:
        shifted = _nearest_legal(pos, legal)
        detail["shifted_from"] = pos
        pos = shifted

    return PerturbedUtterance(
        base=insert_tokens(u, pos, phrase),
        origin_id=u.id,
        operator=_KIND_TO_OPERATOR[kind],
        edit_site=pos,
        inserted_or_replacement=" ".join(phrase),
        seed=seed,
        detail=detail,
    )


class FillerPerturber(SingleEditPerturber):
    """Estimator wrapper around ``apply_filler`` with bundled defaults."""

    def __init__(self, kind: str = "bos", inventory: FillerInventory | None = None,
                 pos_lexicon=None, verb_phrase: bool = False, seed: int = 0):
        self.kind = kind
        self.inventory = inventory
        self.pos_lexicon = pos_lexicon
        self.verb_phrase = verb_phrase
        self.seed = seed

    @property
    def operator_id(self) -> OperatorId:
        return _KIND_TO_OPERATOR[FillerKind(self.kind)]

    def _apply_one(self, u: Utterance, seed: int) -> PerturbedUtterance:
        from ..resources import default_fillers, default_pos_lexicon
        from ..tagger import tag

        inventory = self.inventory or default_fillers()
        lexicon = self.pos_lexicon or default_pos_lexicon()
        return apply_filler(
            u, FillerKind(self.kind), inventory, tag(u.surfaces, lexicon),
            seed, verb_phrase=self.verb_phrase,
        )
