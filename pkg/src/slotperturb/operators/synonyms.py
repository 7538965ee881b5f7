"""Synonym swap operators: verb, adjective, adverb, any, stopword.

One target token is replaced by the best-scoring candidate from a
pluggable provider, subject to a part-of-speech-in-context filter. The
slot tag at the target index is never touched, so the edit is label
preserving by construction.
"""

from __future__ import annotations

from enum import Enum

from ..corpus import PerturbedUtterance, Utterance
from ..errors import OperatorError
from ..providers import Candidate, CandidateProvider
from ..tagger import CoarsePos, PosLexicon, tag
from .base import OperatorId, SingleEditPerturber, new_rng, replace_token_surface


class SynonymKind(str, Enum):
    VERB = "verb"
    ADJ = "adj"
    ADV = "adv"
    ANY = "any"
    STOPWORD = "stopword"


_KIND_TO_OPERATOR = {
    SynonymKind.VERB: OperatorId.SYN_V,
    SynonymKind.ADJ: OperatorId.SYN_ADJ,
    SynonymKind.ADV: OperatorId.SYN_ADV,
    SynonymKind.ANY: OperatorId.SYN_ANY,
    SynonymKind.STOPWORD: OperatorId.SYN_STOPW,
}

_KIND_TO_POS = {
    SynonymKind.VERB: CoarsePos.VERB,
    SynonymKind.ADJ: CoarsePos.ADJ,
    SynonymKind.ADV: CoarsePos.ADV,
    SynonymKind.STOPWORD: CoarsePos.STOPWORD,
}

#: "any" resolves to one of these part-of-speech targets, drawn uniformly.
ANY_POOL = (CoarsePos.VERB, CoarsePos.ADJ, CoarsePos.ADV, CoarsePos.NOUN)


def _check_alignment(u: Utterance, tags) -> None:
    if len(tags) != len(u):
        raise OperatorError(
            f"tag sequence length {len(tags)} does not match utterance "
            f"length {len(u)} (id {u.id!r})"
        )


def _target_order(u, kind: SynonymKind, tags, rng) -> tuple[list[int], dict]:
    """Candidate target indices in try order, plus provenance detail.

    The order is a uniform shuffle of the matching-tag indices, so its
    first element is the uniformly drawn target and the rest define the
    retry sequence. Falls back to noun targets, then to all tokens.
    """
    detail: dict = {"kind": kind.value}
    if kind is SynonymKind.ANY:
        pos = ANY_POOL[rng.randrange(len(ANY_POOL))]
        detail["resolved_any"] = pos.value
    else:
        pos = _KIND_TO_POS[kind]
    order = [i for i, t in enumerate(tags) if t is pos]
    if not order and pos is not CoarsePos.NOUN:
        order = [i for i, t in enumerate(tags) if t is CoarsePos.NOUN]
        if order:
            detail["fallback"] = "noun"
    if not order:
        order = list(range(len(u)))
        detail["fallback"] = "all"
    rng.shuffle(order)
    return order, detail


def select_target(u: Utterance, kind: SynonymKind, tags, seed: int) -> int:
    """Uniformly drawn target index for ``kind`` (noun / any-token fallback)."""
    _check_alignment(u, tags)
    order, _ = _target_order(u, kind, tags, new_rng(seed))
    return order[0]


def filter_candidates(
    u: Utterance,
    idx: int,
    cands: list[Candidate],
    lex: PosLexicon,
    stop_inventory: frozenset[str] | None = None,
    kind: SynonymKind | None = None,
) -> list[Candidate]:
    """Keep candidates that fit the target slot, preserving weight order.

    A candidate survives when placing it at ``idx`` and re-tagging leaves
    the coarse part of speech unchanged, it is not the original surface
    (case-insensitive), and it is purely alphabetic. Stopword swaps are
    additionally restricted to the stopword inventory, so function words
    only ever trade places with function words.
    """
    if not 0 <= idx < len(u):
        raise OperatorError(f"target index {idx} out of range for {u.id!r}")
    if stop_inventory is None:
        stop_inventory = lex.stopwords
    original = u.tokens[idx].surface.casefold()
    target_pos = tag(u.surfaces, lex)[idx]
    surfaces = list(u.surfaces)
    kept = []
    for c in cands:
        if not c.token.isalpha():
            continue
        if c.token.casefold() == original:
            continue
        if kind is SynonymKind.STOPWORD and c.token.lower() not in stop_inventory:
            continue
        surfaces[idx] = c.token
        if tag(surfaces, lex)[idx] is target_pos:
            kept.append(c)
    return kept


def _pick(kept: list[Candidate], rng, sample: bool) -> Candidate:
    if not sample:
        return max(kept, key=lambda c: c.weight)
    total = sum(c.weight for c in kept)
    if total <= 0:
        return kept[rng.randrange(len(kept))]
    point = rng.random() * total
    acc = 0.0
    for c in kept:
        acc += c.weight
        if point < acc:
            return c
    return kept[-1]


def apply_synonym(
    u: Utterance,
    kind: SynonymKind,
    provider: CandidateProvider,
    lex: PosLexicon,
    seed: int,
    top_k: int = 50,
    tags=None,
    sample: bool = False,
) -> PerturbedUtterance:
    """Swap one target token for a provider candidate of the same coarse POS.

    Targets of the requested kind are tried in uniform-shuffle order until
    one yields a surviving candidate; the highest-weight survivor wins
    (or a weight-proportional draw with ``sample``). When every target
    exhausts its candidates the result is a flagged no-op so downstream
    alignment is preserved.
    """
    if tags is None:
        tags = tag(u.surfaces, lex)
    _check_alignment(u, tags)
    rng = new_rng(seed)
    order, detail = _target_order(u, kind, tags, rng)
    operator = _KIND_TO_OPERATOR[kind]

    for idx in order:
        cands = provider.candidates(list(u.surfaces), idx, top_k)
        kept = filter_candidates(u, idx, cands, lex, lex.stopwords, kind)
        if not kept:
            continue
        chosen = _pick(kept, rng, sample)
        detail["target_surface"] = u.tokens[idx].surface
        return PerturbedUtterance(
            base=replace_token_surface(u, idx, chosen.token),
            origin_id=u.id,
            operator=operator,
            edit_site=idx,
            inserted_or_replacement=chosen.token,
            seed=seed,
            detail=detail,
        )

    detail["reason"] = "no surviving candidate for any target"
    return PerturbedUtterance(
        base=u,
        origin_id=u.id,
        operator=operator,
        edit_site=order[0],
        inserted_or_replacement="",
        seed=seed,
        noop=True,
        detail=detail,
    )


class SynonymPerturber(SingleEditPerturber):
    """Estimator wrapper around ``apply_synonym`` with bundled defaults."""

    def __init__(self, kind: str = "verb", provider: CandidateProvider | None = None,
                 pos_lexicon: PosLexicon | None = None, top_k: int = 50,
                 sample: bool = False, seed: int = 0):
        self.kind = kind
        self.provider = provider
        self.pos_lexicon = pos_lexicon
        self.top_k = top_k
        self.sample = sample
        self.seed = seed

    @property
    def operator_id(self) -> OperatorId:
        return _KIND_TO_OPERATOR[SynonymKind(self.kind)]

    def _apply_one(self, u: Utterance, seed: int) -> PerturbedUtterance:
        from ..resources import default_pos_lexicon, default_synonym_provider

        provider = self.provider or default_synonym_provider()
        lexicon = self.pos_lexicon or default_pos_lexicon()
        return apply_synonym(
            u, SynonymKind(self.kind), provider, lexicon, seed,
            top_k=self.top_k, sample=self.sample,
        )
