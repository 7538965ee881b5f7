"""Operator identities, single-edit helpers and the estimator base class.

Operators come in two groups: the ten spoken-language operators (four
fillers, five synonym swaps, speako) and the three baseline operators
(typo, contraction, punctuation). Random/Hard set builders draw from the
spoken group by default; tie-breaking and reporting follow the definition
order below.
"""

from __future__ import annotations

import random
from dataclasses import replace
from enum import Enum

from sklearn.base import BaseEstimator, TransformerMixin

from ..corpus import Dataset, PerturbedUtterance, Token, Utterance
from ..seeding import derive_seed


class OperatorId(str, Enum):
    BOS_FILLER = "bos_filler"
    PRE_V_FILLER = "pre_v_filler"
    POST_V_FILLER = "post_v_filler"
    EOS_FILLER = "eos_filler"
    SYN_V = "syn_v"
    SYN_ADJ = "syn_adj"
    SYN_ADV = "syn_adv"
    SYN_ANY = "syn_any"
    SYN_STOPW = "syn_stopw"
    SPEAKO = "speako"
    TYPO = "typo"
    CONTRACTION = "contraction"
    PUNCT = "punct"


SPOKEN_OPERATORS: tuple[OperatorId, ...] = (
    OperatorId.BOS_FILLER, OperatorId.PRE_V_FILLER, OperatorId.POST_V_FILLER,
    OperatorId.EOS_FILLER, OperatorId.SYN_V, OperatorId.SYN_ADJ,
    OperatorId.SYN_ADV, OperatorId.SYN_ANY, OperatorId.SYN_STOPW,
    OperatorId.SPEAKO,
)

BASELINE_OPERATORS: tuple[OperatorId, ...] = (
    OperatorId.TYPO, OperatorId.CONTRACTION, OperatorId.PUNCT,
)

ALL_OPERATORS: tuple[OperatorId, ...] = SPOKEN_OPERATORS + BASELINE_OPERATORS

#: Human-readable row labels for composition reports.
DISPLAY_NAMES: dict[OperatorId, str] = {
    OperatorId.BOS_FILLER: "BOS Filler",
    OperatorId.PRE_V_FILLER: "Pre-V. Filler",
    OperatorId.POST_V_FILLER: "Post-V. Filler",
    OperatorId.EOS_FILLER: "EOS Filler",
    OperatorId.SYN_V: "Syn. V.",
    OperatorId.SYN_ADJ: "Syn. Adj.",
    OperatorId.SYN_ADV: "Syn. Adv.",
    OperatorId.SYN_ANY: "Syn. Any",
    OperatorId.SYN_STOPW: "Syn. StopW",
    OperatorId.SPEAKO: "Speako",
    OperatorId.TYPO: "Checklist Typo",
    OperatorId.CONTRACTION: "Checklist Contract.",
    OperatorId.PUNCT: "Checklist Punct.",
}


def insert_tokens(u: Utterance, index: int, surfaces: tuple[str, ...]) -> Utterance:
    """Insert outside-tagged tokens at ``index``, keeping everything else."""
    inserted = tuple(Token(s, "O") for s in surfaces)
    tokens = u.tokens[:index] + inserted + u.tokens[index:]
    return Utterance(id=u.id, tokens=tokens, intent=u.intent)


def replace_token_surface(u: Utterance, index: int, surface: str) -> Utterance:
    """Swap one surface form; its slot tag stays in place."""
    tokens = list(u.tokens)
    tokens[index] = Token(surface, tokens[index].slot_tag)
    return Utterance(id=u.id, tokens=tuple(tokens), intent=u.intent)


def rewrite_span(
    u: Utterance, start: int, end: int, replacement: tuple[Token, ...]
) -> Utterance:
    """Replace tokens[start:end] with pre-tagged replacement tokens."""
    tokens = u.tokens[:start] + replacement + u.tokens[end:]
    return Utterance(id=u.id, tokens=tokens, intent=u.intent)


def rename(pu: PerturbedUtterance, new_id: str) -> PerturbedUtterance:
    """Re-id a perturbed utterance (builders suffix ids with operator tags)."""
    return replace(pu, base=replace(pu.base, id=new_id))


def as_utterances(X) -> tuple[Utterance, ...]:
    """Accept a Dataset or any utterance iterable (estimator input contract)."""
    if isinstance(X, Dataset):
        return X.utterances
    items = tuple(X)
    for item in items:
        if not isinstance(item, Utterance):
            raise TypeError(
                f"expected a Dataset or an iterable of Utterance, "
                f"found {type(item).__name__}"
            )
    return items


class SingleEditPerturber(BaseEstimator, TransformerMixin):
    """Stateless dataset-in transformer applying one edit per utterance.

    Subclasses declare their parameters in ``__init__`` (sklearn
    convention, so ``get_params``/``clone`` work) and implement
    ``_apply_one``. ``transform`` hands each utterance a keyed seed
    (operator seed, stream 0, utterance index), so outputs are independent
    of processing order. Unset resource parameters resolve to the bundled
    defaults at apply time.
    """

    _operator_id: OperatorId

    def fit(self, X, y=None):
        return self

    def transform(self, X) -> list[PerturbedUtterance]:
        return [
            self._apply_one(u, derive_seed(self.seed, 0, i))
            for i, u in enumerate(as_utterances(X))
        ]

    def perturb(self, u: Utterance, index: int = 0) -> PerturbedUtterance:
        """Apply to a single utterance at a given stream index."""
        return self._apply_one(u, derive_seed(self.seed, 0, index))

    @property
    def operator_id(self) -> OperatorId:
        return self._operator_id

    def _apply_one(self, u: Utterance, seed: int) -> PerturbedUtterance:
        raise NotImplementedError


def new_rng(seed: int) -> random.Random:
    """The generator each operator application builds from its seed."""
    return random.Random(seed)
