"""Single-edit perturbation operators sharing one dispatch surface.

``apply_operator`` routes an operator id to its implementation using a
resource bundle (lexicons, inventories, provider); ``make_perturber``
builds the matching sklearn-style transformer.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from ..corpus import PerturbedUtterance, Utterance
from .base import (
    ALL_OPERATORS,
    BASELINE_OPERATORS,
    DISPLAY_NAMES,
    SPOKEN_OPERATORS,
    OperatorId,
    SingleEditPerturber,
)
from .baseline_ops import (
    ContractionPerturber,
    ContractionTable,
    PunctuationPerturber,
    TypoPerturber,
    apply_contraction,
    apply_punctuation,
    apply_typo,
)
from .fillers import (
    FillerInventory,
    FillerKind,
    FillerPerturber,
    apply_filler,
    legal_insertion_points,
)
from .speako import SpeakoPerturber, apply_speako
from .synonyms import (
    SynonymKind,
    SynonymPerturber,
    apply_synonym,
    filter_candidates,
    select_target,
)

if TYPE_CHECKING:
    from ..resources import ResourceBundle

__all__ = [
    "ALL_OPERATORS", "BASELINE_OPERATORS", "DISPLAY_NAMES", "SPOKEN_OPERATORS",
    "OperatorId", "SingleEditPerturber", "ContractionPerturber",
    "ContractionTable", "PunctuationPerturber", "TypoPerturber",
    "apply_contraction", "apply_punctuation", "apply_typo", "FillerInventory",
    "FillerKind", "FillerPerturber", "apply_filler", "legal_insertion_points",
    "SpeakoPerturber", "apply_speako", "SynonymKind", "SynonymPerturber",
    "apply_synonym", "filter_candidates", "select_target", "apply_operator",
    "make_perturber",
]

_FILLER_KINDS = {
    OperatorId.BOS_FILLER: FillerKind.BOS,
    OperatorId.PRE_V_FILLER: FillerKind.PRE_VERB,
    OperatorId.POST_V_FILLER: FillerKind.POST_VERB,
    OperatorId.EOS_FILLER: FillerKind.EOS,
}

_SYNONYM_KINDS = {
    OperatorId.SYN_V: SynonymKind.VERB,
    OperatorId.SYN_ADJ: SynonymKind.ADJ,
    OperatorId.SYN_ADV: SynonymKind.ADV,
    OperatorId.SYN_ANY: SynonymKind.ANY,
    OperatorId.SYN_STOPW: SynonymKind.STOPWORD,
}


def apply_operator(
    u: Utterance,
    op: OperatorId,
    resources: "ResourceBundle",
    seed: int,
) -> PerturbedUtterance:
    """Apply one operator to one utterance under one derived seed."""
    if op in _FILLER_KINDS:
        return apply_filler(
            u, _FILLER_KINDS[op], resources.fillers, resources.tags_for(u),
            seed, verb_phrase=resources.verb_phrase,
        )
    if op in _SYNONYM_KINDS:
        return apply_synonym(
            u, _SYNONYM_KINDS[op], resources.synonym_provider,
            resources.pos_lexicon, seed, top_k=resources.top_k,
            tags=resources.tags_for(u),
        )
    if op is OperatorId.SPEAKO:
        return apply_speako(u, resources.phonetic_lexicon, seed)
    if op is OperatorId.TYPO:
        return apply_typo(u, seed)
    if op is OperatorId.CONTRACTION:
        return apply_contraction(u, resources.contractions, seed)
    if op is OperatorId.PUNCT:
        return apply_punctuation(u, seed)
    raise ValueError(f"unknown operator {op!r}")


def make_perturber(op: OperatorId, seed: int = 0) -> SingleEditPerturber:
    """Transformer instance for ``op``, using bundled default resources."""
    if op in _FILLER_KINDS:
        return FillerPerturber(kind=_FILLER_KINDS[op].value, seed=seed)
    if op in _SYNONYM_KINDS:
        return SynonymPerturber(kind=_SYNONYM_KINDS[op].value, seed=seed)
    if op is OperatorId.SPEAKO:
        return SpeakoPerturber(seed=seed)
    if op is OperatorId.TYPO:
        return TypoPerturber(seed=seed)
    if op is OperatorId.CONTRACTION:
        return ContractionPerturber(seed=seed)
    if op is OperatorId.PUNCT:
        return PunctuationPerturber(seed=seed)
    raise ValueError(f"unknown operator {op!r}")
