"""Speako operator: near-homophone substitution of one random token.

The replacement comes from a frequency-filtered pronunciation lexicon and
is the phonetically closest word distinct from the target, so the edit
mimics a slip of the tongue rather than a typo.
"""

from __future__ import annotations

from ..corpus import PerturbedUtterance, Utterance
from ..phonetics import PhoneticLexicon, nearest_speako_with_distance
from .base import OperatorId, SingleEditPerturber, new_rng, replace_token_surface


def apply_speako(u: Utterance, lex: PhoneticLexicon, seed: int) -> PerturbedUtterance:
    """Replace one uniformly chosen token with its phonetic nearest neighbor."""
    rng = new_rng(seed)
    idx = rng.randrange(len(u))
    target = u.tokens[idx].surface
    replacement, distance = nearest_speako_with_distance(target, lex)
    return PerturbedUtterance(
        base=replace_token_surface(u, idx, replacement),
        origin_id=u.id,
        operator=OperatorId.SPEAKO,
        edit_site=idx,
        inserted_or_replacement=replacement,
        seed=seed,
        detail={"target_surface": target, "phoneme_distance": distance},
    )


class SpeakoPerturber(SingleEditPerturber):
    """Estimator wrapper around ``apply_speako`` with the bundled lexicon."""

    _operator_id = OperatorId.SPEAKO

    def __init__(self, lexicon: PhoneticLexicon | None = None, seed: int = 0):
        self.lexicon = lexicon
        self.seed = seed

    def _apply_one(self, u: Utterance, seed: int) -> PerturbedUtterance:
        from ..resources import default_phonetic_lexicon

        lexicon = self.lexicon or default_phonetic_lexicon()
        return apply_speako(u, lexicon, seed)
