"""Comparison operators in the behavioral-testing style: typo, contraction,
final-punctuation toggle.

Same single-edit, label-preserving contract as the spoken-language
operators; they exist so scores on those can be compared against
generic surface noise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ..corpus import PerturbedUtterance, Token, Utterance, chunks
from ..errors import ParseError
from .base import (
    OperatorId,
    SingleEditPerturber,
    insert_tokens,
    new_rng,
    replace_token_surface,
    rewrite_span,
)

FINAL_PUNCTUATION = frozenset({".", "?", "!"})


@dataclass(frozen=True)
class ContractionTable:
    """Bidirectional contracted ↔ expanded token-sequence pairs.

    Each side may span several tokens ("do not"); matching is
    case-insensitive and rewrites emit the table's casing.
    """

    pairs: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...]
    _rules: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        seen_left: set[tuple[str, ...]] = set()
        seen_right: set[tuple[str, ...]] = set()
        for contracted, expanded in self.pairs:
            for side in (contracted, expanded):
                if not side or any(
                    not tok or any(c.isspace() for c in tok) for tok in side
                ):
                    raise ValueError(f"bad contraction pair {contracted}/{expanded}")
            key_l = tuple(t.casefold() for t in contracted)
            key_r = tuple(t.casefold() for t in expanded)
            if key_l in seen_left or key_r in seen_right:
                raise ValueError(
                    f"contraction table is not one-to-one at {contracted}/{expanded}"
                )
            seen_left.add(key_l)
            seen_right.add(key_r)
        # per-position match rules, both directions, longest source first
        rules = []
        for contracted, expanded in self.pairs:
            rules.append((tuple(t.casefold() for t in contracted), expanded))
            rules.append((tuple(t.casefold() for t in expanded), contracted))
        rules.sort(key=lambda r: -len(r[0]))
        object.__setattr__(self, "_rules", tuple(rules))

    @classmethod
    def from_path(cls, path: str | Path) -> "ContractionTable":
        """Load `contracted<TAB>expanded` lines; either side may be multi-token."""
        pairs = []
        for lineno, line in enumerate(
            Path(path).read_text(encoding="utf-8").splitlines(), start=1
        ):
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
                raise ParseError(
                    f"expected 'contracted<TAB>expanded', got {line!r}", line=lineno
                )
            pairs.append((tuple(parts[0].split()), tuple(parts[1].split())))
        return cls(tuple(pairs))


def apply_typo(u: Utterance, seed: int) -> PerturbedUtterance:
    """Swap one random adjacent character pair inside one random token.

    Only positions whose swap actually changes the surface are drawn, so
    a non-noop result always differs from the origin; utterances with no
    such position (all tokens short or all-repeated characters) yield a
    flagged no-op.
    """
    rng = new_rng(seed)
    eligible = [
        (i, [p for p in range(len(t.surface) - 1)
             if t.surface[p] != t.surface[p + 1]])
        for i, t in enumerate(u.tokens)
    ]
    eligible = [(i, ps) for i, ps in eligible if ps]
    if not eligible:
        return PerturbedUtterance(
            base=u, origin_id=u.id, operator=OperatorId.TYPO, edit_site=0,
            inserted_or_replacement="", seed=seed, noop=True,
            detail={"reason": "no swappable character pair"},
        )
    idx, positions = eligible[rng.randrange(len(eligible))]
    p = positions[rng.randrange(len(positions))]
    s = u.tokens[idx].surface
    swapped = s[:p] + s[p + 1] + s[p] + s[p + 2:]
    return PerturbedUtterance(
        base=replace_token_surface(u, idx, swapped),
        origin_id=u.id,
        operator=OperatorId.TYPO,
        edit_site=idx,
        inserted_or_replacement=swapped,
        seed=seed,
        detail={"target_surface": s, "char_index": p},
    )


def _span_opening_tag(u: Utterance, start: int, end: int) -> str | None:
    """Opening tag for rewriting [start, end): "O" for an all-outside span,
    the span's first tag when it sits inside one chunk, None when the span
    crosses a chunk boundary (which would corrupt labels)."""
    span = [t.slot_tag for t in u.tokens[start:end]]
    if all(t == "O" for t in span):
        return "O"
    for c in chunks(u):
        if c.start <= start and end <= c.end:
            return span[0]
    return None


def apply_contraction(
    u: Utterance, table: ContractionTable, seed: int = 0
) -> PerturbedUtterance:
    """Rewrite the first contractable match in the opposite direction.

    Scans left to right; a match whose span crosses a slot-chunk boundary
    is skipped (rewriting it could not preserve labels). The rewritten
    tokens inherit the chunk's tags: the span's opening tag on the first
    token, continuation tags on the rest. No legal match → flagged no-op.
    """
    lowered = tuple(t.surface.casefold() for t in u.tokens)
    blocked = False
    for start in range(len(u)):
        for src, dst in table._rules:
            n = len(src)
            if lowered[start:start + n] != src:
                continue
            opening = _span_opening_tag(u, start, start + n)
            if opening is None:
                blocked = True
                continue
            if opening == "O":
                new_tags = ("O",) * len(dst)
            else:
                new_tags = (opening,) + ("I-" + opening[2:],) * (len(dst) - 1)
            replacement = tuple(Token(s, t) for s, t in zip(dst, new_tags))
            return PerturbedUtterance(
                base=rewrite_span(u, start, start + n, replacement),
                origin_id=u.id,
                operator=OperatorId.CONTRACTION,
                edit_site=start,
                inserted_or_replacement=" ".join(dst),
                seed=seed,
                detail={"source": " ".join(u.surfaces[start:start + n])},
            )
    reason = (
        "only matches crossing a chunk boundary" if blocked else "no table match"
    )
    return PerturbedUtterance(
        base=u, origin_id=u.id, operator=OperatorId.CONTRACTION, edit_site=0,
        inserted_or_replacement="", seed=seed, noop=True,
        detail={"reason": reason},
    )


def apply_punctuation(u: Utterance, seed: int = 0) -> PerturbedUtterance:
    """Toggle final punctuation: strip a trailing . ? ! or append a period.

    Stripping never removes a slot-tagged token and never empties the
    utterance; both cases come back as flagged no-ops.
    """
    last = u.tokens[-1]
    if last.surface in FINAL_PUNCTUATION:
        if last.slot_tag != "O":
            return PerturbedUtterance(
                base=u, origin_id=u.id, operator=OperatorId.PUNCT,
                edit_site=len(u) - 1, inserted_or_replacement="", seed=seed,
                noop=True, detail={"reason": "final punctuation is slot-tagged"},
            )
        if len(u) == 1:
            return PerturbedUtterance(
                base=u, origin_id=u.id, operator=OperatorId.PUNCT,
                edit_site=0, inserted_or_replacement="", seed=seed,
                noop=True, detail={"reason": "utterance would become empty"},
            )
        return PerturbedUtterance(
            base=rewrite_span(u, len(u) - 1, len(u), ()),
            origin_id=u.id,
            operator=OperatorId.PUNCT,
            edit_site=len(u) - 1,
            inserted_or_replacement="",
            seed=seed,
            detail={"removed": last.surface},
        )
    return PerturbedUtterance(
        base=insert_tokens(u, len(u), (".",)),
        origin_id=u.id,
        operator=OperatorId.PUNCT,
        edit_site=len(u),
        inserted_or_replacement=".",
        seed=seed,
        detail={"added": "."},
    )


class TypoPerturber(SingleEditPerturber):
    _operator_id = OperatorId.TYPO

    def __init__(self, seed: int = 0):
        self.seed = seed

    def _apply_one(self, u: Utterance, seed: int) -> PerturbedUtterance:
        return apply_typo(u, seed)


class ContractionPerturber(SingleEditPerturber):
    _operator_id = OperatorId.CONTRACTION

    def __init__(self, table: ContractionTable | None = None, seed: int = 0):
        self.table = table
        self.seed = seed

    def _apply_one(self, u: Utterance, seed: int) -> PerturbedUtterance:
        from ..resources import default_contractions

        return apply_contraction(u, self.table or default_contractions(), seed)


class PunctuationPerturber(SingleEditPerturber):
    _operator_id = OperatorId.PUNCT

    def __init__(self, seed: int = 0):
        self.seed = seed

    def _apply_one(self, u: Utterance, seed: int) -> PerturbedUtterance:
        return apply_punctuation(u, seed)
