"""Deterministic coarse part-of-speech tagging.

A six-way tagger (VERB / NOUN / ADJ / ADV / STOPWORD / OTHER) backed by a
word lexicon, a stopword set and ordered suffix rules. Lookup precedence is
fixed: stopword set, then lexicon, then suffix rules, then NOUN for anything
word-shaped (OTHER for tokens without letters). Lookup is case-insensitive;
surfaces are never modified.

The tagger is a replaceable contract: an external tag file
(`id<TAB>TAG TAG ...`) can override it per dataset so a statistical tagger
can be plugged in without code changes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .errors import ParseError

log = logging.getLogger(__name__)


class CoarsePos(str, Enum):
    VERB = "VERB"
    NOUN = "NOUN"
    ADJ = "ADJ"
    ADV = "ADV"
    STOPWORD = "STOPWORD"
    OTHER = "OTHER"


#: Applied in order to out-of-lexicon words; first matching suffix wins.
DEFAULT_SUFFIX_RULES: tuple[tuple[str, CoarsePos], ...] = (
    ("ly", CoarsePos.ADV),
    ("ing", CoarsePos.VERB),
    ("ed", CoarsePos.VERB),
    ("ous", CoarsePos.ADJ),
    ("ful", CoarsePos.ADJ),
    ("ive", CoarsePos.ADJ),
    ("al", CoarsePos.ADJ),
)


@dataclass(frozen=True)
class PosLexicon:
    """Lowercased word table plus stopwords and suffix heuristics."""

    entries: dict[str, CoarsePos] = field(default_factory=dict)
    stopwords: frozenset[str] = frozenset()
    suffix_rules: tuple[tuple[str, CoarsePos], ...] = DEFAULT_SUFFIX_RULES


def tag_word(word: str, lex: PosLexicon) -> CoarsePos:
    """Coarse tag for a single surface form."""
    w = word.lower()
    if w in lex.stopwords:
        return CoarsePos.STOPWORD
    pos = lex.entries.get(w)
    if pos is not None:
        return pos
    for suffix, suffix_pos in lex.suffix_rules:
        if len(w) > len(suffix) and w.endswith(suffix):
            return suffix_pos
    if any(c.isalpha() for c in w):
        return CoarsePos.NOUN
    return CoarsePos.OTHER


def tag(tokens: list[str] | tuple[str, ...], lex: PosLexicon) -> list[CoarsePos]:
    """Tag every surface in ``tokens``; output length equals input length."""
    return [tag_word(t, lex) for t in tokens]


def first_verb_index(tags: list[CoarsePos] | tuple[CoarsePos, ...]) -> int | None:
    """Index of the first VERB tag, or None when there is no verb."""
    for i, t in enumerate(tags):
        if t is CoarsePos.VERB:
            return i
    return None


def load_pos_lexicon(
    path: str | Path,
    stopwords_path: str | Path | None = None,
    suffix_rules: tuple[tuple[str, CoarsePos], ...] = DEFAULT_SUFFIX_RULES,
) -> PosLexicon:
    """Load a `word<TAB>POS` lexicon file, optionally with a stopword file.

    Duplicate words keep the last entry (a warning is logged). Raises
    ParseError with the offending line number on malformed lines.
    """
    entries: dict[str, CoarsePos] = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError(f"expected 'word<TAB>POS', got {line!r}", line=lineno)
        word, pos_text = parts[0].strip().lower(), parts[1].strip()
        try:
            pos = CoarsePos(pos_text)
        except ValueError:
            raise ParseError(
                f"unknown POS {pos_text!r} for word {word!r}", line=lineno
            ) from None
        if word in entries and entries[word] is not pos:
            log.warning(
                "duplicate lexicon entry %r: %s overrides %s",
                word, pos.value, entries[word].value,
            )
        entries[word] = pos

    stopwords: frozenset[str] = frozenset()
    if stopwords_path is not None:
        stopwords = load_stopwords(stopwords_path)
    return PosLexicon(entries=entries, stopwords=stopwords,
                      suffix_rules=suffix_rules)


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Load a one-word-per-line stopword file (lowercased)."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").split("\n"):
        word = line.strip().lower()
        if word and not word.startswith("#"):
            words.add(word)
    return frozenset(words)


def load_tag_overrides(path: str | Path) -> dict[str, tuple[CoarsePos, ...]]:
    """Load an external tag file: `id<TAB>TAG TAG TAG...` per line.

    The returned map lets callers bypass the rule tagger for listed
    utterances (tag sequences must align with the utterance's tokens).
    """
    overrides: dict[str, tuple[CoarsePos, ...]] = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError(
                f"expected 'id<TAB>TAG TAG ...', got {line!r}", line=lineno
            )
        uid, tag_text = parts
        try:
            tags = tuple(CoarsePos(t) for t in tag_text.split())
        except ValueError as e:
            raise ParseError(str(e), line=lineno) from None
        if not tags:
            raise ParseError(f"no tags for id {uid!r}", line=lineno)
        overrides[uid] = tags
    return overrides
