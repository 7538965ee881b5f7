"""Phoneme sequences, pronunciation lexicon and phonetic nearest neighbors.

Phonemes use a stress-free ARPABET-style symbol set; a bundled mapping table
renders them as IPA for display. Distances are plain unit-cost Levenshtein
over symbols, so the alphabet only needs internal consistency.

Out-of-lexicon words fall back to a deterministic letter-to-phoneme rule
map so any token can participate:

1. lowercase the word and drop non-letter characters;
2. drop a final 'e' when an earlier vowel (aeiou) exists;
3. scan left to right, matching the substitution table longest-first
   (3-letter, then 2-letter groups); an unmatched letter equal to the
   letter just consumed is skipped (doubled consonants), otherwise the
   single-letter mapping is emitted ('y' maps to IY at word end, Y
   elsewhere; 'x' expands to K S, 'qu' to K W).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import OperatorError, ParseError

#: Stress-free ARPABET-style phoneme inventory.
PHONEME_INVENTORY: frozenset[str] = frozenset({
    "AA", "AE", "AH", "AO", "AW", "AY", "B", "CH", "D", "DH", "EH", "ER",
    "EY", "F", "G", "HH", "IH", "IY", "JH", "K", "L", "M", "N", "NG", "OW",
    "OY", "P", "R", "S", "SH", "T", "TH", "UH", "UW", "V", "W", "Y", "Z",
    "ZH",
})

_VOWEL_LETTERS = set("aeiou")

#: Longest-match-first grapheme groups; values may expand to two phonemes.
_GROUPS: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("igh", ("AY",)),
    ("tch", ("CH",)),
    ("dge", ("JH",)),
    ("ch", ("CH",)),
    ("sh", ("SH",)),
    ("th", ("TH",)),
    ("ph", ("F",)),
    ("wh", ("W",)),
    ("ck", ("K",)),
    ("ng", ("NG",)),
    ("qu", ("K", "W")),
    ("kn", ("N",)),
    ("wr", ("R",)),
    ("ee", ("IY",)),
    ("oo", ("UW",)),
    ("ea", ("IY",)),
    ("ou", ("AW",)),
    ("ow", ("OW",)),
    ("ai", ("EY",)),
    ("ay", ("EY",)),
    ("oa", ("OW",)),
    ("oi", ("OY",)),
    ("oy", ("OY",)),
    ("au", ("AO",)),
    ("aw", ("AO",)),
    ("ew", ("UW",)),
)

_LETTERS: dict[str, tuple[str, ...]] = {
    "a": ("AE",), "b": ("B",), "c": ("K",), "d": ("D",), "e": ("EH",),
    "f": ("F",), "g": ("G",), "h": ("HH",), "i": ("IH",), "j": ("JH",),
    "k": ("K",), "l": ("L",), "m": ("M",), "n": ("N",), "o": ("AA",),
    "p": ("P",), "q": ("K",), "r": ("R",), "s": ("S",), "t": ("T",),
    "u": ("AH",), "v": ("V",), "w": ("W",), "x": ("K", "S"), "y": ("Y",),
    "z": ("Z",),
}


@dataclass(frozen=True, slots=True)
class PhonemeSeq:
    """An ordered phoneme symbol sequence from the bundled inventory."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        bad = [s for s in self.symbols if s not in PHONEME_INVENTORY]
        if bad:
            raise ValueError(f"unknown phoneme symbols: {bad}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return " ".join(self.symbols)


@dataclass(frozen=True)
class PhoneticLexicon:
    """word -> (phonemes, corpus frequency), frequency-filtered at load.

    Every entry's frequency is at least ``min_frequency``; words are
    lowercased and unique.
    """

    entries: dict[str, tuple[PhonemeSeq, int]]
    min_frequency: int = 1000
    _nearest_cache: dict[str, tuple[str, int]] = field(
        default_factory=dict, compare=False, repr=False
    )

    def __post_init__(self):
        for word, (seq, freq) in self.entries.items():
            if word != word.lower():
                raise ValueError(f"lexicon words must be lowercase: {word!r}")
            if freq < self.min_frequency:
                raise ValueError(
                    f"entry {word!r} has frequency {freq} below the "
                    f"threshold {self.min_frequency}"
                )
            if len(seq) == 0:
                raise ValueError(f"entry {word!r} has an empty pronunciation")

    def __len__(self) -> int:
        return len(self.entries)


def grapheme_to_phonemes(word: str) -> PhonemeSeq:
    """Deterministic rule-based fallback pronunciation (see module rules)."""
    letters = [c for c in word.lower() if c.isalpha()]
    if (
        len(letters) > 1
        and letters[-1] == "e"
        and any(c in _VOWEL_LETTERS for c in letters[:-1])
    ):
        letters = letters[:-1]
    text = "".join(letters)
    out: list[str] = []
    i = 0
    prev = ""
    while i < len(text):
        for graph, phones in _GROUPS:
            if text.startswith(graph, i):
                out.extend(phones)
                prev = graph[-1]
                i += len(graph)
                break
        else:
            c = text[i]
            if c == prev:
                i += 1
                continue
            if c == "y" and i == len(text) - 1:
                out.append("IY")
            else:
                out.extend(_LETTERS[c])
            prev = c
            i += 1
    return PhonemeSeq(tuple(out))


def to_phonemes(word: str, lex: PhoneticLexicon) -> PhonemeSeq:
    """Lexicon pronunciation when known, rule fallback otherwise."""
    if not word:
        raise ValueError("word must be non-empty")
    entry = lex.entries.get(word.lower())
    if entry is not None:
        return entry[0]
    return grapheme_to_phonemes(word)


def phoneme_distance(a: PhonemeSeq, b: PhonemeSeq) -> int:
    """Unit-cost Levenshtein edit distance over phoneme symbols."""
    return _levenshtein(a.symbols, b.symbols, limit=None)


def _levenshtein(
    a: tuple[str, ...], b: tuple[str, ...], limit: int | None
) -> int:
    """Two-row DP; with ``limit`` set, returns limit+1 as soon as the
    distance provably exceeds it."""
    if len(a) < len(b):
        a, b = b, a
    if limit is not None and len(a) - len(b) > limit:
        return limit + 1
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    for i, sa in enumerate(a, start=1):
        cur = [i] + [0] * len(b)
        best = i
        for j, sb in enumerate(b, start=1):
            cost = 0 if sa == sb else 1
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost)
            if cur[j] < best:
                best = cur[j]
        if limit is not None and best > limit:
            return limit + 1
        prev = cur
    return prev[-1]


def nearest_speako(word: str, lex: PhoneticLexicon) -> str:
    """The lexicon word (different from ``word``) phonetically closest to it.

    Ties break toward higher corpus frequency, then lexicographically
    smaller word. Raises OperatorError when the lexicon holds no other word.
    """
    key = word.lower()
    cached = lex._nearest_cache.get(key)
    if cached is not None:
        return cached[0]

    target = to_phonemes(word, lex).symbols
    best: tuple[int, int, str] | None = None   # (dist, -freq, word)
    for cand, (seq, freq) in lex.entries.items():
        if cand == key:
            continue
        limit = None if best is None else best[0]
        dist = _levenshtein(target, seq.symbols, limit=limit)
        if limit is not None and dist > limit:
            continue
        score = (dist, -freq, cand)
        if best is None or score < best:
            best = score
    if best is None:
        raise OperatorError(
            f"phonetic lexicon has no candidate other than {word!r}"
        )
    lex._nearest_cache[key] = (best[2], best[0])
    return best[2]


def nearest_speako_with_distance(word: str, lex: PhoneticLexicon) -> tuple[str, int]:
    """Like ``nearest_speako`` but also returns the phoneme distance."""
    candidate = nearest_speako(word, lex)
    return candidate, lex._nearest_cache[word.lower()][1]


def load_phonetic_lexicon(
    pronunciations_path: str | Path,
    frequencies_path: str | Path,
    min_frequency: int = 1000,
) -> PhoneticLexicon:
    """Build a lexicon from `word<TAB>SYM SYM ...` and `word<TAB>count` files.

    Words below the frequency threshold, or missing from either file, are
    dropped.
    """
    freqs: dict[str, int] = {}
    for lineno, line in enumerate(
        Path(frequencies_path).read_text(encoding="utf-8").split("\n"), start=1
    ):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError(f"expected 'word<TAB>count', got {line!r}",
                             line=lineno)
        try:
            count = int(parts[1])
        except ValueError:
            raise ParseError(f"bad count {parts[1]!r}", line=lineno) from None
        if count <= 0:
            raise ParseError(f"count must be positive, got {count}", line=lineno)
        freqs[parts[0].strip().lower()] = count

    entries: dict[str, tuple[PhonemeSeq, int]] = {}
    for lineno, line in enumerate(
        Path(pronunciations_path).read_text(encoding="utf-8").split("\n"),
        start=1,
    ):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError(f"expected 'word<TAB>SYM SYM ...', got {line!r}",
                             line=lineno)
        word = parts[0].strip().lower()
        try:
            seq = PhonemeSeq(tuple(parts[1].split()))
        except ValueError as e:
            raise ParseError(str(e), line=lineno) from None
        freq = freqs.get(word, 0)
        if freq >= min_frequency:
            entries[word] = (seq, freq)
    return PhoneticLexicon(entries=entries, min_frequency=min_frequency)


def load_ipa_table(path: str | Path) -> dict[str, str]:
    """Load the ARPABET-to-IPA display table (`SYM<TAB>ipa` lines)."""
    table: dict[str, str] = {}
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").split("\n"), start=1
    ):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError(f"expected 'SYM<TAB>ipa', got {line!r}", line=lineno)
        table[parts[0].strip()] = parts[1].strip()
    return table


def to_ipa(seq: PhonemeSeq, table: dict[str, str]) -> str:
    """Render a phoneme sequence with the display table (e.g. ``wɑtʃ``)."""
    return "".join(table.get(s, s) for s in seq.symbols)
