"""Data model and file I/O for BIO-tagged slot-filling / intent-detection sets.

Canonical file format (UTF-8, LF):

    # intent=<label> id=<id>
    surface<TAB>tag
    ...
    <blank line>

One block per utterance, intent on the header line, one token per line.
``parse_conll`` and ``write_conll`` round-trip byte-identically on canonical
documents; parsing a non-canonical but well-formed document (extra blank
lines, missing trailing blank) canonicalizes it after one write.

Tokens are whitespace-free by construction and never re-tokenized: the
toolkit trusts the dataset's tokenization and preserves casing.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

from .errors import BioError, ParseError, StructuralError

if TYPE_CHECKING:
    from .operators.base import OperatorId

_TAG_RE = re.compile(r"^(?:O|[BI]-\S+)$")
_HEADER_RE = re.compile(r"^# intent=(\S+) id=(\S+)$")


@dataclass(frozen=True, slots=True)
class Token:
    """One surface form plus its BIO slot tag."""

    surface: str
    slot_tag: str

    def __post_init__(self):
        if not self.surface or any(c.isspace() for c in self.surface):
            raise ValueError(
                f"token surface must be non-empty and whitespace-free, "
                f"got {self.surface!r}"
            )
        if not _TAG_RE.match(self.slot_tag):
            raise ValueError(
                f"slot tag must be 'O', 'B-<label>' or 'I-<label>', "
                f"got {self.slot_tag!r}"
            )


@dataclass(frozen=True, slots=True)
class Utterance:
    """An id, a non-empty token sequence and one intent label.

    BIO sequence validity is not enforced at construction (so that
    ``validate_bio`` can diagnose broken sequences); ``Dataset`` enforces
    it for everything it holds.
    """

    id: str
    tokens: tuple[Token, ...]
    intent: str

    def __post_init__(self):
        if not self.id:
            raise ValueError("utterance id must be non-empty")
        if not self.tokens:
            raise ValueError(f"utterance {self.id!r} has no tokens")
        if not self.intent:
            raise ValueError(f"utterance {self.id!r} has no intent")
        object.__setattr__(self, "tokens", tuple(self.tokens))

    @property
    def surfaces(self) -> tuple[str, ...]:
        return tuple(t.surface for t in self.tokens)

    @property
    def tags(self) -> tuple[str, ...]:
        return tuple(t.slot_tag for t in self.tokens)

    def text(self) -> str:
        return " ".join(self.surfaces)

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True, slots=True, order=True)
class SlotChunk:
    """A maximal labeled span: token indices [start, end), end exclusive."""

    label: str = field(compare=False)
    start: int
    end: int

    def __post_init__(self):
        if not (0 <= self.start < self.end):
            raise ValueError(
                f"chunk bounds must satisfy 0 <= start < end, "
                f"got [{self.start}, {self.end})"
            )


@dataclass(frozen=True, slots=True)
class Dataset:
    """A named, BIO-valid utterance collection with label inventories.

    The inventories always equal the union of labels actually present;
    build instances through ``from_utterances`` which computes them.
    """

    name: str
    utterances: tuple[Utterance, ...]
    intent_inventory: frozenset[str]
    slot_inventory: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "utterances", tuple(self.utterances))
        seen: set[str] = set()
        for u in self.utterances:
            if u.id in seen:
                raise StructuralError(f"duplicate utterance id {u.id!r}")
            seen.add(u.id)
            diags = validate_bio(u)
            if diags:
                d = diags[0]
                raise BioError(d.message, d.utterance_id, d.token_index)
        intents = frozenset(u.intent for u in self.utterances)
        slots = frozenset(
            t.slot_tag[2:] for u in self.utterances for t in u.tokens
            if t.slot_tag != "O"
        )
        if self.intent_inventory != intents or self.slot_inventory != slots:
            raise StructuralError(
                "label inventories must equal the labels present in the data"
            )

    @classmethod
    def from_utterances(cls, name: str, utterances: Iterable[Utterance]) -> "Dataset":
        utterances = tuple(utterances)
        intents = frozenset(u.intent for u in utterances)
        slots = frozenset(
            t.slot_tag[2:] for u in utterances for t in u.tokens
            if t.slot_tag != "O"
        )
        return cls(name, utterances, intents, slots)

    def __len__(self) -> int:
        return len(self.utterances)

    def __iter__(self):
        return iter(self.utterances)

    def by_id(self) -> dict[str, Utterance]:
        return {u.id: u for u in self.utterances}


@dataclass(frozen=True, slots=True)
class BioDiagnostic:
    """One BIO-scheme violation: where it happened and which rule broke."""

    utterance_id: str
    token_index: int
    rule: str
    message: str


@dataclass(frozen=True)
class PerturbedUtterance:
    """An utterance after exactly one edit, plus provenance.

    ``base`` is the post-edit state. The edit is one contiguous filler
    insertion, one single-token replacement, or (contraction only) one
    contiguous span rewrite that preserves chunk structure. ``noop`` marks
    applications where no legal edit existed; the base is then the origin
    unchanged, kept so downstream alignment survives.
    """

    base: Utterance
    origin_id: str
    operator: "OperatorId"
    edit_site: int
    inserted_or_replacement: str
    seed: int
    noop: bool = False
    detail: dict[str, Any] = field(default_factory=dict)

    def provenance(self) -> dict[str, Any]:
        """JSON-ready provenance record for the sidecar file."""
        return {
            "id": self.base.id,
            "origin_id": self.origin_id,
            "operator": self.operator.value,
            "edit_site": self.edit_site,
            "inserted_or_replacement": self.inserted_or_replacement,
            "seed": self.seed,
            "noop": self.noop,
            "detail": dict(sorted(self.detail.items())),
        }


def validate_bio(u: Utterance) -> list[BioDiagnostic]:
    """Diagnostics for every BIO-sequence violation in ``u`` (empty if valid)."""
    diags: list[BioDiagnostic] = []
    prev = "O"
    for i, tok in enumerate(u.tokens):
        tag = tok.slot_tag
        if tag.startswith("I-"):
            label = tag[2:]
            if prev == "O" or prev[2:] != label:
                diags.append(BioDiagnostic(
                    utterance_id=u.id,
                    token_index=i,
                    rule="dangling-I",
                    message=(
                        f"I-{label} must follow B-{label} or I-{label}, "
                        f"found after {prev!r}"
                    ),
                ))
                # treat as if the run had been opened, so one broken
                # transition yields one diagnostic, not a cascade
                prev = "B-" + label
                continue
        prev = tag
    return diags


def chunks(u: Utterance) -> list[SlotChunk]:
    """Maximal B/I runs of ``u`` as sorted, disjoint chunks.

    Assumes ``u`` is BIO-valid (guaranteed for utterances inside a Dataset).
    """
    out: list[SlotChunk] = []
    start = -1
    label = ""
    for i, tok in enumerate(u.tokens):
        tag = tok.slot_tag
        if tag.startswith("B-"):
            if start >= 0:
                out.append(SlotChunk(label, start, i))
            start, label = i, tag[2:]
        elif tag == "O":
            if start >= 0:
                out.append(SlotChunk(label, start, i))
            start = -1
    if start >= 0:
        out.append(SlotChunk(label, start, len(u.tokens)))
    return out


def parse_conll(text: str, name: str = "dataset") -> Dataset:
    """Parse a canonical-format document into a Dataset.

    Raises ParseError (with line number) on malformed lines or tags,
    StructuralError on duplicate ids, BioError on dangling I- tags.
    """
    utterances: list[Utterance] = []
    header: tuple[str, str] | None = None   # (intent, id)
    header_line = 0
    tokens: list[Token] = []

    def close():
        nonlocal header, tokens
        if header is None:
            return
        if not tokens:
            raise ParseError("utterance block has a header but no tokens",
                             line=header_line)
        intent, uid = header
        u = Utterance(id=uid, tokens=tuple(tokens), intent=intent)
        diags = validate_bio(u)
        if diags:
            d = diags[0]
            raise BioError(d.message, d.utterance_id, d.token_index)
        utterances.append(u)
        header, tokens = None, []

    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line.strip():
            close()
            continue
        if line.startswith("#"):
            if header is not None:
                raise ParseError(
                    f"unexpected header inside utterance block: {line!r}",
                    line=lineno,
                )
            m = _HEADER_RE.match(line)
            if not m:
                raise ParseError(
                    f"malformed header, expected '# intent=<label> id=<id>': "
                    f"{line!r}",
                    line=lineno,
                )
            header = (m.group(1), m.group(2))
            header_line = lineno
            continue
        if header is None:
            raise ParseError(
                f"token line before any utterance header: {line!r}", line=lineno
            )
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError(
                f"expected 'surface<TAB>tag', got {line!r}", line=lineno
            )
        surface, tag = parts
        if not surface or any(c.isspace() for c in surface):
            raise ParseError(f"bad token surface {surface!r}", line=lineno)
        if not _TAG_RE.match(tag):
            raise ParseError(
                f"bad slot tag {tag!r} (expected O, B-<label> or I-<label>)",
                line=lineno,
            )
        tokens.append(Token(surface, tag))
    close()
    return Dataset.from_utterances(name, utterances)


def write_conll(d: Dataset) -> str:
    """Canonical serialization of ``d`` (inverse of parse_conll)."""
    lines: list[str] = []
    for u in d.utterances:
        lines.append(f"# intent={u.intent} id={u.id}")
        for t in u.tokens:
            lines.append(f"{t.surface}\t{t.slot_tag}")
        lines.append("")
    if not lines:
        return ""
    return "\n".join(lines) + "\n"


def parse_two_column(
    tags_text: str,
    intents_text: str,
    name: str = "dataset",
    id_prefix: str | None = None,
) -> Dataset:
    """Thin importer for two-column tag files with a separate intent file.

    ``tags_text`` holds `surface<TAB>tag` (or `surface tag`) lines with
    blank-line separated utterances; ``intents_text`` holds one intent label
    per utterance, same order. Ids are generated as `<prefix>-<index>`.
    """
    prefix = id_prefix if id_prefix is not None else name
    blocks: list[list[Token]] = []
    tokens: list[Token] = []
    for lineno, line in enumerate(tags_text.split("\n"), start=1):
        if not line.strip():
            if tokens:
                blocks.append(tokens)
                tokens = []
            continue
        if "\t" in line:
            parts = line.split("\t")
        else:
            parts = line.rsplit(" ", 1)
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ParseError(
                f"expected 'surface<TAB>tag', got {line!r}", line=lineno
            )
        surface, tag = parts
        if not _TAG_RE.match(tag):
            raise ParseError(f"bad slot tag {tag!r}", line=lineno)
        tokens.append(Token(surface, tag))
    if tokens:
        blocks.append(tokens)

    intents = [ln.strip() for ln in intents_text.split("\n") if ln.strip()]
    if len(intents) != len(blocks):
        raise StructuralError(
            f"intent file has {len(intents)} labels for {len(blocks)} utterances"
        )
    utterances = [
        Utterance(id=f"{prefix}-{i:05d}", tokens=tuple(toks), intent=intent)
        for i, (toks, intent) in enumerate(zip(blocks, intents))
    ]
    return Dataset.from_utterances(name, utterances)
