"""Bundled default resources and the bundle object operators draw from.

The package ships small curated data files (part-of-speech lexicon,
stopwords, filler phrases, synonym dictionary, contraction table,
pronunciation lexicon with word frequencies, phoneme-to-IPA table). Every
loader caches its result; the files are read-only after load and safe to
share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources as importlib_resources
from pathlib import Path

from .errors import ConfigError
from .operators.baseline_ops import ContractionTable
from .operators.fillers import FillerInventory
from .phonetics import PhoneticLexicon, load_ipa_table, load_phonetic_lexicon
from .providers import CandidateProvider, DictionaryProvider, RemoteMlmProvider
from .tagger import (
    CoarsePos,
    PosLexicon,
    load_pos_lexicon,
    load_stopwords,
    load_tag_overrides,
    tag,
)

DEFAULT_MIN_FREQUENCY = 1000


def resource_path(name: str) -> Path:
    """Filesystem path of a bundled data file."""
    path = Path(str(importlib_resources.files("slotperturb") / "data" / name))
    if not path.is_file():
        raise ConfigError(f"bundled resource {name!r} not found at {path}")
    return path


@lru_cache(maxsize=None)
def default_pos_lexicon() -> PosLexicon:
    return load_pos_lexicon(
        resource_path("pos_lexicon.tsv"),
        stopwords_path=resource_path("stopwords.txt"),
    )


@lru_cache(maxsize=None)
def default_fillers() -> FillerInventory:
    return FillerInventory.from_path(resource_path("fillers.json"))


@lru_cache(maxsize=None)
def default_synonym_provider() -> DictionaryProvider:
    return DictionaryProvider.from_path(resource_path("synonyms.tsv"))


@lru_cache(maxsize=None)
def default_contractions() -> ContractionTable:
    return ContractionTable.from_path(resource_path("contractions.tsv"))


@lru_cache(maxsize=None)
def default_phonetic_lexicon(
    min_frequency: int = DEFAULT_MIN_FREQUENCY,
) -> PhoneticLexicon:
    return load_phonetic_lexicon(
        resource_path("pronunciations.tsv"),
        resource_path("word_frequencies.tsv"),
        min_frequency=min_frequency,
    )


@lru_cache(maxsize=None)
def default_ipa_table() -> dict[str, str]:
    return load_ipa_table(resource_path("arpabet_ipa.tsv"))


@dataclass(frozen=True)
class ResourceBundle:
    """Everything the operator dispatch needs, loaded once and shared."""

    pos_lexicon: PosLexicon
    fillers: FillerInventory
    synonym_provider: CandidateProvider
    phonetic_lexicon: PhoneticLexicon
    contractions: ContractionTable
    top_k: int = 50
    verb_phrase: bool = False
    tag_overrides: dict[str, tuple[CoarsePos, ...]] = field(default_factory=dict)

    def tags_for(self, u) -> list[CoarsePos] | tuple[CoarsePos, ...]:
        """Coarse tags for an utterance, honoring per-id overrides."""
        override = self.tag_overrides.get(u.id)
        if override is not None:
            return override
        return tag(u.surfaces, self.pos_lexicon)


def default_bundle(top_k: int = 50, verb_phrase: bool = False) -> ResourceBundle:
    """Bundle built entirely from the shipped data files."""
    return ResourceBundle(
        pos_lexicon=default_pos_lexicon(),
        fillers=default_fillers(),
        synonym_provider=default_synonym_provider(),
        phonetic_lexicon=default_phonetic_lexicon(),
        contractions=default_contractions(),
        top_k=top_k,
        verb_phrase=verb_phrase,
    )


def load_bundle(
    pos_lexicon_path: str | Path | None = None,
    stopwords_path: str | Path | None = None,
    fillers_path: str | Path | None = None,
    synonyms_path: str | Path | None = None,
    contractions_path: str | Path | None = None,
    pronunciations_path: str | Path | None = None,
    frequencies_path: str | Path | None = None,
    min_frequency: int = DEFAULT_MIN_FREQUENCY,
    provider: str = "dictionary",
    remote_url: str | None = None,
    top_k: int = 50,
    verb_phrase: bool = False,
    tag_overrides_path: str | Path | None = None,
) -> ResourceBundle:
    """Bundle from explicit paths, falling back to bundled defaults.

    ``provider`` selects the synonym candidate source: "dictionary" (the
    synonyms file) or "remote" (an MLM sidecar at ``remote_url``).
    """
    for label, p in (
        ("pos lexicon", pos_lexicon_path), ("stopwords", stopwords_path),
        ("fillers", fillers_path), ("synonyms", synonyms_path),
        ("contractions", contractions_path),
        ("pronunciations", pronunciations_path),
        ("frequencies", frequencies_path),
        ("tag overrides", tag_overrides_path),
    ):
        if p is not None and not Path(p).is_file():
            raise ConfigError(f"{label} file not found: {p}")

    if pos_lexicon_path is not None or stopwords_path is not None:
        lex = load_pos_lexicon(
            pos_lexicon_path if pos_lexicon_path is not None
            else resource_path("pos_lexicon.tsv"),
            stopwords_path=stopwords_path if stopwords_path is not None
            else resource_path("stopwords.txt"),
        )
    else:
        lex = default_pos_lexicon()

    if provider == "dictionary":
        syn_provider: CandidateProvider = (
            DictionaryProvider.from_path(synonyms_path)
            if synonyms_path is not None else default_synonym_provider()
        )
    elif provider == "remote":
        if not remote_url:
            raise ConfigError("provider 'remote' requires a remote URL")
        syn_provider = RemoteMlmProvider(remote_url)
    else:
        raise ConfigError(
            f"unknown provider {provider!r} (expected 'dictionary' or 'remote')"
        )

    if pronunciations_path is not None or frequencies_path is not None:
        if pronunciations_path is None or frequencies_path is None:
            raise ConfigError(
                "pronunciations and frequencies files must be given together"
            )
        phon = load_phonetic_lexicon(
            pronunciations_path, frequencies_path, min_frequency=min_frequency
        )
    else:
        phon = default_phonetic_lexicon(min_frequency)

    return ResourceBundle(
        pos_lexicon=lex,
        fillers=(FillerInventory.from_path(fillers_path)
                 if fillers_path is not None else default_fillers()),
        synonym_provider=syn_provider,
        phonetic_lexicon=phon,
        contractions=(ContractionTable.from_path(contractions_path)
                      if contractions_path is not None
                      else default_contractions()),
        top_k=top_k,
        verb_phrase=verb_phrase,
        tag_overrides=(dict(load_tag_overrides(tag_overrides_path))
                       if tag_overrides_path is not None else {}),
    )
