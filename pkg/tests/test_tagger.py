import logging

import pytest

from slotperturb.errors import ParseError
from slotperturb.tagger import (
    CoarsePos,
    PosLexicon,
    first_verb_index,
    load_pos_lexicon,
    load_stopwords,
    load_tag_overrides,
    tag,
    tag_word,
)


@pytest.fixture(scope="module")
def lex(bundle):
    return bundle.pos_lexicon


class TestTagWord:
    def test_reference_sentence_tags(self, lex):
        got = tag(("add", "tune", "to", "sxsw", "fresh", "playlist"), lex)
        assert [t.value for t in got] == [
            "VERB", "NOUN", "STOPWORD", "NOUN", "ADJ", "NOUN",
        ]

    def test_stopwords_win_over_lexicon(self):
        custom = PosLexicon(
            entries={"to": CoarsePos.VERB}, stopwords=frozenset({"to"})
        )
        assert tag_word("to", custom) is CoarsePos.STOPWORD

    def test_lexicon_wins_over_suffix(self, lex):
        # "feeling" ends in -ing but is lexicalized as a noun
        assert tag_word("feeling", lex) is CoarsePos.NOUN
        assert tag_word("family", lex) is CoarsePos.NOUN
        assert tag_word("red", lex) is CoarsePos.ADJ

    def test_suffix_rules(self):
        empty = PosLexicon()
        assert tag_word("quickly", empty) is CoarsePos.ADV
        assert tag_word("jumping", empty) is CoarsePos.VERB
        assert tag_word("jumped", empty) is CoarsePos.VERB
        assert tag_word("famous", empty) is CoarsePos.ADJ
        assert tag_word("careful", empty) is CoarsePos.ADJ
        assert tag_word("digital", empty) is CoarsePos.ADJ
        assert tag_word("creative", empty) is CoarsePos.ADJ

    def test_suffix_requires_strictly_longer_word(self):
        # the word must be longer than the suffix itself
        empty = PosLexicon()
        assert tag_word("ing", empty) is CoarsePos.NOUN
        assert tag_word("ly", empty) is CoarsePos.NOUN

    def test_unknown_alpha_defaults_to_noun(self, lex):
        assert tag_word("sxsw", lex) is CoarsePos.NOUN
        assert tag_word("zzzq", lex) is CoarsePos.NOUN

    def test_no_alpha_is_other(self, lex):
        assert tag_word("?", lex) is CoarsePos.OTHER
        assert tag_word("123", lex) is CoarsePos.OTHER

    def test_case_insensitive(self, lex):
        assert tag_word("Add", lex) is CoarsePos.VERB
        assert tag_word("THE", lex) is CoarsePos.STOPWORD


class TestFirstVerbIndex:
    def test_finds_first(self, lex):
        tags = tag(("please", "play", "some", "jazz"), lex)
        assert first_verb_index(tags) == 1

    def test_none_when_verbless(self, lex):
        tags = tag(("what", "is", "the", "weather"), lex)
        assert first_verb_index(tags) is None

    def test_auxiliaries_are_not_verbs(self, lex):
        # "can" is a stopword, so the content verb is found instead
        tags = tag(("can", "you", "play", "jazz"), lex)
        assert first_verb_index(tags) == 2


class TestLoaders:
    def test_bundled_lexicon_count_matches_file(self, lex):
        from slotperturb.resources import resource_path

        lines = resource_path("pos_lexicon.tsv").read_text().split("\n")
        expected = sum(
            1 for ln in lines if ln.strip() and not ln.startswith("#")
        )
        assert len(lex.entries) == expected
        assert expected > 1500

    def test_bundled_stopword_anchors(self, lex):
        assert {"to", "the", "a", "their", "our"} <= lex.stopwords
        # deliberately absent so they are droppable by inventory checks
        # and taggable as content words
        assert {"also", "still", "well", "second", "third"}.isdisjoint(
            lex.stopwords
        )

    def test_duplicate_entry_warns_last_wins(self, tmp_path, caplog):
        p = tmp_path / "lex.tsv"
        p.write_text("word\tVERB\nword\tNOUN\n")
        with caplog.at_level(logging.WARNING):
            loaded = load_pos_lexicon(p)
        assert loaded.entries["word"] is CoarsePos.NOUN
        assert any("duplicate" in r.message for r in caplog.records)

    def test_malformed_line_reports_number(self, tmp_path):
        p = tmp_path / "lex.tsv"
        p.write_text("good\tVERB\nbad line no tab\n")
        with pytest.raises(ParseError) as e:
            load_pos_lexicon(p)
        assert e.value.line == 2

    def test_unknown_pos_rejected(self, tmp_path):
        p = tmp_path / "lex.tsv"
        p.write_text("word\tVRB\n")
        with pytest.raises(ParseError):
            load_pos_lexicon(p)

    def test_stopword_loader(self, tmp_path):
        p = tmp_path / "stop.txt"
        p.write_text("# comment\nthe\na\n\nof\n")
        assert load_stopwords(p) == frozenset({"the", "a", "of"})

    def test_tag_overrides_loader(self, tmp_path):
        p = tmp_path / "overrides.tsv"
        p.write_text("u1\tVERB NOUN O\n")
        # O is not a coarse class; expect a parse failure
        with pytest.raises(ParseError):
            load_tag_overrides(p)
        p.write_text("u1\tVERB NOUN OTHER\n")
        got = load_tag_overrides(p)
        assert got["u1"] == (CoarsePos.VERB, CoarsePos.NOUN, CoarsePos.OTHER)
