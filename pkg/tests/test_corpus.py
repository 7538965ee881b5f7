import pytest

from slotperturb.corpus import (
    Dataset,
    Token,
    Utterance,
    chunks,
    parse_conll,
    parse_two_column,
    validate_bio,
    write_conll,
)
from slotperturb.errors import BioError, ParseError, StructuralError

from corpusgen import make_dataset
from oracles import ref_gold_chunks


def u(intent, *pairs, uid="x"):
    return Utterance(
        id=uid, intent=intent,
        tokens=tuple(Token(s, t) for s, t in pairs),
    )


class TestToken:
    def test_rejects_whitespace_surface(self):
        with pytest.raises(ValueError):
            Token("two words", "O")

    def test_rejects_bad_tag(self):
        for bad in ("B", "B-", "I", "i-x", "o", "B x", ""):
            with pytest.raises(ValueError):
                Token("w", bad)

    def test_accepts_canonical_tags(self):
        Token("w", "O")
        Token("w", "B-playlist")
        Token("w", "I-music_item")


class TestUtterance:
    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            Utterance(id="e", intent="i", tokens=())

    def test_surfaces_tags_text(self):
        utt = u("play_music", ("play", "O"), ("jazz", "B-genre"))
        assert utt.surfaces == ("play", "jazz")
        assert utt.tags == ("O", "B-genre")
        assert utt.text() == "play jazz"
        assert len(utt) == 2


class TestValidateBio:
    def test_valid_sequences_pass(self):
        ok = u("i", ("a", "O"), ("b", "B-x"), ("c", "I-x"), ("d", "B-x"),
               ("e", "B-y"), ("f", "O"))
        assert validate_bio(ok) == []

    def test_initial_dangling_i(self):
        bad = u("i", ("a", "I-x"), ("b", "O"))
        diags = validate_bio(bad)
        assert [d.token_index for d in diags] == [0]
        assert diags[0].rule == "dangling-I"

    def test_label_switch_without_b(self):
        bad = u("i", ("a", "B-x"), ("b", "I-y"))
        diags = validate_bio(bad)
        assert [d.token_index for d in diags] == [1]

    def test_resync_reports_single_break_once(self):
        # one broken transition, then a legal continuation of the same run
        bad = u("i", ("a", "O"), ("b", "I-x"), ("c", "I-x"))
        diags = validate_bio(bad)
        assert [d.token_index for d in diags] == [1]

    def test_two_separate_breaks_two_diagnostics(self):
        bad = u("i", ("a", "I-x"), ("b", "O"), ("c", "I-y"))
        diags = validate_bio(bad)
        assert [d.token_index for d in diags] == [0, 2]


class TestChunks:
    def test_reference_sentence_chunks(self, reference_sentence):
        got = [(c.label, c.start, c.end) for c in chunks(reference_sentence)]
        assert got == [("music_item", 1, 2), ("playlist", 3, 6)]

    def test_adjacent_chunks_same_label(self):
        utt = u("i", ("a", "B-x"), ("b", "B-x"), ("c", "I-x"))
        got = [(c.label, c.start, c.end) for c in chunks(utt)]
        assert got == [("x", 0, 1), ("x", 1, 3)]

    def test_trailing_chunk_closed(self):
        utt = u("i", ("a", "O"), ("b", "B-x"), ("c", "I-x"))
        assert [(c.label, c.start, c.end) for c in chunks(utt)] == [("x", 1, 3)]

    def test_matches_reference_extractor_on_generated_corpus(self):
        d = make_dataset(seed=11, n=200)
        for utt in d:
            got = {(c.label, c.start, c.end) for c in chunks(utt)}
            assert got == ref_gold_chunks(utt.tags), utt.id


class TestDataset:
    def test_duplicate_ids_rejected(self):
        a = u("i", ("w", "O"), uid="same")
        b = u("i", ("v", "O"), uid="same")
        with pytest.raises(StructuralError):
            Dataset.from_utterances("d", [a, b])

    def test_bio_invalid_utterance_rejected(self):
        bad = u("i", ("a", "I-x"), uid="bad")
        with pytest.raises(BioError):
            Dataset.from_utterances("d", [bad])

    def test_inventories_computed(self):
        d = make_dataset(seed=3, n=50)
        assert d.intent_inventory == {utt.intent for utt in d}
        tags = {
            t[2:] for utt in d for t in utt.tags if t != "O"
        }
        assert d.slot_inventory == tags

    def test_inventory_mismatch_rejected(self):
        utt = u("i", ("w", "B-x"), uid="a")
        with pytest.raises(StructuralError):
            Dataset("d", (utt,), frozenset({"i"}), frozenset({"x", "ghost"}))

    def test_by_id(self):
        d = make_dataset(seed=3, n=10)
        assert set(d.by_id()) == {utt.id for utt in d}


class TestConllRoundTrip:
    def test_round_trip_identity(self):
        d = make_dataset(seed=5, n=200)
        again = parse_conll(write_conll(d), name=d.name)
        assert again == d

    def test_known_serialization(self, reference_sentence):
        d = Dataset.from_utterances("demo", [reference_sentence])
        assert write_conll(d) == (
            "# intent=AddToPlaylist id=ref-1\n"
            "add\tO\n"
            "tune\tB-music_item\n"
            "to\tO\n"
            "sxsw\tB-playlist\n"
            "fresh\tI-playlist\n"
            "playlist\tI-playlist\n"
            "\n"
        )

    def test_empty_dataset_serializes_empty(self):
        assert write_conll(Dataset.from_utterances("e", [])) == ""


class TestParseConllErrors:
    def test_header_without_tokens(self):
        with pytest.raises(ParseError) as e:
            parse_conll("# intent=a id=b\n\n")
        assert "no tokens" in str(e.value)

    def test_token_before_header(self):
        with pytest.raises(ParseError):
            parse_conll("word\tO\n")

    def test_malformed_header(self):
        with pytest.raises(ParseError):
            parse_conll("# intent only\nword\tO\n\n")

    def test_header_inside_block(self):
        text = "# intent=a id=b\nword\tO\n# intent=c id=d\n"
        with pytest.raises(ParseError):
            parse_conll(text)

    def test_bad_tag_reports_line(self):
        text = "# intent=a id=b\nword\tB\n\n"
        with pytest.raises(ParseError) as e:
            parse_conll(text)
        assert e.value.line == 2

    def test_missing_tab(self):
        with pytest.raises(ParseError):
            parse_conll("# intent=a id=b\nword O-no-tab-here\n\n")

    def test_dangling_i_raises_bio_error(self):
        text = "# intent=a id=b\nword\tI-x\n\n"
        with pytest.raises(BioError):
            parse_conll(text)

    def test_duplicate_id_raises_structural(self):
        text = (
            "# intent=a id=b\nw\tO\n\n"
            "# intent=a id=b\nv\tO\n\n"
        )
        with pytest.raises(StructuralError):
            parse_conll(text)


class TestParseTwoColumn:
    def test_basic_import(self):
        tags = "play\tO\njazz\tB-genre\n\nhello\tO\n"
        intents = "play_music\ngreet\n"
        d = parse_two_column(tags, intents, name="imp")
        assert [utt.intent for utt in d] == ["play_music", "greet"]
        assert d.utterances[0].id == "imp-00000"
        assert d.utterances[1].surfaces == ("hello",)

    def test_space_separated_fallback(self):
        d = parse_two_column("play O\njazz B-genre\n", "play_music\n")
        assert d.utterances[0].tags == ("O", "B-genre")

    def test_count_mismatch(self):
        with pytest.raises(StructuralError):
            parse_two_column("w\tO\n", "a\nb\n")


class TestProvenance:
    def test_provenance_record_shape(self, bundle, reference_sentence):
        from slotperturb.operators import OperatorId, apply_operator

        pu = apply_operator(reference_sentence, OperatorId.BOS_FILLER,
                            bundle, seed=4)
        rec = pu.provenance()
        assert rec["origin_id"] == "ref-1"
        assert rec["operator"] == "bos_filler"
        assert rec["noop"] is False
        assert rec["edit_site"] == 0
        assert isinstance(rec["detail"], dict)
        assert list(rec["detail"]) == sorted(rec["detail"])
