import pytest

from oracles import ref_levenshtein
from slotperturb.errors import OperatorError, ParseError
from slotperturb.phonetics import (
    PHONEME_INVENTORY,
    PhonemeSeq,
    PhoneticLexicon,
    _levenshtein,
    grapheme_to_phonemes,
    load_ipa_table,
    load_phonetic_lexicon,
    nearest_speako,
    nearest_speako_with_distance,
    phoneme_distance,
    to_ipa,
    to_phonemes,
)
from slotperturb.resources import resource_path
from slotperturb.seeding import rng_for


def seq(*symbols):
    return PhonemeSeq(tuple(symbols))


class TestPhonemeSeq:
    def test_rejects_unknown_symbol(self):
        with pytest.raises(ValueError, match="unknown phoneme"):
            seq("W", "AA1", "CH")

    def test_str_and_len(self):
        s = seq("W", "AA", "CH")
        assert str(s) == "W AA CH"
        assert len(s) == 3


class TestGraphemeFallback:
    @pytest.mark.parametrize(
        "word, expected",
        [
            ("watch", ("W", "AE", "CH")),
            ("tune", ("T", "AH", "N")),
            ("phone", ("F", "AA", "N")),
            ("seen", ("S", "IY", "N")),
            ("quick", ("K", "W", "IH", "K")),
            ("night", ("N", "AY", "T")),
            ("jazz", ("JH", "AE", "Z")),
            ("happy", ("HH", "AE", "P", "IY")),
            ("kneel", ("N", "IY", "L")),
            # the final-e drop applies before group matching
            ("see", ("S", "EH")),
            ("sky", ("S", "K", "IY")),
            ("yes", ("Y", "EH", "S")),
            # final 'e' kept when no earlier vowel exists
            ("the", ("TH", "EH")),
            ("be", ("B", "EH")),
            # non-letters are dropped before conversion
            ("can't", ("K", "AE", "N", "T")),
            ("taxi", ("T", "AE", "K", "S", "IH")),
        ],
    )
    def test_hand_derived(self, word, expected):
        assert grapheme_to_phonemes(word).symbols == expected

    def test_always_within_inventory(self):
        rng = rng_for("g2p-fuzz")
        letters = "abcdefghijklmnopqrstuvwxyz"
        for _ in range(300):
            word = "".join(
                rng.choice(letters) for _ in range(rng.randint(1, 10))
            )
            got = grapheme_to_phonemes(word)
            assert set(got.symbols) <= PHONEME_INVENTORY

    def test_to_phonemes_prefers_lexicon(self, bundle):
        lex = bundle.phonetic_lexicon
        assert to_phonemes("watch", lex).symbols == ("W", "AA", "CH")
        # rule fallback differs from the curated pronunciation
        assert grapheme_to_phonemes("watch").symbols == ("W", "AE", "CH")

    def test_to_phonemes_rejects_empty(self, bundle):
        with pytest.raises(ValueError):
            to_phonemes("", bundle.phonetic_lexicon)


class TestDistance:
    def test_hand_cases(self):
        a = seq("W", "AA", "CH")
        assert phoneme_distance(a, a) == 0
        assert phoneme_distance(a, seq("W", "IH", "CH")) == 1
        assert phoneme_distance(a, seq("W", "AA")) == 1
        assert phoneme_distance(seq("T", "UW", "N"), seq("JH", "UW", "N")) == 1
        assert phoneme_distance(PhonemeSeq(()), seq("AA", "B")) == 2

    def test_matches_reference_dp(self):
        rng = rng_for("lev-fuzz")
        inventory = sorted(PHONEME_INVENTORY)
        for _ in range(2000):
            a = tuple(rng.choice(inventory) for _ in range(rng.randint(0, 8)))
            b = tuple(rng.choice(inventory) for _ in range(rng.randint(0, 8)))
            assert phoneme_distance(PhonemeSeq(a), PhonemeSeq(b)) == \
                ref_levenshtein(a, b)

    def test_limit_caps_result(self):
        a = ("W", "AA", "CH", "IH", "NG")
        b = ("B", "IY",)
        exact = ref_levenshtein(a, b)
        assert _levenshtein(a, b, limit=None) == exact
        assert _levenshtein(a, b, limit=exact) == exact
        assert _levenshtein(a, b, limit=exact - 1) == exact
        assert _levenshtein(a, b, limit=1) == 2

    def test_limit_never_changes_decisions(self):
        # any distance at or below the limit must still be exact
        rng = rng_for("lev-limit-fuzz")
        inventory = sorted(PHONEME_INVENTORY)
        for _ in range(500):
            a = tuple(rng.choice(inventory) for _ in range(rng.randint(0, 6)))
            b = tuple(rng.choice(inventory) for _ in range(rng.randint(0, 6)))
            exact = ref_levenshtein(a, b)
            limit = rng.randint(0, 7)
            got = _levenshtein(a, b, limit=limit)
            if exact <= limit:
                assert got == exact
            else:
                assert got == limit + 1


class TestNearestSpeako:
    def test_watch_maps_to_which(self, bundle):
        word, dist = nearest_speako_with_distance(
            "watch", bundle.phonetic_lexicon
        )
        assert word == "which"
        assert dist == 1

    def test_homophones_at_distance_zero(self, bundle):
        word, dist = nearest_speako_with_distance("sea", bundle.phonetic_lexicon)
        assert dist == 0
        assert word == "see"

    def test_out_of_lexicon_word_uses_fallback_sound(self, bundle):
        # not bundled, so the neighbor is computed from rule phonemes
        lex = bundle.phonetic_lexicon
        assert "tua" not in lex.entries
        got = nearest_speako("tua", lex)
        assert got in lex.entries

    def test_tie_breaks_by_frequency_then_word(self):
        base = {"aim": (seq("EY", "M"), 10)}
        # both candidates sit at distance 1 from "aim"
        lex = PhoneticLexicon(
            entries={**base,
                     "same": (seq("S", "EY", "M"), 50),
                     "game": (seq("G", "EY", "M"), 20)},
            min_frequency=1,
        )
        assert nearest_speako("aim", lex) == "same"
        lex = PhoneticLexicon(
            entries={**base,
                     "same": (seq("S", "EY", "M"), 20),
                     "game": (seq("G", "EY", "M"), 20)},
            min_frequency=1,
        )
        assert nearest_speako("aim", lex) == "game"

    def test_never_returns_the_word_itself(self, bundle):
        lex = bundle.phonetic_lexicon
        for word in ("watch", "tune", "play", "the"):
            assert nearest_speako(word, lex) != word

    def test_requires_another_candidate(self):
        lex = PhoneticLexicon(
            entries={"solo": (seq("S", "OW", "L", "OW"), 5)}, min_frequency=1
        )
        with pytest.raises(OperatorError):
            nearest_speako("solo", lex)

    def test_cache_is_consistent(self, bundle):
        lex = bundle.phonetic_lexicon
        first = nearest_speako_with_distance("watch", lex)
        assert nearest_speako_with_distance("watch", lex) == first


class TestLexiconValidation:
    def test_rejects_uppercase_word(self):
        with pytest.raises(ValueError, match="lowercase"):
            PhoneticLexicon(entries={"Watch": (seq("W", "AA", "CH"), 10)},
                            min_frequency=1)

    def test_rejects_below_threshold(self):
        with pytest.raises(ValueError, match="threshold"):
            PhoneticLexicon(entries={"watch": (seq("W", "AA", "CH"), 10)},
                            min_frequency=100)

    def test_rejects_empty_pronunciation(self):
        with pytest.raises(ValueError, match="empty"):
            PhoneticLexicon(entries={"watch": (PhonemeSeq(()), 10)},
                            min_frequency=1)


class TestLoaders:
    PRON = "# header\nwatch\tW AA CH\nwhich\tW IH CH\nthee\tDH IY\n"
    FREQ = "watch\t5000\nwhich\t9000\nthee\t500\n"

    def write(self, tmp_path, pron=PRON, freq=FREQ):
        p = tmp_path / "pron.tsv"
        f = tmp_path / "freq.tsv"
        p.write_text(pron)
        f.write_text(freq)
        return p, f

    def test_threshold_drops_rare_words(self, tmp_path):
        p, f = self.write(tmp_path)
        lex = load_phonetic_lexicon(p, f, min_frequency=1000)
        assert set(lex.entries) == {"watch", "which"}
        low = load_phonetic_lexicon(p, f, min_frequency=400)
        assert set(low.entries) == {"watch", "which", "thee"}

    def test_word_missing_from_frequency_file_is_dropped(self, tmp_path):
        p, f = self.write(tmp_path, freq="watch\t5000\n")
        lex = load_phonetic_lexicon(p, f, min_frequency=1000)
        assert set(lex.entries) == {"watch"}

    def test_bad_pronunciation_line(self, tmp_path):
        p, f = self.write(tmp_path, pron="watch W AA CH\n")
        with pytest.raises(ParseError) as e:
            load_phonetic_lexicon(p, f)
        assert e.value.line == 1

    def test_unknown_symbol_reports_line(self, tmp_path):
        p, f = self.write(tmp_path, pron="watch\tW AA CH\nwhich\tW IH0 CH\n")
        with pytest.raises(ParseError) as e:
            load_phonetic_lexicon(p, f)
        assert e.value.line == 2

    def test_bad_count(self, tmp_path):
        p, f = self.write(tmp_path, freq="watch\tmany\n")
        with pytest.raises(ParseError):
            load_phonetic_lexicon(p, f)
        p, f = self.write(tmp_path, freq="watch\t0\n")
        with pytest.raises(ParseError, match="positive"):
            load_phonetic_lexicon(p, f)

    def test_bundled_lexicon_shape(self, bundle):
        lex = bundle.phonetic_lexicon
        assert len(lex) > 1500
        for anchor in ("watch", "which", "tune", "june", "playlist"):
            assert anchor in lex.entries
        # sub-threshold archaisms in the raw files must not survive loading
        for rare in ("thee", "thou", "whence", "hither", "betwixt"):
            assert rare not in lex.entries


class TestIpa:
    def test_render(self, bundle):
        table = bundle and load_ipa_table(resource_path("arpabet_ipa.tsv"))
        assert to_ipa(seq("W", "AA", "CH"), table) == "wɑtʃ"
        assert to_ipa(seq("W", "IH", "CH"), table) == "wɪtʃ"

    def test_full_inventory_covered(self):
        table = load_ipa_table(resource_path("arpabet_ipa.tsv"))
        assert set(table) == set(PHONEME_INVENTORY)

    def test_unknown_symbol_passes_through(self):
        assert to_ipa(seq("W", "AA"), {"W": "w"}) == "wAA"
