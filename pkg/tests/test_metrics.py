import json

import pytest

from corpusgen import make_dataset
from oracles import ref_pred_chunks, ref_scores
from slotperturb.corpus import Dataset, Token, Utterance
from slotperturb.errors import JoinError, ParseError, StructuralError
from slotperturb.metrics import (
    MeanVar,
    MemorizingBaseline,
    Prediction,
    aggregate,
    baseline_confidences,
    e2e_accuracy,
    intent_accuracy,
    load_predictions,
    parse_predictions,
    pred_chunks,
    render_aggregate,
    render_report_table,
    score,
    slot_f1,
    trivial_baseline_predict,
    write_predictions,
)
from slotperturb.seeding import rng_for


def u(intent, *pairs, uid="x"):
    return Utterance(
        id=uid, intent=intent,
        tokens=tuple(Token(s, t) for s, t in pairs),
    )


def exact_preds(d, intent=None):
    return [
        Prediction(utterance_id=x.id, intent=intent or x.intent,
                   slot_tags=x.tags)
        for x in d.utterances
    ]


def noisy_preds(d, seed, flip=0.2):
    """Predictions with per-token tag noise and occasional wrong intents."""
    rng = rng_for("noisy-preds", seed)
    labels = sorted(d.slot_inventory) or ["thing"]
    intents = sorted(d.intent_inventory)
    preds = []
    for x in d.utterances:
        tags = []
        for t in x.tags:
            if rng.random() < flip:
                tags.append(rng.choice(
                    ["O"] + [p + l for p in ("B-", "I-") for l in labels]
                ))
            else:
                tags.append(t)
        intent = x.intent if rng.random() > 0.3 else rng.choice(intents)
        preds.append(Prediction(x.id, intent, tuple(tags)))
    return preds


class TestPredChunks:
    def test_strict_drops_orphan_runs(self):
        assert pred_chunks(["I-a", "I-a", "O"]) == set()
        assert pred_chunks(["O", "B-a", "I-a", "I-b"]) == {("a", 1, 3)}

    def test_repair_promotes_orphans(self):
        assert pred_chunks(["I-a", "I-a", "O"], repair=True) == {("a", 0, 2)}
        assert pred_chunks(["B-a", "I-b"], repair=True) == {
            ("a", 0, 1), ("b", 1, 2)
        }

    def test_adjacent_b_splits(self):
        assert pred_chunks(["B-a", "B-a"]) == {("a", 0, 1), ("a", 1, 2)}

    def test_matches_reference_extractor(self):
        rng = rng_for("pred-chunk-fuzz")
        alphabet = ["O", "B-a", "I-a", "B-b", "I-b"]
        for _ in range(500):
            tags = [rng.choice(alphabet) for _ in range(rng.randint(0, 8))]
            for repair in (False, True):
                assert pred_chunks(tags, repair=repair) == \
                    ref_pred_chunks(tags, repair=repair)


class TestScore:
    def test_perfect_predictions(self):
        d = make_dataset(seed=3, n=30)
        r = score(d, exact_preds(d))
        assert r.slot_precision == r.slot_recall == r.slot_f1 == 1.0
        assert r.intent_accuracy == r.e2e_accuracy == 1.0
        assert r.fp == r.fn == 0
        assert r.n_utterances == 30
        assert r.degenerate == ()

    def test_matches_reference_oracle_on_noise(self):
        for seed in range(5):
            d = make_dataset(seed=seed, n=40)
            preds = noisy_preds(d, seed)
            r = score(d, preds)
            want = ref_scores(
                d.utterances, {p.utterance_id: p for p in preds}, repair=False
            )
            assert r.slot_precision == want["slot_precision"]
            assert r.slot_recall == want["slot_recall"]
            assert r.slot_f1 == want["slot_f1"]
            assert r.intent_accuracy == want["intent_accuracy"]
            assert r.e2e_accuracy == want["e2e_accuracy"]
            assert (r.tp, r.fp, r.fn) == (want["tp"], want["fp"], want["fn"])

    def test_e2e_bounded_by_components(self):
        for seed in range(5):
            d = make_dataset(seed=100 + seed, n=40)
            preds = noisy_preds(d, seed)
            r = score(d, preds)
            want = ref_scores(
                d.utterances, {p.utterance_id: p for p in preds}, repair=False
            )
            assert r.e2e_accuracy <= r.intent_accuracy
            assert r.e2e_accuracy <= want["slot_exact_rate"]

    def test_wrong_intent_zeroes_e2e_not_slots(self):
        d = make_dataset(seed=8, n=10)
        r = score(d, exact_preds(d, intent="bogus_intent"))
        assert r.slot_f1 == 1.0
        assert r.intent_accuracy == 0.0
        assert r.e2e_accuracy == 0.0

    def test_degenerate_flags(self):
        d = Dataset.from_utterances(
            "g", [u("i", ("hello", "O"), uid="a")]
        )
        r = score(d, [Prediction("a", "i", ("O",))])
        assert set(r.degenerate) == {"precision", "recall"}
        assert r.slot_f1 == 0.0
        assert r.e2e_accuracy == 1.0

    def test_repair_changes_credit(self):
        d = Dataset.from_utterances(
            "g", [u("i", ("play", "O"), ("sxsw", "B-playlist"),
                    ("hits", "I-playlist"), uid="a")]
        )
        preds = [Prediction("a", "i", ("O", "I-playlist", "I-playlist"))]
        strict = score(d, preds)
        repaired = score(d, preds, repair=True)
        assert strict.tp == 0
        assert repaired.tp == 1
        # strict E2E still fails: the raw tags differ from gold
        assert repaired.e2e_accuracy == 0.0

    def test_convenience_wrappers(self):
        d = make_dataset(seed=4, n=15)
        preds = exact_preds(d)
        p, r, f, counts = slot_f1(d, preds)
        assert (p, r, f) == (1.0, 1.0, 1.0)
        assert counts["fp"] == 0 and counts["tp"] > 0
        assert intent_accuracy(d, preds) == 1.0
        assert e2e_accuracy(d, preds) == 1.0

    def test_to_json_matches_schema(self):
        import jsonschema

        from slotperturb.metrics import REPORT_JSON_SCHEMA

        d = make_dataset(seed=5, n=10)
        r = score(d, noisy_preds(d, 0))
        jsonschema.validate(r.to_json(), REPORT_JSON_SCHEMA)


class TestJoin:
    def setup_method(self):
        self.d = Dataset.from_utterances(
            "g", [u("i", ("a", "O"), uid="u1"), u("i", ("b", "O"), uid="u2")]
        )

    def test_duplicate_before_missing(self):
        preds = [Prediction("u1", "i", ("O",)), Prediction("u1", "i", ("O",))]
        with pytest.raises(JoinError, match="duplicate") as e:
            score(self.d, preds)
        assert e.value.ids == ["u1"]

    def test_missing(self):
        with pytest.raises(JoinError, match="without predictions") as e:
            score(self.d, [Prediction("u1", "i", ("O",))])
        assert e.value.ids == ["u2"]

    def test_extra(self):
        preds = [Prediction(i, "i", ("O",)) for i in ("u1", "u2", "u3")]
        with pytest.raises(JoinError, match="without gold") as e:
            score(self.d, preds)
        assert e.value.ids == ["u3"]

    def test_length_mismatch(self):
        preds = [Prediction("u1", "i", ("O", "O")),
                 Prediction("u2", "i", ("O",))]
        with pytest.raises(JoinError, match="length") as e:
            score(self.d, preds)
        assert e.value.ids == ["u1"]


class TestAggregate:
    def test_mean_and_population_variance(self):
        def report(x):
            return score(
                Dataset.from_utterances(
                    "g", [u("i", ("a", "O"), ("b", "B-l"), uid="a"),
                          u("j", ("c", "O"), uid="b")]
                ),
                [Prediction("a", "i", ("O", "B-l")),
                 Prediction("b", "j" if x else "wrong", ("O",))],
            )

        agg = aggregate([report(True), report(False)])
        assert agg["intent_accuracy"] == MeanVar(mean=0.75, variance=0.0625)
        assert agg["slot_f1"].variance == 0.0

    def test_empty_rejected(self):
        with pytest.raises(StructuralError):
            aggregate([])

    def test_render(self):
        agg = {"slot_f1": MeanVar(0.5, 0.01), "tp": MeanVar(7.0, 0.0)}
        out = render_aggregate(agg)
        assert "50.00" in out
        assert "±100.0000" in out
        assert "7.00" in out


class TestRenderReportTable:
    def test_shape(self):
        d = make_dataset(seed=6, n=10)
        r = score(d, exact_preds(d))
        out = render_report_table([("original", r), ("perturbed", r)])
        lines = out.strip().split("\n")
        assert lines[0].split() == [
            "Set", "Slot", "(F1)", "Intent", "(Acc)", "E2E", "(Acc)"
        ]
        assert len(lines) == 3
        assert "100.00" in lines[1]
        assert lines[1].startswith("original")


class TestPredictionIo:
    def test_round_trip(self, tmp_path):
        preds = [
            Prediction("a", "intent_x", ("O", "B-l", "I-l")),
            Prediction("b", "intent_y", ("O",)),
        ]
        text = write_predictions(preds)
        assert parse_predictions(text) == preds
        f = tmp_path / "preds.jsonl"
        f.write_text(text)
        assert load_predictions(f) == preds

    def test_record_shape(self):
        rec = json.loads(write_predictions(
            [Prediction("a", "i", ("O",))]
        ).strip())
        assert rec == {"id": "a", "intent": "i", "slots": ["O"]}

    def test_parse_errors(self):
        with pytest.raises(ParseError) as e:
            parse_predictions('{"id": "a", "intent": "i"}\n')
        assert e.value.line == 1
        with pytest.raises(ParseError):
            parse_predictions("not json\n")

    def test_bad_tag_rejected(self):
        with pytest.raises(ValueError, match="bad slot tag"):
            Prediction("a", "i", ("B",))

    def test_empty_list_serializes_empty(self):
        assert write_predictions([]) == ""


class TestMemorizingBaseline:
    def train_set(self):
        return Dataset.from_utterances("train", [
            u("play_music", ("play", "O"), ("jazz", "B-genre"), uid="t1"),
            u("play_music", ("play", "O"), ("rock", "B-genre"), uid="t2"),
            u("get_weather", ("weather", "O"), ("jazz", "B-genre"), uid="t3"),
            u("get_weather", ("cool", "B-genre"), ("jazz", "I-genre"), uid="t4"),
        ])

    def test_majority_intent_with_tie_break(self):
        model = MemorizingBaseline().fit(self.train_set())
        # 2 vs 2: lexicographically smaller label wins
        assert model.majority_intent_ == "get_weather"

    def test_tag_memory_majority_and_tie_break(self):
        model = MemorizingBaseline().fit(self.train_set())
        # jazz: B-genre twice, I-genre once
        assert model.tag_memory_["jazz"] == "B-genre"
        # play: only O
        assert model.tag_memory_["play"] == "O"

    def test_predict_unknown_surface_gets_o(self):
        model = MemorizingBaseline().fit(self.train_set())
        target = Dataset.from_utterances(
            "eval", [u("play_music", ("play", "O"), ("banana", "B-fruit"),
                       uid="e1")]
        )
        (pred,) = model.predict(target)
        assert pred.utterance_id == "e1"
        assert pred.intent == "get_weather"
        assert pred.slot_tags == ("O", "O")

    def test_unfitted_predict_rejected(self):
        from sklearn.exceptions import NotFittedError

        with pytest.raises(NotFittedError):
            MemorizingBaseline().predict(self.train_set())

    def test_empty_fit_rejected(self):
        with pytest.raises(StructuralError):
            MemorizingBaseline().fit(Dataset.from_utterances("e", []))

    def test_confidence_is_hit_rate(self):
        model = MemorizingBaseline().fit(self.train_set())
        probe = u("x", ("play", "O"), ("banana", "O"), ("jazz", "O"), uid="p")
        assert model.confidence(probe) == pytest.approx(2 / 3)

    def test_trivial_baseline_predict_is_self_consistent(self):
        train = make_dataset(seed=21, n=50)
        preds = trivial_baseline_predict(train, train)
        r = score(train, preds)
        # memorization cannot be worse than majority guessing on its own
        # training data
        assert r.intent_accuracy > 0.0
        assert r.slot_recall > 0.5


class TestBaselineConfidences:
    def test_table_is_complete_and_bounded(self, bundle):
        train = make_dataset(seed=30, n=40, name="train")
        eval_set = make_dataset(seed=31, n=12, name="eval")
        table = baseline_confidences(train, eval_set, bundle, seed=2)
        assert table.gaps(eval_set) == []
        assert all(0.0 <= v <= 1.0 for v in table.scores.values())

    def test_deterministic(self, bundle):
        train = make_dataset(seed=30, n=30, name="train")
        eval_set = make_dataset(seed=32, n=10, name="eval")
        a = baseline_confidences(train, eval_set, bundle, seed=5)
        b = baseline_confidences(train, eval_set, bundle, seed=5)
        assert a.scores == b.scores
