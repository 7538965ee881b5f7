"""Scoring predictions against gold datasets.

Slot F1 is chunk-exact and micro-averaged: a predicted chunk counts only
when label, start and end all match a gold chunk. Intent accuracy is
plain label agreement. E2E accuracy is the strict sentence-level metric:
intent correct AND every slot tag correct. Reports aggregate over
replicates as mean plus population variance.
"""

from __future__ import annotations

import statistics
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import json

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .builders import ConfidenceTable, build_single_operator_set, canonical_json
from .corpus import _TAG_RE, Dataset, Utterance, chunks
from .errors import JoinError, ParseError, StructuralError
from .operators.base import SPOKEN_OPERATORS, OperatorId
from .resources import ResourceBundle


@dataclass(frozen=True, slots=True)
class Prediction:
    """One model output: utterance id, intent label, per-token slot tags."""

    utterance_id: str
    intent: str
    slot_tags: tuple[str, ...]

    def __post_init__(self):
        for t in self.slot_tags:
            if not _TAG_RE.match(t):
                raise ValueError(
                    f"prediction {self.utterance_id!r} has bad slot tag {t!r}"
                )


@dataclass(frozen=True)
class ScoreReport:
    """All metrics for one (gold, predictions) pair."""

    slot_precision: float
    slot_recall: float
    slot_f1: float
    intent_accuracy: float
    e2e_accuracy: float
    tp: int
    fp: int
    fn: int
    n_utterances: int
    degenerate: tuple[str, ...] = ()

    NUMERIC_FIELDS = (
        "slot_precision", "slot_recall", "slot_f1",
        "intent_accuracy", "e2e_accuracy", "tp", "fp", "fn", "n_utterances",
    )

    def numeric(self) -> dict[str, float]:
        return {f: float(getattr(self, f)) for f in self.NUMERIC_FIELDS}

    def to_json(self) -> dict:
        return {
            "slot_precision": self.slot_precision,
            "slot_recall": self.slot_recall,
            "slot_f1": self.slot_f1,
            "intent_accuracy": self.intent_accuracy,
            "e2e_accuracy": self.e2e_accuracy,
            "chunk_counts": {"tp": self.tp, "fp": self.fp, "fn": self.fn},
            "n_utterances": self.n_utterances,
            "degenerate": list(self.degenerate),
        }


#: Shape of ScoreReport.to_json(), for validating emitted report files.
REPORT_JSON_SCHEMA = {
    "type": "object",
    "required": [
        "slot_precision", "slot_recall", "slot_f1", "intent_accuracy",
        "e2e_accuracy", "chunk_counts", "n_utterances", "degenerate",
    ],
    "properties": {
        "slot_precision": {"type": "number", "minimum": 0, "maximum": 1},
        "slot_recall": {"type": "number", "minimum": 0, "maximum": 1},
        "slot_f1": {"type": "number", "minimum": 0, "maximum": 1},
        "intent_accuracy": {"type": "number", "minimum": 0, "maximum": 1},
        "e2e_accuracy": {"type": "number", "minimum": 0, "maximum": 1},
        "chunk_counts": {
            "type": "object",
            "required": ["tp", "fp", "fn"],
            "properties": {
                "tp": {"type": "integer", "minimum": 0},
                "fp": {"type": "integer", "minimum": 0},
                "fn": {"type": "integer", "minimum": 0},
            },
        },
        "n_utterances": {"type": "integer", "minimum": 0},
        "degenerate": {"type": "array", "items": {"type": "string"}},
    },
}


def pred_chunks(
    tags: tuple[str, ...] | list[str], repair: bool = False
) -> set[tuple[str, int, int]]:
    """Chunk set of a predicted tag sequence.

    Strict mode ignores orphan I- runs (no preceding B-); with ``repair``
    an orphan I-L is promoted to B-L before extraction.
    """
    out: set[tuple[str, int, int]] = set()
    start, label = -1, ""

    def close(end: int):
        nonlocal start
        if start >= 0:
            out.add((label, start, end))
        start = -1

    for i, t in enumerate(tags):
        if t.startswith("B-"):
            close(i)
            start, label = i, t[2:]
        elif t.startswith("I-"):
            lab = t[2:]
            if start >= 0 and label == lab:
                continue
            close(i)
            if repair:
                start, label = i, lab
        else:
            close(i)
    close(len(tags))
    return out


def _join(gold: Dataset, preds: list[Prediction]) -> list[tuple[Utterance, Prediction]]:
    by_id: dict[str, Prediction] = {}
    dupes = []
    for p in preds:
        if p.utterance_id in by_id:
            dupes.append(p.utterance_id)
        by_id[p.utterance_id] = p
    if dupes:
        raise JoinError("duplicate prediction ids", dupes)
    gold_ids = {u.id for u in gold.utterances}
    missing = [u.id for u in gold.utterances if u.id not in by_id]
    if missing:
        raise JoinError("gold utterances without predictions", missing)
    extra = [i for i in by_id if i not in gold_ids]
    if extra:
        raise JoinError("predictions without gold utterances", extra)
    mismatched = [
        u.id for u in gold.utterances if len(by_id[u.id].slot_tags) != len(u)
    ]
    if mismatched:
        raise JoinError("prediction length differs from gold", mismatched)
    return [(u, by_id[u.id]) for u in gold.utterances]


def score(
    gold: Dataset, preds: list[Prediction], repair: bool = False
) -> ScoreReport:
    """All metrics in one pass over the joined (gold, prediction) pairs."""
    pairs = _join(gold, preds)
    tp = fp = fn = 0
    intent_hits = 0
    e2e_hits = 0
    for u, p in pairs:
        gold_set = {(c.label, c.start, c.end) for c in chunks(u)}
        pred_set = pred_chunks(p.slot_tags, repair=repair)
        tp += len(gold_set & pred_set)
        fp += len(pred_set - gold_set)
        fn += len(gold_set - pred_set)
        intent_ok = u.intent == p.intent
        slots_ok = u.tags == tuple(p.slot_tags)
        intent_hits += intent_ok
        e2e_hits += intent_ok and slots_ok
    degenerate = []
    if tp + fp == 0:
        precision = 0.0
        degenerate.append("precision")
    else:
        precision = tp / (tp + fp)
    if tp + fn == 0:
        recall = 0.0
        degenerate.append("recall")
    else:
        recall = tp / (tp + fn)
    f1 = 0.0 if precision + recall == 0 else (
        2 * precision * recall / (precision + recall)
    )
    n = len(pairs)
    return ScoreReport(
        slot_precision=precision,
        slot_recall=recall,
        slot_f1=f1,
        intent_accuracy=intent_hits / n if n else 0.0,
        e2e_accuracy=e2e_hits / n if n else 0.0,
        tp=tp, fp=fp, fn=fn,
        n_utterances=n,
        degenerate=tuple(degenerate),
    )


def slot_f1(
    gold: Dataset, preds: list[Prediction], repair: bool = False
) -> tuple[float, float, float, dict[str, int]]:
    """(precision, recall, F1, chunk counts) under chunk-exact matching."""
    r = score(gold, preds, repair=repair)
    return r.slot_precision, r.slot_recall, r.slot_f1, {
        "tp": r.tp, "fp": r.fp, "fn": r.fn,
    }


def intent_accuracy(gold: Dataset, preds: list[Prediction]) -> float:
    return score(gold, preds).intent_accuracy


def e2e_accuracy(gold: Dataset, preds: list[Prediction]) -> float:
    return score(gold, preds).e2e_accuracy


@dataclass(frozen=True, slots=True)
class MeanVar:
    mean: float
    variance: float


def aggregate(reports: list[ScoreReport]) -> dict[str, MeanVar]:
    """Mean and population variance per numeric field over replicates."""
    if not reports:
        raise StructuralError("cannot aggregate an empty report list")
    out: dict[str, MeanVar] = {}
    for f in ScoreReport.NUMERIC_FIELDS:
        values = [float(getattr(r, f)) for r in reports]
        out[f] = MeanVar(
            mean=statistics.fmean(values),
            variance=statistics.pvariance(values),
        )
    return out


_RATIO_FIELDS = frozenset({
    "slot_precision", "slot_recall", "slot_f1", "intent_accuracy",
    "e2e_accuracy",
})


def render_report_table(rows: list[tuple[str, ScoreReport]]) -> str:
    """Aligned text table: one row per set, metric columns in percent."""
    name_w = max([len(name) for name, _ in rows] + [len("Set")])
    header = f"{'Set':<{name_w}}  {'Slot (F1)':>9}  {'Intent (Acc)':>12}  {'E2E (Acc)':>9}"
    lines = [header]
    for name, r in rows:
        lines.append(
            f"{name:<{name_w}}  {100 * r.slot_f1:9.2f}  "
            f"{100 * r.intent_accuracy:12.2f}  {100 * r.e2e_accuracy:9.2f}"
        )
    return "\n".join(lines) + "\n"


def render_aggregate(agg: dict[str, MeanVar]) -> str:
    """Mean ± variance block; ratio fields in percent (variance in pp^2)."""
    lines = []
    for f, mv in agg.items():
        if f in _RATIO_FIELDS:
            lines.append(f"{f:<16} {100 * mv.mean:8.2f} ±{10000 * mv.variance:.4f}")
        else:
            lines.append(f"{f:<16} {mv.mean:8.2f} ±{mv.variance:.4f}")
    return "\n".join(lines) + "\n"


def parse_predictions(text: str) -> list[Prediction]:
    """Parse JSONL records {"id", "intent", "slots"}."""
    preds = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            pred = Prediction(
                utterance_id=rec["id"],
                intent=rec["intent"],
                slot_tags=tuple(rec["slots"]),
            )
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as e:
            raise ParseError(f"bad prediction record: {e}", line=lineno) from None
        preds.append(pred)
    return preds


def load_predictions(path: str | Path) -> list[Prediction]:
    return parse_predictions(Path(path).read_text(encoding="utf-8"))


def write_predictions(preds: list[Prediction]) -> str:
    lines = [
        canonical_json({
            "id": p.utterance_id,
            "intent": p.intent,
            "slots": list(p.slot_tags),
        })
        for p in preds
    ]
    return "\n".join(lines) + "\n" if lines else ""


class MemorizingBaseline(BaseEstimator):
    """Majority-intent, per-surface most-frequent-tag memorizer.

    A deliberately trivial predictor so the perturb-and-score pipeline can
    run end to end (and emit confidence files) without an external model.
    Ties break deterministically: higher count, then lexicographic order.
    """

    def fit(self, X: Dataset, y=None):
        intent_counts = Counter(u.intent for u in X.utterances)
        if not intent_counts:
            raise StructuralError("cannot fit the baseline on an empty dataset")
        self.majority_intent_ = min(
            intent_counts, key=lambda it: (-intent_counts[it], it)
        )
        tag_counts: dict[str, Counter] = {}
        for u in X.utterances:
            for t in u.tokens:
                tag_counts.setdefault(t.surface, Counter())[t.slot_tag] += 1
        self.tag_memory_ = {
            surface: min(counts, key=lambda tg: (-counts[tg], tg))
            for surface, counts in tag_counts.items()
        }
        return self

    def predict(self, X) -> list[Prediction]:
        check_is_fitted(self, "tag_memory_")
        from .operators.base import as_utterances

        return [
            Prediction(
                utterance_id=u.id,
                intent=self.majority_intent_,
                slot_tags=tuple(
                    self.tag_memory_.get(s, "O") for s in u.surfaces
                ),
            )
            for u in as_utterances(X)
        ]

    def confidence(self, u: Utterance) -> float:
        """Memorization hit rate: fraction of surfaces seen during fit."""
        check_is_fitted(self, "tag_memory_")
        return sum(s in self.tag_memory_ for s in u.surfaces) / len(u)


def trivial_baseline_predict(train: Dataset, eval: Dataset) -> list[Prediction]:
    """Fit the memorizing baseline on train and predict eval."""
    return MemorizingBaseline().fit(train).predict(eval)


def baseline_confidences(
    train: Dataset,
    eval: Dataset,
    resources: ResourceBundle,
    seed: int,
    operators: tuple[OperatorId, ...] = SPOKEN_OPERATORS,
) -> ConfidenceTable:
    """Proxy confidence per (utterance, operator): the baseline's
    memorization hit rate on the operator-perturbed utterance."""
    model = MemorizingBaseline().fit(train)
    scores: dict[tuple[str, OperatorId], float] = {}
    for op in operators:
        built = build_single_operator_set(eval, op, seed, resources)
        for orig, pu in zip(eval.utterances, built.perturbations):
            scores[(orig.id, op)] = model.confidence(pu.base)
    return ConfidenceTable(scores)
