"""Builders for per-operator, Random and Hard perturbed evaluation sets.

All builders preserve utterance count, order and intents. Randomness is
keyed per (master seed, replicate, utterance index), so results are
bit-identical regardless of processing order or worker count.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .corpus import Dataset, PerturbedUtterance
from .errors import CoverageError, OperatorError, ParseError, StructuralError, ToolkitError
from .operators import apply_operator
from .operators.base import DISPLAY_NAMES, SPOKEN_OPERATORS, OperatorId, rename
from .resources import ResourceBundle
from .seeding import derive_seed, rng_for


def canonical_json(obj, pretty: bool = False) -> str:
    """Deterministic JSON: sorted keys, stable separators, no trailing noise."""
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


@dataclass(frozen=True)
class BuiltSet:
    """A perturbed dataset plus the provenance records that produced it."""

    dataset: Dataset
    perturbations: tuple[PerturbedUtterance, ...]

    def provenance_jsonl(self) -> str:
        lines = [canonical_json(p.provenance()) for p in self.perturbations]
        return "\n".join(lines) + "\n" if lines else ""


@dataclass(frozen=True)
class ConfidenceTable:
    """(utterance id, operator) -> true-class probability."""

    scores: dict[tuple[str, OperatorId], float]

    def __post_init__(self):
        for (uid, op), p in self.scores.items():
            if not 0.0 <= p <= 1.0:
                raise StructuralError(
                    f"confidence for ({uid!r}, {op.value}) out of [0,1]: {p}"
                )

    def __contains__(self, key: tuple[str, OperatorId]) -> bool:
        return key in self.scores

    def __getitem__(self, key: tuple[str, OperatorId]) -> float:
        return self.scores[key]

    def gaps(
        self, d: Dataset, operators: tuple[OperatorId, ...] = SPOKEN_OPERATORS
    ) -> list[tuple[str, str]]:
        """Missing (id, operator) pairs, in dataset-then-operator order."""
        return [
            (u.id, op.value)
            for u in d.utterances
            for op in operators
            if (u.id, op) not in self.scores
        ]

    @classmethod
    def from_jsonl(cls, text: str) -> "ConfidenceTable":
        scores: dict[tuple[str, OperatorId], float] = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
                uid = rec["id"]
                op = OperatorId(rec["operator"])
                conf = float(rec["confidence"])
            except (KeyError, TypeError, ValueError, json.JSONDecodeError) as e:
                raise ParseError(f"bad confidence record: {e}", line=lineno) from None
            if (uid, op) in scores:
                raise StructuralError(
                    f"duplicate confidence record for ({uid!r}, {op.value})"
                )
            if not 0.0 <= conf <= 1.0:
                raise ParseError(
                    f"confidence out of [0,1]: {conf}", line=lineno
                )
            scores[(uid, op)] = conf
        return cls(scores)

    @classmethod
    def from_path(cls, path: str | Path) -> "ConfidenceTable":
        return cls.from_jsonl(Path(path).read_text(encoding="utf-8"))

    def to_jsonl(self) -> str:
        lines = [
            canonical_json({"id": uid, "operator": op.value, "confidence": conf})
            for (uid, op), conf in sorted(
                self.scores.items(), key=lambda kv: (kv[0][0], kv[0][1].value)
            )
        ]
        return "\n".join(lines) + "\n" if lines else ""


@dataclass(frozen=True)
class CompositionReport:
    """Per-operator share of utterances in a built set (percent of total)."""

    counts: dict[OperatorId, int]
    total: int

    def percentages(self) -> dict[OperatorId, float]:
        if self.total == 0:
            return {op: 0.0 for op in self.counts}
        return {op: 100.0 * n / self.total for op, n in self.counts.items()}

    def render(self) -> str:
        width = max((len(DISPLAY_NAMES[op]) for op in self.counts), default=8)
        lines = [f"{'Operator':<{width}}  Share"]
        pcts = self.percentages()
        for op in self.counts:
            lines.append(f"{DISPLAY_NAMES[op]:<{width}}  {pcts[op]:5.1f}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        pcts = self.percentages()
        return {
            "total": self.total,
            "rows": [
                {
                    "operator": op.value,
                    "display": DISPLAY_NAMES[op],
                    "count": self.counts[op],
                    "percent": round(pcts[op], 4),
                }
                for op in self.counts
            ],
        }


def _apply_with_context(u, op, resources, seed) -> PerturbedUtterance:
    try:
        return apply_operator(u, op, resources, seed)
    except ToolkitError as e:
        raise OperatorError(
            f"utterance {u.id!r}, operator {op.value}: {e}"
        ) from e


def _map_indexed(fn, items, workers: int) -> list:
    """Apply fn(index, item) in index order, optionally across threads.

    Every item derives its own seed from its index, so the worker count
    can never change the result, only the wall time.
    """
    if workers <= 1:
        return [fn(i, u) for i, u in enumerate(items)]
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, range(len(items)), items))


def build_single_operator_set(
    d: Dataset, op: OperatorId, seed: int, resources: ResourceBundle,
    workers: int = 1,
) -> BuiltSet:
    """Apply one operator once to every utterance; ids gain an operator tag."""
    def one(i, u):
        pu = _apply_with_context(u, op, resources, derive_seed(seed, op.value, i))
        return rename(pu, f"{u.id}~{op.value}")

    perturbations = _map_indexed(one, d.utterances, workers)
    return BuiltSet(
        dataset=Dataset.from_utterances(
            f"{d.name}~{op.value}", [p.base for p in perturbations]
        ),
        perturbations=tuple(perturbations),
    )


def build_random_set(
    d: Dataset,
    seed: int,
    replicates: int = 10,
    resources: ResourceBundle | None = None,
    operators: tuple[OperatorId, ...] = SPOKEN_OPERATORS,
    workers: int = 1,
) -> list[BuiltSet]:
    """One uniformly drawn operator per utterance, repeated per replicate.

    Replicate r and utterance i draw from a generator keyed by
    (seed, r, i); the application itself is keyed by the same triple plus
    the drawn operator, so outputs do not depend on evaluation order.
    """
    if replicates < 1:
        raise OperatorError(f"replicates must be >= 1, got {replicates}")
    if not operators:
        raise OperatorError("operator group is empty")
    if resources is None:
        from .resources import default_bundle

        resources = default_bundle()
    sets = []
    for r in range(replicates):
        def one(i, u, r=r):
            rng = rng_for(seed, r, i)
            op = operators[rng.randrange(len(operators))]
            pu = _apply_with_context(
                u, op, resources, derive_seed(seed, r, i, op.value)
            )
            return rename(pu, f"{u.id}~r{r}")

        perturbations = _map_indexed(one, d.utterances, workers)
        sets.append(BuiltSet(
            dataset=Dataset.from_utterances(
                f"{d.name}~r{r}", [p.base for p in perturbations]
            ),
            perturbations=tuple(perturbations),
        ))
    return sets


def build_hard_set(
    d: Dataset,
    table: ConfidenceTable,
    seed: int,
    resources: ResourceBundle,
    operators: tuple[OperatorId, ...] = SPOKEN_OPERATORS,
    workers: int = 1,
) -> tuple[BuiltSet, CompositionReport]:
    """Per utterance, apply the operator with the lowest confidence score.

    Requires full (id, operator) coverage; ties break by the operator
    group's declared order.
    """
    gaps = table.gaps(d, operators)
    if gaps:
        raise CoverageError(gaps)
    order = {op: k for k, op in enumerate(operators)}

    def one(i, u):
        op = min(operators, key=lambda o: (table[(u.id, o)], order[o]))
        pu = _apply_with_context(
            u, op, resources, derive_seed(seed, "hard", i, op.value)
        )
        return op, rename(pu, f"{u.id}~hard")

    counts = {op: 0 for op in operators}
    perturbations = []
    for op, pu in _map_indexed(one, d.utterances, workers):
        counts[op] += 1
        perturbations.append(pu)
    built = BuiltSet(
        dataset=Dataset.from_utterances(
            f"{d.name}~hard", [p.base for p in perturbations]
        ),
        perturbations=tuple(perturbations),
    )
    return built, CompositionReport(counts=counts, total=len(d.utterances))
