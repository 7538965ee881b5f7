"""Independent reference implementations the production code is checked
against.  Deliberately written in the most literal way possible (full DP
matrices, per-utterance set arithmetic) with no imports from the package's
algorithmic modules.
"""

from __future__ import annotations


def ref_levenshtein(a, b) -> int:
    """Textbook full-matrix edit distance over symbol sequences."""
    m, n = len(a), len(b)
    d = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(m + 1):
        d[i][0] = i
    for j in range(n + 1):
        d[0][j] = j
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            d[i][j] = min(
                d[i - 1][j] + 1,
                d[i][j - 1] + 1,
                d[i - 1][j - 1] + cost,
            )
    return d[m][n]


def ref_gold_chunks(tags) -> set[tuple[str, int, int]]:
    """Chunks of a valid BIO sequence: (label, start, end-exclusive)."""
    out = set()
    i = 0
    while i < len(tags):
        if tags[i].startswith("B-"):
            label = tags[i][2:]
            j = i + 1
            while j < len(tags) and tags[j] == f"I-{label}":
                j += 1
            out.add((label, i, j))
            i = j
        else:
            i += 1
    return out


def ref_pred_chunks(tags, repair: bool = False) -> set[tuple[str, int, int]]:
    """Chunk reading of an arbitrary tag sequence.

    Strict mode drops I- runs with no matching B- opener; repair mode
    treats such an I-L as if it were B-L.
    """
    fixed = list(tags)
    if repair:
        for i, t in enumerate(fixed):
            if t.startswith("I-"):
                prev = fixed[i - 1] if i > 0 else "O"
                if prev not in (f"B-{t[2:]}", f"I-{t[2:]}"):
                    fixed[i] = "B-" + t[2:]
    out = set()
    i = 0
    while i < len(fixed):
        if fixed[i].startswith("B-"):
            label = fixed[i][2:]
            j = i + 1
            while j < len(fixed) and fixed[j] == f"I-{label}":
                j += 1
            out.add((label, i, j))
            i = j
        else:
            i += 1
    return out


def ref_scores(gold_utts, preds_by_id, repair: bool = False) -> dict:
    """Micro P/R/F1 over chunks, intent accuracy, strict E2E accuracy."""
    tp = fp = fn = 0
    intent_hits = 0
    e2e_hits = 0
    slot_exact_hits = 0
    for u in gold_utts:
        p = preds_by_id[u.id]
        g = ref_gold_chunks(u.tags)
        q = ref_pred_chunks(p.slot_tags, repair=repair)
        tp += len(g & q)
        fp += len(q - g)
        fn += len(g - q)
        intent_ok = p.intent == u.intent
        slots_ok = tuple(p.slot_tags) == u.tags
        intent_hits += int(intent_ok)
        slot_exact_hits += int(slots_ok)
        e2e_hits += int(intent_ok and slots_ok)
    n = len(gold_utts)
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = (
        2 * precision * recall / (precision + recall)
        if precision + recall else 0.0
    )
    return {
        "slot_precision": precision,
        "slot_recall": recall,
        "slot_f1": f1,
        "intent_accuracy": intent_hits / n if n else 0.0,
        "e2e_accuracy": e2e_hits / n if n else 0.0,
        "slot_exact_rate": slot_exact_hits / n if n else 0.0,
        "tp": tp, "fp": fp, "fn": fn,
    }


def chi_square_statistic(counts: dict, expected: float) -> float:
    return sum((n - expected) ** 2 / expected for n in counts.values())
