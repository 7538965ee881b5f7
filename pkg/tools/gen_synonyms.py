#!/usr/bin/env python3
"""Regenerate src/slotperturb/data/synonyms.tsv.

Most entries come from small synonym rings: every member of a ring maps to
the other members, in ring order starting after itself.  A handful of pinned
entries override ring output where a specific candidate order is wanted.
A word may appear in at most one ring (checked); pinned targets are free.

Run from the repository root:

    python3 tools/gen_synonyms.py
"""

from __future__ import annotations

from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / (
    "src/slotperturb/data/synonyms.tsv"
)

RINGS: list[list[str]] = [
    # verbs
    ["begin", "start", "commence"],
    ["stop", "halt", "cease"],
    ["get", "obtain", "receive"],
    ["make", "create", "produce"],
    ["show", "display", "present"],
    ["find", "locate", "discover"],
    ["like", "enjoy", "love"],
    ["need", "require"],
    ["want", "desire"],
    ["help", "assist", "aid"],
    ["ask", "request"],
    ["tell", "inform"],
    ["choose", "select", "pick"],
    ["remove", "delete", "erase"],
    ["search", "seek"],
    ["listen", "hear"],
    ["book", "reserve"],
    ["recommend", "suggest"],
    ["remember", "recall"],
    ["move", "shift"],
    ["send", "dispatch"],
    ["change", "alter", "modify"],
    ["turn", "rotate", "spin"],
    ["close", "shut"],
    ["play", "perform"],
    ["pause", "suspend"],
    ["resume", "continue"],
    ["save", "keep"],
    ["check", "verify"],
    ["watch", "see", "view"],
    ["take", "grab", "seize"],
    ["purchase", "acquire"],
    ["mix", "blend", "combine"],
    ["put", "place", "set"],
    # adjectives
    ["big", "huge", "giant"],
    ["small", "tiny", "little"],
    ["good", "great", "fine", "nice"],
    ["bad", "awful", "terrible"],
    ["happy", "glad", "cheerful"],
    ["sad", "unhappy", "gloomy"],
    ["quick", "rapid", "speedy", "swift"],
    ["hot", "warm"],
    ["cold", "cool", "chilly"],
    ["new", "modern", "recent"],
    ["old", "ancient", "aged"],
    ["pretty", "lovely", "beautiful"],
    ["funny", "hilarious", "amusing"],
    ["scary", "frightening", "creepy"],
    ["loud", "noisy"],
    ["quiet", "silent", "calm"],
    ["cheap", "inexpensive", "affordable"],
    ["expensive", "costly", "pricey"],
    ["near", "nearby"],
    ["far", "distant", "remote"],
    ["popular", "famous", "renowned"],
    ["strong", "powerful", "mighty"],
    ["high", "tall", "lofty"],
    ["wide", "broad"],
    ["narrow", "thin", "slim"],
    ["empty", "vacant"],
    ["full", "packed"],
    ["easy", "simple"],
    ["hard", "difficult", "tough"],
    # nouns
    ["tune", "melody", "song"],
    ["playlist", "album", "queue", "collection"],
    ["movie", "film", "flick"],
    ["photo", "picture", "snapshot"],
    ["house", "home", "residence"],
    ["car", "automobile", "vehicle"],
    ["job", "occupation", "profession"],
    ["store", "shop", "outlet"],
    ["food", "cuisine", "fare"],
    ["trip", "journey", "voyage"],
    ["gift", "offering"],
    ["friend", "pal", "buddy"],
    ["kid", "child", "youngster"],
    ["money", "cash", "funds"],
    ["doctor", "physician"],
    ["weather", "climate"],
    ["freedom", "liberty", "license"],
    ["idea", "notion", "concept"],
    ["question", "query", "inquiry"],
    ["problem", "issue", "trouble"],
    ["beach", "shore", "coast"],
    ["mountain", "peak", "summit"],
    ["river", "stream", "creek"],
    ["road", "street", "avenue"],
    ["hotel", "inn", "lodge"],
    ["restaurant", "diner", "eatery"],
    # adverbs
    ["always", "constantly", "forever"],
    ["rarely", "seldom", "hardly"],
    ["maybe", "perhaps", "possibly"],
    ["soon", "shortly", "presently"],
    ["often", "frequently", "regularly"],
    ["really", "truly", "genuinely"],
    # function words
    ["in", "at", "on"],
    ["my", "our", "their", "your"],
]

#: word -> explicit candidate list (overrides any ring entry).
PINS: dict[str, list[str]] = {
    "buy": ["purchase", "accept"],
    "add": ["play", "put", "place", "insert", "include", "mix"],
    "fresh": ["cool", "new", "crisp"],
    "to": ["the", "a"],
    "the": ["a", "their", "our"],
    "a": ["the"],
    "quickly": ["fast", "well", "rapidly"],
    "large": ["giant", "big", "huge"],
}


def main() -> None:
    table: dict[str, list[str]] = {}
    seen: set[str] = set()
    for ring in RINGS:
        for w in ring:
            if w in seen:
                raise SystemExit(f"word {w!r} appears in more than one ring")
            seen.add(w)
        for i, w in enumerate(ring):
            table[w] = ring[i + 1:] + ring[:i]
    table.update(PINS)

    lines = [
        "# Synonym table: word<TAB>candidate,candidate,...  Candidates are",
        "# ordered best-first.  Generated by tools/gen_synonyms.py; edit the",
        "# rings and pins there and regenerate.",
    ]
    lines += [f"{w}\t{','.join(syns)}" for w, syns in sorted(table.items())]
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(table)} entries to {OUT}")


if __name__ == "__main__":
    main()
