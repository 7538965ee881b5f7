"""Keyed, order-independent RNG streams.

Every per-utterance random decision draws from a generator seeded by a
stable 64-bit hash of (master seed, replicate index, utterance index).
Streams are independent of processing order, so parallel workers cannot
change outputs.
"""

from __future__ import annotations

import hashlib
import random

_SEP = b"\x1f"


def derive_seed(*parts: int | str) -> int:
    """Fold the given key parts into a stable 64-bit unsigned seed."""
    h = hashlib.blake2b(digest_size=8)
    for part in parts:
        h.update(repr(part).encode("utf-8"))
        h.update(_SEP)
    return int.from_bytes(h.digest(), "big")


def rng_for(*parts: int | str) -> random.Random:
    """A fresh generator for the stream identified by the key parts."""
    return random.Random(derive_seed(*parts))
