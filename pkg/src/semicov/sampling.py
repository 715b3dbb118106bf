"""Deterministic random number streams.

Seeding `random.Random` with a str is process-independent (the str is hashed
with sha512 by the seed machinery), unlike seeding with tuples or other
hashables, which go through `hash()` and vary with PYTHONHASHSEED.  Every
sampled check derives its stream here so reports are reproducible
byte-for-byte across runs and processes.
"""

from __future__ import annotations

import random


def derive_rng(seed: int, *labels: str) -> random.Random:
    key = "|".join([str(seed), *[str(l) for l in labels]])
    return random.Random(key)


def rand_vector(rng: random.Random, n: int, bound: int = 10) -> list:
    return [rng.randint(-bound, bound) for _ in range(n)]


def rand_nonzero_vector(rng: random.Random, n: int, bound: int = 10) -> list:
    while True:
        v = rand_vector(rng, n, bound)
        if any(x != 0 for x in v):
            return v
