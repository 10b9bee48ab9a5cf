"""Deterministic seed derivation.

Every randomized construction takes one integer seed; nested or per-trial
randomness derives child seeds through SHA-256 of the (seed, path) tuple so
results are reproducible regardless of call order or scheduling.
"""

from __future__ import annotations

import hashlib


def split_seed(seed: int, *path: int | str) -> int:
    """Derive a 64-bit child seed for a labelled sub-stream."""
    payload = repr((seed,) + path).encode()
    return int.from_bytes(hashlib.sha256(payload).digest()[:8], "big")
