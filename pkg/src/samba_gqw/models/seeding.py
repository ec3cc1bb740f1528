"""Per-subsystem seed expansion from a single run seed."""

import zlib

import numpy as np


def derive_seed(seed: int, subsystem: str) -> int:
    """Expand ``seed`` into an independent 64-bit seed for ``subsystem``."""
    sequence = np.random.SeedSequence(seed, spawn_key=(zlib.crc32(subsystem.encode()),))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])
