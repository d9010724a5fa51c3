"""Deterministic random streams for the scene simulator.

Streams are built on the Philox 4x64-10 counter-based generator (as shipped
by numpy), keyed by ``(seed, purpose)``. Keying by purpose gives every
consumer (noise synthesis, initial phases, ...) an independent substream, so
adding a new consumer never perturbs existing streams and identical seeds
reproduce identical scenes bit for bit.
"""

import numpy as np

# Purpose ids are part of the reproducibility contract: never renumber.
PURPOSE_NOISE = 1
PURPOSE_PHASES = 2
PURPOSE_EM_RESTARTS = 3


def substream(seed: int, purpose: int) -> np.random.Generator:
    """Return the Philox-backed generator for ``(seed, purpose)``."""
    key = np.array([np.uint64(seed & 0xFFFFFFFFFFFFFFFF), np.uint64(purpose)])
    return np.random.Generator(np.random.Philox(key=key))
