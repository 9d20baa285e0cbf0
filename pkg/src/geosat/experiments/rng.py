"""
Random streams. A stream is a numpy Generator (PCG64). Trial i of a batch uses the stream created from the 64 bit
integer trial_seed(master_seed, i), which numpy's SeedSequence derives by hashing (master_seed, i). Streams of
different trials are therefore independent and a batch does not depend on the order in which its trials run.
"""

from typing import Optional, Tuple, Union

import numpy as np

RngStream = np.random.Generator

SeedOrStream = Union[int, np.random.Generator]


def trial_seed(master_seed: int, trial_index: int) -> int:
    """
    the 64 bit seed of trial trial_index in a batch with the given master seed
    """
    sequence = np.random.SeedSequence(master_seed, spawn_key=(trial_index,))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def stream_from_seed(seed: int) -> RngStream:
    """a fresh stream for an integer seed"""
    return np.random.default_rng(seed)


def trial_stream(master_seed: int, trial_index: int) -> RngStream:
    """the stream of trial trial_index"""
    return stream_from_seed(trial_seed(master_seed, trial_index))


def resolve_stream(seed_or_stream: SeedOrStream) -> Tuple[RngStream, Optional[int]]:
    """
    accepts either an integer seed or an existing stream.
    Returns the stream and the seed (None for streams that were handed in, because those cannot be recreated).
    """
    if isinstance(seed_or_stream, np.random.Generator):
        return seed_or_stream, None
    if isinstance(seed_or_stream, (int, np.integer)) and not isinstance(seed_or_stream, bool):
        seed = int(seed_or_stream)
        if seed < 0:
            raise ValueError(f"Seeds must not be negative but got {seed}")
        return stream_from_seed(seed), seed
    raise TypeError(f"Expected an int seed or a numpy Generator but got {type(seed_or_stream)}")
