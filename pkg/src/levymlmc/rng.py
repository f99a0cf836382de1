"""Splittable counter-based random streams.

Every stochastic routine draws from a stream addressed by an integer key
path, e.g. ``(level, replication, channel)``.  A stream is the Philox
generator with ``key = seed`` and the 256-bit counter's upper three words
set from the key path (the low word counts draws), so distinct paths are
distinct counter blocks of one pseudorandom function: statistically
independent, reproducible, and random-access for any worker layout.

For speed the stream factory re-seats one shared bit generator instead of
constructing a fresh one per call; the draws are bit-identical either way
(``fresh_generator`` gives an independent object when two streams must be
consumed interleaved).
"""

from __future__ import annotations

import numpy as np

# Channel indices used by the simulation layer.  Keeping them fixed means a
# path simulated inside a coarse/fine pair consumes exactly the same draws as
# the same path simulated alone.
CH_JUMPS = 0
CH_BROWNIAN = 1
CH_SMALL = 2
CH_MARKS = 3
CH_AUX = 4

_WORD = 1 << 32


def _pack_counter(path: tuple) -> np.ndarray:
    """Pack up to six 32-bit components into counter words 1..3."""
    if len(path) > 6:
        raise ValueError("stream key path longer than 6 components")
    words = [0, 0, 0, 0]  # word 0 counts draws
    padded = tuple(path) + (0,) * (6 - len(path))
    for j in range(3):
        lo, hi = padded[2 * j], padded[2 * j + 1]
        if not (0 <= lo < _WORD and 0 <= hi < _WORD):
            raise ValueError(f"stream key component outside [0, 2^32): {path}")
        words[j + 1] = lo + (hi << 32)
    return np.array(words, dtype=np.uint64)


class RandomStream:
    """Factory of independent Philox generators keyed by integer tuples."""

    def __init__(self, seed: int):
        if not isinstance(seed, (int, np.integer)) or seed < 0:
            raise TypeError("seed must be a nonnegative integer")
        self.seed = int(seed)
        self.prefix: tuple = ()
        self._bitgen = np.random.Philox(key=self.seed)
        self._gen = np.random.Generator(self._bitgen)
        self._state = self._bitgen.state

    def generator(self, *key: int) -> np.random.Generator:
        """The stream for ``key``; same key, same draws, always.

        Returns a shared generator object re-seated to the key's counter
        block; request the next key only after finishing with this one.
        """
        st = self._state
        st["state"]["counter"] = _pack_counter(self.prefix + key)
        st["buffer_pos"] = 4
        st["has_uint32"] = 0
        st["uinteger"] = 0
        self._bitgen.state = st
        return self._gen

    def fresh_generator(self, *key: int) -> np.random.Generator:
        """Same stream as ``generator(*key)`` but as an independent object."""
        return np.random.Generator(
            np.random.Philox(key=self.seed, counter=_pack_counter(self.prefix + key))
        )

    def child(self, *key: int) -> "RandomStream":
        """A stream namespace with ``key`` prefixed to every generator key."""
        out = object.__new__(RandomStream)
        out.seed = self.seed
        out.prefix = self.prefix + tuple(int(k) for k in key)
        out._bitgen = self._bitgen  # children share the root's bit generator
        out._gen = self._gen
        out._state = self._state
        return out
