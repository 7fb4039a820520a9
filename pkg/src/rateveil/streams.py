"""Labelled, independently seeded random-number substreams.

Every random draw in a run comes from a named stream such as
``"service:4"`` or ``"slots:4"``.  A stream's PCG64 state is derived
from the run's master seed plus a SHA-256 digest of its label, so

* streams with different labels are independent by construction, and
* the same (seed, label) pair replays the identical draw sequence on
  every run and platform.

The two samplers below are deliberately spelled out rather than taken
from ``numpy.random.Generator``: the inverse-CDF exponential and the
remainder-rejection integer draw are fixed algorithms shared verbatim
with the compiled event loop, which consumes the same PCG64 streams
through numpy's C interface.
"""

from __future__ import annotations

import hashlib
import math

import numpy as np

from .errors import NonPositiveRate, ZeroRange

_DOUBLE_SCALE = 2.0**-53
_TWO64 = 1 << 64


def label_entropy(label: str) -> list[int]:
    """Four 32-bit words from the SHA-256 of the label, platform-stable."""
    digest = hashlib.sha256(label.encode("utf-8")).digest()
    return [int.from_bytes(digest[i : i + 4], "little") for i in range(0, 16, 4)]


def seed_sequence_for(master_seed: int, label: str) -> np.random.SeedSequence:
    return np.random.SeedSequence([int(master_seed), *label_entropy(label)])


def bit_generator_for(master_seed: int, label: str) -> np.random.PCG64:
    return np.random.PCG64(seed_sequence_for(master_seed, label))


class RngStream:
    """One named substream backed by a PCG64 bit generator."""

    __slots__ = ("label", "bit_generator")

    def __init__(self, label: str, bit_generator: np.random.PCG64):
        self.label = label
        self.bit_generator = bit_generator

    @classmethod
    def from_seed(cls, master_seed: int, label: str) -> "RngStream":
        return cls(label, bit_generator_for(master_seed, label))

    def next_uint64(self) -> int:
        return int(self.bit_generator.random_raw())

    def next_double(self) -> float:
        # Same mapping PCG64 uses internally: top 53 bits onto [0, 1).
        return (self.next_uint64() >> 11) * _DOUBLE_SCALE

    def exponential(self, rate: float) -> float:
        """Inverse-CDF draw -ln(u)/rate with u uniform on (0, 1].

        u may equal 1, in which case the delay is exactly 0; the event
        engine treats a zero delay as valid.
        """
        if rate <= 0.0:
            raise NonPositiveRate(f"exponential rate must be > 0, got {rate}")
        u = 1.0 - self.next_double()
        return -math.log(u) / rate

    def uniform_index(self, k: int) -> int:
        """Unbiased integer on [0, k), rejecting the modulo remainder.

        Raw 64-bit words below 2**64 mod k are rejected so that every
        residue class keeps exactly floor(2**64 / k) accepted words.
        """
        if k < 1:
            raise ZeroRange(f"uniform index needs k >= 1, got {k}")
        threshold = _TWO64 % k
        while True:
            raw = self.next_uint64()
            if raw >= threshold:
                return raw % k

    def exponential_block(self, rate: float, size: int) -> np.ndarray:
        """Vectorised exponential draws for Monte Carlo oracles.

        Applies the same inverse-CDF transform as :meth:`exponential`
        to a block of raw words; intended for bulk statistics, not for
        the event loop.
        """
        if rate <= 0.0:
            raise NonPositiveRate(f"exponential rate must be > 0, got {rate}")
        raws = self.bit_generator.random_raw(size)
        u = 1.0 - (raws >> np.uint64(11)) * _DOUBLE_SCALE
        return -np.log(u) / rate


class StreamFactory:
    """Creates and caches the labelled streams of one simulation run.

    Labels listed in ``PAIRED_PREFIXES`` are derived from the paired
    seed only, so sweeps can hold topology and traffic fixed across
    parameter values; all remaining labels additionally mix in the
    sweep value key, giving each parameter value its own service and
    slot randomness while replications stay paired.
    """

    PAIRED_PREFIXES = ("topology", "source:", "dummy:")

    def __init__(self, seed: int, value_key: str | None = None):
        self.seed = int(seed)
        self.value_key = value_key
        self._streams: dict[str, RngStream] = {}

    def _effective_label(self, label: str) -> str:
        if self.value_key is None or label.startswith(self.PAIRED_PREFIXES):
            return label
        return f"{label}#{self.value_key}"

    def stream(self, label: str) -> RngStream:
        got = self._streams.get(label)
        if got is None:
            got = RngStream(label, bit_generator_for(self.seed, self._effective_label(label)))
            self._streams[label] = got
        return got

    def bit_generator(self, label: str) -> np.random.PCG64:
        return self.stream(label).bit_generator
