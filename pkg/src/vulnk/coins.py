"""Deterministic counter-based coin streams.

Every random decision in the samplers is a pure function of
(master seed, sample index, entity kind, entity id), so forward and
reverse sampling observe bit-identical coins for the same possible
world, samples can be processed in any order (or in parallel), and a
coin that is never observed has no effect on the world distribution.

The mixer is the murmur3/splitmix 64-bit finalizer, applied three times
with the inputs xor-folded in between.  Each application is a bijection
on uint64, so distinct argument tuples map to well-scrambled outputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numba as nb
import numpy as np

# entity kinds (keep stable: they are part of the reproducibility contract)
KIND_NODE = 1    # self-default coin of a node
KIND_EDGE = 2    # survival coin of an edge
KIND_BK_HASH = 3  # per-sample hash for the bottom-k stream
KIND_PROB_NODE = 4  # synthetic self-risk probability
KIND_PROB_EDGE = 5  # synthetic diffusion probability

_MASK64 = (1 << 64) - 1
_INV_2_64 = 2.0 ** -64
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)

_K_NODE = np.uint64(KIND_NODE)
_K_EDGE = np.uint64(KIND_EDGE)
_K_BK = np.uint64(KIND_BK_HASH)


@nb.njit(cache=True, inline="always")
def _mix64(x):
    x ^= x >> np.uint64(33)
    x *= np.uint64(0xFF51AFD7ED558CCD)
    x ^= x >> np.uint64(33)
    x *= np.uint64(0xC4CEB9FE1A85EC53)
    x ^= x >> np.uint64(33)
    return x


@nb.njit(cache=True, inline="always")
def coin_bits(seed, sample, kind, ident):
    x = _mix64(seed ^ (_GOLDEN * kind))
    x = _mix64(x ^ sample)
    x = _mix64(x ^ ident)
    return x


@nb.njit(cache=True, inline="always")
def coin_u01(seed, sample, kind, ident):
    """Uniform float in [0, 1), pure in all four arguments."""
    return coin_bits(seed, sample, kind, ident) * _INV_2_64


@nb.njit(cache=True)
def coins_for_ids(seed, sample, kind, count):
    """Coins for ids 0..count-1 at a fixed (seed, sample, kind)."""
    out = np.empty(count, np.float64)
    for i in range(count):
        out[i] = coin_u01(seed, sample, kind, np.uint64(i))
    return out


@nb.njit(cache=True)
def sample_hashes(seed, t):
    """Per-sample hash values for sample indices 1..t (bottom-k stream)."""
    out = np.empty(t, np.float64)
    for i in range(t):
        out[i] = coin_u01(seed, np.uint64(i + 1), _K_BK, np.uint64(0))
    return out


def _u64(x: int) -> np.uint64:
    return np.uint64(int(x) & _MASK64)


def coin(seed: int, sample: int, kind: int, ident: int) -> float:
    """Scalar convenience wrapper around the jitted coin function."""
    return float(coin_u01(_u64(seed), _u64(sample), _u64(kind), _u64(ident)))


@dataclass(frozen=True)
class WorldCoins:
    """One possible world, defined lazily by its coin source.

    sample_index starts at 1; index 0 is reserved for non-sample streams
    (synthetic probabilities, bottom-k hashes).
    """

    master_seed: int
    sample_index: int

    def node_coin(self, node: int) -> float:
        return coin(self.master_seed, self.sample_index, KIND_NODE, node)

    def edge_coin(self, edge: int) -> float:
        return coin(self.master_seed, self.sample_index, KIND_EDGE, edge)
