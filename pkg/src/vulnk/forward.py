"""Forward Monte-Carlo estimation (methods N and SN) and the basic
sample-size rule."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from ._kernels import forward_counts, forward_world
from .coins import WorldCoins, _u64
from .errors import InvalidArguments, InvalidK
from .graph import UncertainGraph
from .results import EST_FREQ, TopKEntry, TopKResult


@dataclass(frozen=True)
class ApproxParams:
    """(eps, delta) of the approximation contract; both strictly in (0,1)."""

    eps: float = 0.3
    delta: float = 0.1

    def __post_init__(self):
        if not (0.0 < self.eps < 1.0 and 0.0 < self.delta < 1.0):
            raise InvalidArguments("eps and delta must lie strictly inside (0, 1)")


def sample_world_forward(g: UncertainGraph, coins: WorldCoins) -> set[int]:
    """The set of nodes that default in the possible world defined by
    `coins`: self-default coin <= p_s seeds the BFS, each newly reached
    edge fires iff its coin <= diffusion probability."""
    h = forward_world(
        g.out_indptr,
        g.out_dst,
        g.out_eid,
        g.self_risk,
        g.edge_prob,
        _u64(coins.master_seed),
        _u64(coins.sample_index),
    )
    return set(np.flatnonzero(h).tolist())


def basic_sample_size(n: int, k: int, params: ApproxParams) -> int:
    """t = ceil((2/eps^2) * ln(k(n-k)/delta)), rounded up ("no less than")."""
    if k < 1 or k * (n - k) < 1:
        raise InvalidK(f"k={k} gives k(n-k) < 1 for n={n}")
    return math.ceil((2.0 / params.eps**2) * math.log(k * (n - k) / params.delta))


def forward_default_counts(
    g: UncertainGraph, seed: int, t: int, t_start: int = 1
) -> np.ndarray:
    """Default counters over sample indices t_start..t_start+t-1."""
    if t < 0:
        raise InvalidArguments("sample count must be non-negative")
    if t == 0:
        return np.zeros(g.n, np.int64)
    return forward_counts(
        g.out_indptr,
        g.out_dst,
        g.out_eid,
        g.self_risk,
        g.edge_prob,
        _u64(seed),
        t_start,
        t_start + t - 1,
    )


def estimate_topk_basic(
    g: UncertainGraph, k: int, t: int, seed: int, method: str = "N"
) -> TopKResult:
    """Run t forward samples and return the k nodes with the largest
    frequency estimate, ties broken by NodeId ascending."""
    if not (1 <= k <= g.n):
        raise InvalidK(f"k={k} outside 1..{g.n}")
    if t < 1:
        raise InvalidArguments("t must be >= 1")
    start = time.perf_counter()
    counts = forward_default_counts(g, seed, t)
    estimates = counts / t
    order = sorted(range(g.n), key=lambda v: (-estimates[v], v))
    entries = [
        TopKEntry(v, g.labels[v], float(estimates[v]), False, EST_FREQ)
        for v in order[:k]
    ]
    return TopKResult(
        method=method,
        entries=entries,
        k=k,
        seed=seed,
        t_used=t,
        wall_time=time.perf_counter() - start,
    )


def sn_topk(
    g: UncertainGraph, k: int, params: ApproxParams, seed: int
) -> TopKResult:
    """Method SN: the basic sampler with t chosen by the sample-size rule."""
    t = basic_sample_size(g.n, k, params)
    result = estimate_topk_basic(g, k, t, seed, method="SN")
    result.eps = params.eps
    result.delta = params.delta
    return result
