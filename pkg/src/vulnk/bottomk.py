"""Bottom-k early termination over the reverse-sampling stream (BSRBK).

Samples get pseudo-random hashes in (0,1) and are materialized in
hash-ascending order; a candidate whose default counter first reaches bk
has the bk-th smallest hash among its default samples, which yields the
bottom-k cardinality estimate (bk-1)/(h^{bk} * t).  Processing stops as
soon as k-k' candidates have finished.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .bounds import compute_bounds, reduce_candidates
from .coins import _u64, sample_hashes
from .errors import InvalidBk, InvalidK
from .forward import ApproxParams
from .graph import UncertainGraph, reverse
from .results import EST_BOTTOMK, EST_BOUND, EST_FREQ, TopKEntry, TopKResult
from .reverse import ReverseSampler, _verified_entries, reduced_sample_size

DEFAULT_BK = 16


def bottomk_estimate(bk: int, kth_hash: float, t: int) -> float:
    """(bk-1) / (kth_hash * t), clamped into [0, 1]."""
    if bk < 2:
        raise InvalidBk(f"bk={bk} must be >= 2")
    if t < 1 or not (0.0 < kth_hash < 1.0 or kth_hash == 1.0):
        raise InvalidBk("need t >= 1 and kth_hash in (0, 1]")
    return min(1.0, max(0.0, (bk - 1) / (kth_hash * t)))


def expected_relative_error(bk: int) -> float:
    """Expected relative error of a bottom-k estimate, sqrt(2/(pi(bk-2)))."""
    if bk < 3:
        raise InvalidBk(f"bk={bk} must be >= 3 for the error formula")
    return math.sqrt(2.0 / (math.pi * (bk - 2)))


@dataclass
class SampleHashStream:
    """Planned sample count, per-index hash, and hash-ascending order."""

    t: int
    hashes: np.ndarray  # hashes[i] belongs to sample index i+1
    order: np.ndarray   # sample indices (1-based) sorted by hash ascending

    @classmethod
    def build(cls, seed: int, t: int) -> "SampleHashStream":
        hashes = sample_hashes(_u64(seed), t)
        # stable sort: equal hashes (probability ~0) break by index
        order = np.argsort(hashes, kind="stable") + 1
        return cls(t=t, hashes=hashes, order=order.astype(np.int64))

    def hash_of(self, sample_index: int) -> float:
        return float(self.hashes[sample_index - 1])


@dataclass(frozen=True)
class FinishRecord:
    node: int
    kth_hash: float
    estimate: float


def bsrbk_topk(
    g: UncertainGraph,
    k: int,
    params: ApproxParams,
    z: int = 2,
    bk: int = DEFAULT_BK,
    seed: int = 0,
) -> TopKResult:
    if not (1 <= k <= g.n):
        raise InvalidK(f"k={k} outside 1..{g.n}")
    if bk < 2:
        raise InvalidBk(f"bk={bk} must be >= 2")
    start = time.perf_counter()
    bt = compute_bounds(g, z)
    report = reduce_candidates(bt, k)
    kk = k - report.k_prime
    entries = _verified_entries(g, bt, report.verified)
    cand = report.candidates
    t = reduced_sample_size(cand.size, k, report.k_prime, params)
    samples_processed = 0
    if kk > 0 and t == 0:
        accepted = sorted(cand.tolist(), key=lambda v: (-bt.lower[v], v))[:kk]
        entries += [
            TopKEntry(v, g.labels[v], float(bt.lower[v]), False, EST_BOUND)
            for v in accepted
        ]
    elif kk > 0:
        stream = SampleHashStream.build(seed, t)
        gt = reverse(g)
        sampler = ReverseSampler(gt)
        counts = np.zeros(cand.size, np.int64)
        finished_mask = np.zeros(cand.size, bool)
        finished: list[FinishRecord] = []
        for sample_index in stream.order:
            h = sampler.sample(cand, seed, int(sample_index))
            samples_processed += 1
            counts += h
            newly = np.flatnonzero((counts == bk) & (h == 1) & ~finished_mask)
            for i in newly:  # NodeId ascending among same-sample finishers
                if len(finished) == kk:
                    break
                finished_mask[i] = True
                kth_hash = stream.hash_of(int(sample_index))
                finished.append(
                    FinishRecord(
                        node=int(cand[i]),
                        kth_hash=kth_hash,
                        estimate=bottomk_estimate(bk, kth_hash, t),
                    )
                )
            if len(finished) == kk:
                break
        entries += [
            TopKEntry(r.node, g.labels[r.node], r.estimate, False, EST_BOTTOMK)
            for r in finished
        ]
        if len(finished) < kk:
            # stream exhausted: fall back to plain frequency ranking
            remaining = np.flatnonzero(~finished_mask)
            order = sorted(
                remaining.tolist(), key=lambda i: (-counts[i], cand[i])
            )
            entries += [
                TopKEntry(
                    int(cand[i]),
                    g.labels[cand[i]],
                    float(counts[i] / t),
                    False,
                    EST_FREQ,
                )
                for i in order[: kk - len(finished)]
            ]
    return TopKResult(
        method="BSRBK",
        entries=entries,
        k=k,
        seed=seed,
        t_used=t,
        eps=params.eps,
        delta=params.delta,
        z=z,
        bk=bk,
        wall_time=time.perf_counter() - start,
        extras={
            "k_prime": report.k_prime,
            "candidate_count": int(cand.size),
            "samples_processed": samples_processed,
        },
    )
