"""Lazy reverse sampling over the edge-reversed graph, the reduced
sample-size rule, and the SR / BSR pipelines."""

from __future__ import annotations

import math
import time

import numpy as np

from ._kernels import reverse_sample_one
from .bounds import BoundTable, CandidateReport, compute_bounds, kth_largest, reduce_candidates
from .coins import WorldCoins, _u64
from .errors import InvalidArguments, InvalidK
from .forward import ApproxParams
from .graph import UncertainGraph, reverse
from .results import EST_BOUND, EST_FREQ, TopKEntry, TopKResult


class ReverseSampler:
    """Owns the per-sample scratch state for reverse sampling on one
    reversed graph; reusable across samples (scratch is reset per call)."""

    def __init__(self, gt: UncertainGraph):
        self.gt = gt
        n, m = gt.n, gt.m
        self._node_checked = np.zeros(n, np.uint8)
        self._node_h = np.zeros(n, np.uint8)
        self._node_clean = np.zeros(n, np.uint8)
        self._edge_state = np.zeros(m, np.uint8)
        self._visited = np.full(n, -1, np.int64)
        self._queue = np.empty(n, np.int64)
        self._explored = np.empty(n, np.int64)
        self.flips_last = 0

    def sample(self, candidates: np.ndarray, seed: int, sample_index: int) -> np.ndarray:
        """h values (0/1) per candidate for one sample; candidates must be
        NodeId-ascending."""
        h_out = np.empty(candidates.size, np.uint8)
        self.flips_last = reverse_sample_one(
            self.gt.out_indptr,
            self.gt.out_dst,
            self.gt.out_eid,
            self.gt.self_risk,
            self.gt.edge_prob,
            _u64(seed),
            _u64(sample_index),
            candidates,
            self._node_checked,
            self._node_h,
            self._node_clean,
            self._edge_state,
            self._visited,
            self._queue,
            self._explored,
            h_out,
        )
        return h_out


def reverse_sample(
    gt: UncertainGraph, candidates, coins: WorldCoins
) -> dict[int, int]:
    """One-shot reverse sample: candidate NodeId -> 0/1 default indicator.
    `gt` must be reverse(g) so edge ids (and therefore coins) line up with
    the forward sampler."""
    cand = np.asarray(sorted(int(c) for c in candidates), np.int64)
    if cand.size == 0:
        raise InvalidArguments("candidate set must be non-empty")
    h = ReverseSampler(gt).sample(cand, coins.master_seed, coins.sample_index)
    return {int(v): int(x) for v, x in zip(cand, h)}


def reduced_sample_size(
    candidate_count: int, k: int, k_prime: int, params: ApproxParams
) -> int:
    """t = ceil((2/eps^2) * ln((k-k')(|B|-k+k')/delta)); degenerate cases
    (nothing left to rank, or candidates exactly fill the result) need no
    samples at all."""
    kk = k - k_prime
    if k_prime > k or kk < 0:
        raise InvalidArguments(f"k'={k_prime} exceeds k={k}")
    if candidate_count < kk:
        raise InvalidArguments(
            f"candidate count {candidate_count} below k-k'={kk}"
        )
    if kk == 0 or candidate_count == kk:
        return 0
    arg = kk * (candidate_count - kk) / params.delta
    return math.ceil((2.0 / params.eps**2) * math.log(arg))


def _candidates_rule2_only(bounds: BoundTable, k: int) -> np.ndarray:
    """Method SR keeps every node whose upper bound reaches the k-th
    largest lower bound; nothing is verified."""
    t_l = kth_largest(bounds.lower, k)
    return np.flatnonzero(bounds.upper >= t_l).astype(np.int64)


def reverse_counts(
    gt: UncertainGraph, candidates: np.ndarray, seed: int, sample_indices
) -> tuple[np.ndarray, int]:
    """Accumulated h counters per candidate over the given sample indices;
    also returns the total number of coin flips performed."""
    sampler = ReverseSampler(gt)
    counts = np.zeros(candidates.size, np.int64)
    flips = 0
    for i in sample_indices:
        counts += sampler.sample(candidates, seed, int(i))
        flips += sampler.flips_last
    return counts, flips


def bsr_topk(
    g: UncertainGraph,
    k: int,
    params: ApproxParams,
    z: int = 2,
    seed: int = 0,
    use_verification: bool = True,
) -> TopKResult:
    """Bound-pruned reverse sampling.  With verification on this is method
    BSR (bound-based verify + prune, reduced sample size); with it off the
    candidate set comes from the pruning rule alone and the sample size is
    the basic rule over |B| (method SR)."""
    if not (1 <= k <= g.n):
        raise InvalidK(f"k={k} outside 1..{g.n}")
    start = time.perf_counter()
    bt = compute_bounds(g, z)
    if use_verification:
        report = reduce_candidates(bt, k)
        method = "BSR"
    else:
        report = CandidateReport(
            verified=[],
            k_prime=0,
            candidates=_candidates_rule2_only(bt, k),
            pruned=np.empty(0, np.int64),
            t_lower=kth_largest(bt.lower, k),
            t_upper=kth_largest(bt.upper, k),
        )
        method = "SR"
    result = _rank_candidates_by_sampling(g, k, params, bt, report, seed, method)
    result.z = z
    result.wall_time = time.perf_counter() - start
    return result


def _verified_entries(g: UncertainGraph, bt: BoundTable, verified: list[int]):
    return [
        TopKEntry(v, g.labels[v], float(bt.lower[v]), True, EST_BOUND)
        for v in verified
    ]


def _rank_candidates_by_sampling(
    g: UncertainGraph,
    k: int,
    params: ApproxParams,
    bt: BoundTable,
    report: CandidateReport,
    seed: int,
    method: str,
) -> TopKResult:
    kk = k - report.k_prime
    entries = _verified_entries(g, bt, report.verified)
    cand = report.candidates
    t = reduced_sample_size(cand.size, k, report.k_prime, params)
    if kk > 0:
        if t == 0:
            # candidates exactly fill the remaining slots
            accepted = sorted(cand.tolist(), key=lambda v: (-bt.lower[v], v))[:kk]
            entries += [
                TopKEntry(v, g.labels[v], float(bt.lower[v]), False, EST_BOUND)
                for v in accepted
            ]
        else:
            gt = reverse(g)
            counts, _ = reverse_counts(gt, cand, seed, range(1, t + 1))
            est = counts / t
            order = sorted(range(cand.size), key=lambda i: (-est[i], cand[i]))
            entries += [
                TopKEntry(int(cand[i]), g.labels[cand[i]], float(est[i]), False, EST_FREQ)
                for i in order[:kk]
            ]
    return TopKResult(
        method=method,
        entries=entries,
        k=k,
        seed=seed,
        t_used=t,
        eps=params.eps,
        delta=params.delta,
        extras={
            "k_prime": report.k_prime,
            "candidate_count": int(cand.size),
        },
    )
