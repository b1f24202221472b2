"""Order-z lower/upper bounds on default probability and the candidate
verification / pruning step."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidArguments, InvalidK
from .graph import UncertainGraph


def _propagate(g: UncertainGraph, p: np.ndarray) -> np.ndarray:
    """One two-table sweep of the recursive default-probability equation:
    new p(v) = 1 - (1 - p_s(v)) * prod over in-edges (1 - p_edge * p(src)).
    Recomputing a node whose in-neighbors did not change reproduces its
    value, so the sweep is equivalent to the change-propagation rule."""
    prod = np.ones(g.n)
    if g.m:
        np.multiply.at(prod, g.edge_dst, 1.0 - g.edge_prob * p[g.edge_src])
    return 1.0 - (1.0 - g.self_risk) * prod


def lower_bounds(g: UncertainGraph, z: int) -> np.ndarray:
    """Sweep 1 seeds with p_s; sweeps 2..z propagate.  Sound for z <= 2;
    beyond that converging paths can push the value above the truth."""
    if z < 1:
        raise InvalidArguments("bound order z must be >= 1")
    p = g.self_risk.copy()
    for _ in range(2, z + 1):
        p = _propagate(g, p)
    return p


def upper_bounds(g: UncertainGraph, z: int) -> np.ndarray:
    """Sweep 1 treats every in-neighbor as defaulting with probability 1;
    later sweeps propagate the previous table."""
    if z < 1:
        raise InvalidArguments("bound order z must be >= 1")
    p = _propagate(g, np.ones(g.n))
    for _ in range(2, z + 1):
        p = _propagate(g, p)
    return p


@dataclass
class BoundTable:
    z: int
    lower: np.ndarray
    upper: np.ndarray


def compute_bounds(g: UncertainGraph, z: int) -> BoundTable:
    lower = lower_bounds(g, z)
    # both sweeps converge to the same value on fully resolved nodes but
    # round differently; clamp so lower <= upper holds exactly
    upper = np.maximum(upper_bounds(g, z), lower)
    return BoundTable(z=z, lower=lower, upper=upper)


@dataclass
class CandidateReport:
    verified: list[int]        # straight into the result set, |verified| = k_prime
    k_prime: int
    candidates: np.ndarray     # the set B, NodeId ascending
    pruned: np.ndarray         # everything with upper < T_l
    t_lower: float             # k-th largest lower bound (T_l)
    t_upper: float             # k-th largest upper bound (T_u)


def kth_largest(values: np.ndarray, k: int) -> float:
    return float(np.partition(values, values.size - k)[values.size - k])


def reduce_candidates(bounds: BoundTable, k: int) -> CandidateReport:
    """Verify nodes whose lower bound clears the k-th largest upper bound
    (capped at k, ties by lower bound descending then NodeId), keep as
    candidates the rest whose upper bound reaches the k-th largest lower
    bound, prune everything else."""
    n = bounds.lower.size
    if not (1 <= k <= n):
        raise InvalidK(f"k={k} outside 1..{n}")
    t_l = kth_largest(bounds.lower, k)
    t_u = kth_largest(bounds.upper, k)
    verified_all = np.flatnonzero(bounds.lower >= t_u)
    if verified_all.size > k:
        order = sorted(verified_all.tolist(), key=lambda v: (-bounds.lower[v], v))
        verified = order[:k]
    else:
        verified = sorted(
            verified_all.tolist(), key=lambda v: (-bounds.lower[v], v)
        )
    verified_mask = np.zeros(n, bool)
    verified_mask[verified] = True
    rest = ~verified_mask
    cand_mask = rest & (bounds.upper >= t_l)
    return CandidateReport(
        verified=verified,
        k_prime=len(verified),
        candidates=np.flatnonzero(cand_mask).astype(np.int64),
        pruned=np.flatnonzero(rest & ~cand_mask).astype(np.int64),
        t_lower=t_l,
        t_upper=t_u,
    )
