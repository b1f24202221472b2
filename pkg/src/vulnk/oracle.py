"""Exact default probabilities by exhaustive possible-world enumeration.

Only feasible on tiny graphs (n + m <= 24); serves as the ground-truth
oracle for every property test of the samplers and bounds.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .errors import BudgetExceeded, InvalidK
from .graph import UncertainGraph
from .results import EST_EXACT, TopKEntry, TopKResult

ENUMERATION_BUDGET = 24  # 2^24 worlds keeps the full suite in seconds


def exact_default_probabilities(g: UncertainGraph) -> np.ndarray:
    """p(v) summed over all possible worlds.

    The node coins are integrated out in closed form: for a fixed edge
    subset, v defaults iff any of its surviving-edge ancestors (v included)
    self-defaults, which has probability 1 - prod(1 - p_s) over ancestors.
    This marginalization is exact and cuts the enumeration from 2^(n+m)
    worlds to 2^m edge subsets.
    """
    if g.n + g.m > ENUMERATION_BUDGET:
        raise BudgetExceeded(
            f"n + m = {g.n + g.m} exceeds enumeration budget {ENUMERATION_BUDGET}"
        )
    n, m = g.n, g.m
    src = [int(s) for s in g.edge_src]
    dst = [int(d) for d in g.edge_dst]
    pe = [float(p) for p in g.edge_prob]
    ps = [float(p) for p in g.self_risk]
    acc = [0.0] * n
    for mask in range(1 << m):
        w = 1.0
        for e in range(m):
            w *= pe[e] if (mask >> e) & 1 else 1.0 - pe[e]
        if w == 0.0:
            continue
        anc = [1 << v for v in range(n)]  # ancestor bitsets, v reaches itself
        changed = True
        while changed:
            changed = False
            for e in range(m):
                if (mask >> e) & 1:
                    merged = anc[dst[e]] | anc[src[e]]
                    if merged != anc[dst[e]]:
                        anc[dst[e]] = merged
                        changed = True
        for v in range(n):
            clean = 1.0
            bits = anc[v]
            u = 0
            while bits:
                if bits & 1:
                    clean *= 1.0 - ps[u]
                bits >>= 1
                u += 1
            acc[v] += w * (1.0 - clean)
    return np.asarray(acc)


def enumerate_worlds(
    g: UncertainGraph, budget: int = 20
) -> Iterator[tuple[float, int]]:
    """Yield (probability, defaulted-node bitmask) for every one of the
    2^(n+m) worlds explicitly.  Exponentially slower than
    exact_default_probabilities; kept for auditing the aggregation identity."""
    if g.n + g.m > budget:
        raise BudgetExceeded(f"n + m = {g.n + g.m} exceeds explicit budget {budget}")
    n, m = g.n, g.m
    ps = [float(p) for p in g.self_risk]
    pe = [float(p) for p in g.edge_prob]
    out = [list(zip(*g.out_neighbors(v))) for v in range(n)]
    for node_mask in range(1 << n):
        pn = 1.0
        for v in range(n):
            pn *= ps[v] if (node_mask >> v) & 1 else 1.0 - ps[v]
        for edge_mask in range(1 << m):
            w = pn
            for e in range(m):
                w *= pe[e] if (edge_mask >> e) & 1 else 1.0 - pe[e]
            defaulted = node_mask
            queue = [v for v in range(n) if (node_mask >> v) & 1]
            while queue:
                q = queue.pop()
                for a, eid in out[q]:
                    a, eid = int(a), int(eid)
                    if not (defaulted >> a) & 1 and (edge_mask >> eid) & 1:
                        defaulted |= 1 << a
                        queue.append(a)
            yield w, defaulted


def exact_topk(g: UncertainGraph, k: int) -> TopKResult:
    """Exact ranking by enumeration; ties broken by NodeId ascending."""
    if not (1 <= k <= g.n):
        raise InvalidK(f"k={k} outside 1..{g.n}")
    probs = exact_default_probabilities(g)
    order = sorted(range(g.n), key=lambda v: (-probs[v], v))
    entries = [
        TopKEntry(v, g.labels[v], float(probs[v]), False, EST_EXACT)
        for v in order[:k]
    ]
    return TopKResult(method="ORACLE", entries=entries, k=k)
