"""Synthetic benchmark graphs (stand-ins for proprietary financial
networks) and the two canonical hand-checkable toys."""

from __future__ import annotations

import numpy as np

from .errors import InfeasibleShape
from .graph import UncertainGraph, assign_random_probabilities

KINDS = ("power-law", "random-dag", "chain", "diamond")


def chain_example() -> UncertainGraph:
    """Two-node chain A->B with all probabilities 0.2; p(B) = 0.232."""
    return UncertainGraph(["A", "B"], [0.2, 0.2], [0], [1], [0.2])


def diamond_witness() -> UncertainGraph:
    """r->x1->v, r->x2->v with p_s(r)=0.5, certain top edges and 0.5 bottom
    edges.  Exact p(v)=0.375; the order-3 lower bound gives 0.4375 because
    the two converging paths share r's default event."""
    return UncertainGraph(
        ["r", "x1", "x2", "v"],
        [0.5, 0.0, 0.0, 0.0],
        [0, 0, 1, 2],
        [1, 2, 3, 3],
        [1.0, 1.0, 0.5, 0.5],
    )


def synth_graph(kind: str, n: int, m: int, seed: int) -> UncertainGraph:
    """Deterministic topology from (kind, n, m, seed); probabilities are
    then redrawn uniformly from the same seed."""
    if kind == "chain":
        want = max(n - 1, 0)
        if n < 1 or (m not in (want,)):
            raise InfeasibleShape(f"chain needs n >= 1 and m = n-1, got n={n} m={m}")
        src = list(range(n - 1))
        dst = list(range(1, n))
    elif kind == "diamond":
        if n != 4 or m != 4:
            raise InfeasibleShape("diamond is the fixed 4-node/4-edge shape")
        src = [0, 0, 1, 2]
        dst = [1, 2, 3, 3]
    elif kind == "random-dag":
        src, dst = _random_dag(n, m, seed)
    elif kind == "power-law":
        src, dst = _power_law(n, m, seed)
    else:
        raise InfeasibleShape(f"unknown kind {kind!r}")
    labels = [f"n{i}" for i in range(n)]
    g = UncertainGraph(labels, np.zeros(n), src, dst, np.zeros(len(src)))
    return assign_random_probabilities(g, seed)


def _random_dag(n: int, m: int, seed: int):
    if n < 2 or m > n * (n - 1) // 2:
        raise InfeasibleShape(f"random-dag infeasible for n={n} m={m}")
    rng = np.random.default_rng(seed)
    order = rng.permutation(n)
    chosen: set[tuple[int, int]] = set()
    while len(chosen) < m:
        a, b = rng.integers(0, n, 2)
        if a == b:
            continue
        i, j = (a, b) if a < b else (b, a)
        chosen.add((int(order[i]), int(order[j])))
    pairs = sorted(chosen)
    return [p[0] for p in pairs], [p[1] for p in pairs]


def _power_law(n: int, m: int, seed: int):
    """Preferential attachment: each new node sends edges to earlier nodes
    chosen proportionally to in-degree + 1, giving a degree-skewed DAG."""
    if n < 2 or m < n - 1 or m > n * (n - 1) // 2:
        raise InfeasibleShape(f"power-law infeasible for n={n} m={m}")
    rng = np.random.default_rng(seed)
    indeg = np.zeros(n, np.int64)
    # spread m edges over arriving nodes 1..n-1, carrying overflow forward
    base, extra = divmod(m, n - 1)
    src: list[int] = []
    dst: list[int] = []
    deficit = 0
    for v in range(1, n):
        want = base + (1 if v <= extra else 0) + deficit
        quota = min(want, v)
        deficit = want - quota
        weights = indeg[:v] + 1.0
        targets = rng.choice(v, size=quota, replace=False, p=weights / weights.sum())
        for u in np.sort(targets):
            src.append(v)
            dst.append(int(u))
            indeg[u] += 1
    return src, dst
