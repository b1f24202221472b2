"""Jitted sampling kernels.  All randomness flows through coins.coin_u01,
keyed by (seed, sample index, entity kind, entity id), so the kernels are
deterministic and forward/reverse sampling agree coin-for-coin."""

import numba as nb
import numpy as np

from .coins import coin_u01

_K_NODE = np.uint64(1)
_K_EDGE = np.uint64(2)

# reverse-sampler edge states
_E_UNCHECKED = np.uint8(0)
_E_SURVIVED = np.uint8(1)
_E_BLOCKED = np.uint8(2)


@nb.njit(cache=True)
def forward_world(out_indptr, out_dst, out_eid, ps, pe, seed, sample):
    """One forward sample: flip all node coins, BFS from self-defaulted
    nodes, flip edge coins lazily when the frontier reaches them.
    Returns the 0/1 default indicator per node."""
    n = ps.size
    h = np.zeros(n, np.uint8)
    queue = np.empty(n, np.int64)
    qn = 0
    for v in range(n):
        if coin_u01(seed, sample, _K_NODE, np.uint64(v)) <= ps[v]:
            h[v] = 1
            queue[qn] = v
            qn += 1
    head = 0
    while head < qn:
        q = queue[head]
        head += 1
        for j in range(out_indptr[q], out_indptr[q + 1]):
            a = out_dst[j]
            if h[a] == 0:
                e = out_eid[j]
                if coin_u01(seed, sample, _K_EDGE, np.uint64(e)) <= pe[e]:
                    h[a] = 1
                    queue[qn] = a
                    qn += 1
    return h


@nb.njit(cache=True)
def forward_counts(out_indptr, out_dst, out_eid, ps, pe, seed, t_start, t_end):
    """Accumulated default counters over sample indices t_start..t_end
    inclusive.  Pure function of (graph, seed, index range): splitting the
    range and summing the counters gives the identical result."""
    n = ps.size
    counts = np.zeros(n, np.int64)
    for i in range(t_start, t_end + 1):
        h = forward_world(out_indptr, out_dst, out_eid, ps, pe, seed, np.uint64(i))
        for v in range(n):
            counts[v] += h[v]
    return counts


@nb.njit(cache=True)
def reverse_sample_one(
    adj_indptr,
    adj_nbr,
    adj_eid,
    ps,
    pe,
    seed,
    sample,
    cands,
    node_checked,
    node_h,
    node_clean,
    edge_state,
    visited,
    queue,
    explored,
    h_out,
):
    """One reverse sample over the edge-reversed graph.

    For each candidate (ascending NodeId), BFS backwards flipping node and
    edge coins lazily; coin outcomes are memoized for the whole sample, so
    each coin is flipped at most once across all candidates.  A candidate
    defaults iff the traversal reaches a node whose self-default coin
    succeeded (or one already known to default).  When a search exhausts
    without success, everything it visited is provably clean in this world
    and later candidates skip it.

    adj_* must be the out-CSR of reverse(g); adj_eid carries original edge
    ids so coins match the forward sampler.  Scratch arrays are reset here.
    Returns the number of coins flipped (work-bound statistic).
    """
    node_checked[:] = 0
    node_h[:] = 0
    node_clean[:] = 0
    edge_state[:] = _E_UNCHECKED
    visited[:] = -1
    flips = 0
    for ci in range(cands.size):
        v = cands[ci]
        if node_clean[v]:
            h_out[ci] = 0
            continue
        qn = 0
        en = 0
        queue[qn] = v
        qn += 1
        visited[v] = ci
        head = 0
        found = False
        while head < qn:
            u = queue[head]
            head += 1
            if node_clean[u]:
                continue
            if node_h[u] == 1:
                found = True
                break
            if node_checked[u] == 0:
                node_checked[u] = 1
                flips += 1
                if coin_u01(seed, sample, _K_NODE, np.uint64(u)) <= ps[u]:
                    node_h[u] = 1
                    found = True
                    break
            explored[en] = u
            en += 1
            for j in range(adj_indptr[u], adj_indptr[u + 1]):
                e = adj_eid[j]
                if edge_state[e] == _E_UNCHECKED:
                    flips += 1
                    if coin_u01(seed, sample, _K_EDGE, np.uint64(e)) <= pe[e]:
                        edge_state[e] = _E_SURVIVED
                    else:
                        edge_state[e] = _E_BLOCKED
                if edge_state[e] == _E_SURVIVED:
                    up = adj_nbr[j]
                    if visited[up] != ci:
                        visited[up] = ci
                        queue[qn] = up
                        qn += 1
        if found:
            h_out[ci] = 1
            node_h[v] = 1
        else:
            h_out[ci] = 0
            for j2 in range(en):
                node_clean[explored[j2]] = 1
    return flips
