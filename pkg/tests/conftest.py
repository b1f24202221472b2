import numpy as np

from vulnk import UncertainGraph, assign_random_probabilities


def random_small_graph(seed: int, n_max: int = 8, m_max: int = 12) -> UncertainGraph:
    """Seeded random directed graph (cycles allowed) with uniform random
    probabilities; small enough for the enumeration oracle."""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(3, n_max + 1))
    m = int(rng.integers(1, min(m_max, n * (n - 1)) + 1))
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    idx = rng.choice(len(pairs), size=m, replace=False)
    src = [pairs[i][0] for i in idx]
    dst = [pairs[i][1] for i in idx]
    g = UncertainGraph([f"n{i}" for i in range(n)], np.zeros(n), src, dst, np.zeros(m))
    return assign_random_probabilities(g, seed)
