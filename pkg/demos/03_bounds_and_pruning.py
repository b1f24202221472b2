"""Cheap bounds that settle most of the top-k without sampling.

Computes order-z lower/upper bounds, then uses them to split nodes into
verified (provably top-k), candidates (need sampling), and pruned
(provably not top-k).
"""

from vulnk import compute_bounds, reduce_candidates, synth_graph


def main() -> None:
    g = synth_graph("power-law", 500, 1500, seed=3)
    k = 25

    for z in (1, 2):
        bt = compute_bounds(g, z)
        rep = reduce_candidates(bt, k)
        print(f"z={z}: verified {rep.k_prime:>3}/{k}, "
              f"candidates {rep.candidates.size:>3}, "
              f"pruned {rep.pruned.size:>3} of {g.n}")
        print(f"      thresholds: T_l={rep.t_lower:.4f}  T_u={rep.t_upper:.4f}")

    bt = compute_bounds(g, 2)
    rep = reduce_candidates(bt, k)
    print("\nsample of verified nodes (lower bound already clears the bar):")
    for v in rep.verified[:5]:
        print(f"  {g.labels[v]:>6}  p_l={bt.lower[v]:.4f}  p_u={bt.upper[v]:.4f}")
    print("sample of contested candidates:")
    for v in rep.candidates[:5]:
        print(f"  {g.labels[v]:>6}  p_l={bt.lower[v]:.4f}  p_u={bt.upper[v]:.4f}")


if __name__ == "__main__":
    main()
