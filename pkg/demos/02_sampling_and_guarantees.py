"""Monte Carlo estimation with an accuracy contract.

Shows how sampled frequencies converge to the exact answer, how the
sample-size rule turns an (eps, delta) target into a concrete number of
worlds, and that the SN method's top-k set respects the contract.
"""

from vulnk import (
    ApproxParams,
    basic_sample_size,
    chain_example,
    exact_default_probabilities,
    forward_default_counts,
    sn_topk,
    synth_graph,
)


def main() -> None:
    g = chain_example()
    exact = exact_default_probabilities(g)
    print("chain A->B: estimate vs exact as samples grow")
    for t in (100, 1000, 10000, 100000):
        est = forward_default_counts(g, seed=7, t=t) / t
        print(f"  t={t:>6}  p(B) ~= {est[1]:.4f}   (exact {exact[1]})")

    params = ApproxParams(eps=0.3, delta=0.1)
    print("\nsamples needed for the (0.3, 0.1) contract:")
    for n, k in ((100, 10), (1000, 50), (50000, 500)):
        print(f"  n={n:>6} k={k:>4}  t = {basic_sample_size(n, k, params)}")

    g = synth_graph("random-dag", 40, 120, seed=5)
    r = sn_topk(g, 5, params, seed=9)
    print(f"\nSN top-5 on a 40-node DAG ({r.t_used} samples):")
    for e in r.entries:
        print(f"  rank {e.label:>4}  estimate {e.estimate:.3f}")


if __name__ == "__main__":
    main()
