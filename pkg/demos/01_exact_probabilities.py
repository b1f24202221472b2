"""Exact default probabilities on tiny graphs.

Walks through the two hand-checkable examples: a two-node chain where
the answer can be read off the closed form, and a four-node diamond
where converging paths make the naive recursive formula overshoot.
"""

from vulnk import (
    chain_example,
    diamond_witness,
    enumerate_worlds,
    exact_default_probabilities,
    exact_topk,
    lower_bounds,
)


def main() -> None:
    g = chain_example()
    p = exact_default_probabilities(g)
    print("chain A->B, all probabilities 0.2")
    print(f"  p(A) = {p[0]}   (just its own risk)")
    print(f"  p(B) = {p[1]}   (= 1 - 0.8 * (1 - 0.2*0.2))")

    # the diamond: r -> x1 -> v and r -> x2 -> v share r's default event,
    # so the two paths into v are correlated
    d = diamond_witness()
    p = exact_default_probabilities(d)
    print("\ndiamond r->{x1,x2}->v")
    print(f"  exact p(v)          = {p[3]}")
    print(f"  recursive estimate  = {lower_bounds(d, 3)[3]}  (ignores the shared coin)")

    # every possible world, weighted; probabilities must sum to one
    total = sum(w for w, _ in enumerate_worlds(d))
    print(f"\n  sum of world probabilities = {total}")

    top = exact_topk(d, 2)
    print("\ntop-2 nodes of the diamond:")
    for e in top.entries:
        print(f"  {e.label}: {e.estimate}")


if __name__ == "__main__":
    main()
