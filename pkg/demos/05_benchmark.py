"""Method comparison on one synthetic graph.

Runs the full method ladder with a shared seed and reports wall time,
samples drawn, and precision against a fixed-sample ground truth.
"""

from vulnk import ApproxParams, bench, synth_graph


def main() -> None:
    g = synth_graph("power-law", 2000, 6000, seed=11)
    report = bench(
        g, k=100,
        methods=["N", "SN", "SR", "BSR", "BSRBK"],
        params=ApproxParams(),
        seed=55,
        fixed_samples=20000,
    )
    print(report.to_tsv(), end="")


if __name__ == "__main__":
    main()
