"""Ground-truth generation, precision@k, and the method-comparison
benchmark runner."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .bottomk import DEFAULT_BK, bsrbk_topk
from .errors import InvalidArguments, InvalidK, MismatchedK
from .forward import ApproxParams, estimate_topk_basic, forward_default_counts, sn_topk
from .graph import UncertainGraph
from .results import TopKResult
from .reverse import bsr_topk

GROUND_TRUTH_SAMPLES = 20000
METHODS = ("N", "SN", "SR", "BSR", "BSRBK")


@dataclass
class GroundTruth:
    """Full ranking from a large fixed-sample forward run."""

    nodes: list[int]          # all nodes, probability descending, NodeId tie-break
    estimates: np.ndarray     # aligned with `nodes`
    k: int
    p_k: float                # estimate of the rank-k node
    samples: int
    seed: int

    def topk_set(self) -> set[int]:
        return set(self.nodes[: self.k])


def ground_truth(
    g: UncertainGraph,
    k: int,
    samples: int = GROUND_TRUTH_SAMPLES,
    seed: int = 0,
) -> GroundTruth:
    if samples < 1:
        raise InvalidArguments("samples must be >= 1")
    if not (1 <= k <= g.n):
        raise InvalidK(f"k={k} outside 1..{g.n}")
    counts = forward_default_counts(g, seed, samples)
    est = counts / samples
    order = sorted(range(g.n), key=lambda v: (-est[v], v))
    return GroundTruth(
        nodes=order,
        estimates=est[order],
        k=k,
        p_k=float(est[order[k - 1]]),
        samples=samples,
        seed=seed,
    )


def precision_at_k(pred: TopKResult, truth: GroundTruth) -> float:
    if pred.k != truth.k:
        raise MismatchedK(f"pred k={pred.k} vs truth k={truth.k}")
    return len(pred.node_set() & truth.topk_set()) / pred.k


def parse_k(spec: str | int, n: int) -> int:
    """k as an absolute integer or a percentage string like '5%'."""
    if isinstance(spec, int):
        return spec
    text = spec.strip()
    if text.endswith("%"):
        frac = float(text[:-1]) / 100.0
        return max(1, round(frac * n))
    return int(text)


def run_method(
    g: UncertainGraph,
    method: str,
    k: int,
    params: ApproxParams,
    seed: int,
    z: int = 2,
    bk: int = DEFAULT_BK,
    fixed_samples: int = GROUND_TRUTH_SAMPLES,
) -> TopKResult:
    method = method.upper()
    if method == "N":
        return estimate_topk_basic(g, k, fixed_samples, seed, method="N")
    if method == "SN":
        return sn_topk(g, k, params, seed)
    if method == "SR":
        return bsr_topk(g, k, params, z=z, seed=seed, use_verification=False)
    if method == "BSR":
        return bsr_topk(g, k, params, z=z, seed=seed, use_verification=True)
    if method == "BSRBK":
        return bsrbk_topk(g, k, params, z=z, bk=bk, seed=seed)
    raise InvalidArguments(f"unknown method {method!r}; expected one of {METHODS}")


@dataclass
class BenchRow:
    method: str
    k: int
    wall_time: float
    t_used: int
    precision: float


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)

    def to_tsv(self) -> str:
        lines = ["method\tk\twall_time_s\tsamples\tprecision"]
        for r in self.rows:
            lines.append(
                f"{r.method}\t{r.k}\t{r.wall_time:.6f}\t{r.t_used}\t{r.precision:.4f}"
            )
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        lines = ["method,k,wall_time_s,samples,precision"]
        for r in self.rows:
            lines.append(
                f"{r.method},{r.k},{r.wall_time:.6f},{r.t_used},{r.precision:.4f}"
            )
        return "\n".join(lines) + "\n"


def bench(
    g: UncertainGraph,
    k: int,
    methods,
    params: ApproxParams,
    seed: int,
    z: int = 2,
    bk: int = DEFAULT_BK,
    fixed_samples: int = GROUND_TRUTH_SAMPLES,
    truth_seed: int | None = None,
) -> BenchReport:
    """Run each method with the identical seed and report wall time, sample
    count, and precision against a fixed-sample ground truth (drawn from a
    different seed).  A warm-up run on a tiny sample count is excluded from
    timing so JIT compilation does not pollute the first method."""
    truth = ground_truth(
        g, k, samples=fixed_samples, seed=seed + 1 if truth_seed is None else truth_seed
    )
    estimate_topk_basic(g, min(k, g.n), 2, seed)  # warm-up, excluded
    report = BenchReport()
    for method in methods:
        start = time.perf_counter()
        result = run_method(
            g, method, k, params, seed, z=z, bk=bk, fixed_samples=fixed_samples
        )
        elapsed = time.perf_counter() - start
        report.rows.append(
            BenchRow(
                method=result.method,
                k=k,
                wall_time=elapsed,
                t_used=result.t_used or 0,
                precision=precision_at_k(result, truth),
            )
        )
    return report
