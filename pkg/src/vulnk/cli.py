"""Command-line interface: `vulnk <subcommand>`.

Exit codes: 0 success, 2 validation/usage error, 1 internal error.
"""

from __future__ import annotations

import argparse
import sys

from .bottomk import DEFAULT_BK
from .bounds import compute_bounds
from .errors import MismatchedK, VulnkError
from .forward import ApproxParams
from .graph import load_graph, serialize_graph
from .harness import (
    GROUND_TRUTH_SAMPLES,
    bench,
    ground_truth,
    parse_k,
    run_method,
)
from .oracle import exact_topk
from .results import EST_FREQ, TopKEntry, TopKResult, parse_result_tsv
from .synth import KINDS, synth_graph


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--nodes", required=True, help="node TSV: label<TAB>p_self")
    p.add_argument("--edges", required=True, help="edge TSV: src<TAB>dst<TAB>p_diff")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vulnk",
        description="Top-k vulnerable node detection in directed uncertain graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("topk", help="run one detection method")
    _add_graph_args(p)
    p.add_argument("--method", required=True, choices=["n", "sn", "sr", "bsr", "bsrbk"])
    p.add_argument("--k", required=True, help="integer or percentage like 5%%")
    p.add_argument("--eps", type=float, default=0.3)
    p.add_argument("--delta", type=float, default=0.1)
    p.add_argument("--z", type=int, default=2)
    p.add_argument("--bk", type=int, default=DEFAULT_BK)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=GROUND_TRUTH_SAMPLES,
                   help="fixed sample count for method n")
    p.add_argument("--out", default="-")

    p = sub.add_parser("oracle", help="exact top-k by exhaustive enumeration")
    _add_graph_args(p)
    p.add_argument("--k", required=True)
    p.add_argument("--out", default="-")

    p = sub.add_parser("truth", help="ground-truth ranking from a large sample run")
    _add_graph_args(p)
    p.add_argument("--k", required=True)
    p.add_argument("--samples", type=int, default=GROUND_TRUTH_SAMPLES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")

    p = sub.add_parser("bounds", help="per-node lower/upper bound TSV")
    _add_graph_args(p)
    p.add_argument("--z", type=int, default=2)
    p.add_argument("--out", default="-")

    p = sub.add_parser("eval", help="precision of a prediction vs a truth file")
    p.add_argument("--pred", required=True)
    p.add_argument("--truth", required=True)

    p = sub.add_parser("synth", help="generate a synthetic benchmark graph")
    p.add_argument("--kind", required=True, choices=list(KINDS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-nodes", required=True)
    p.add_argument("--out-edges", required=True)

    p = sub.add_parser("bench", help="compare methods on one graph")
    _add_graph_args(p)
    p.add_argument("--methods", default="n,sn,sr,bsr,bsrbk",
                   help="comma-separated method tags")
    p.add_argument("--k", required=True)
    p.add_argument("--eps", type=float, default=0.3)
    p.add_argument("--delta", type=float, default=0.1)
    p.add_argument("--z", type=int, default=2)
    p.add_argument("--bk", type=int, default=DEFAULT_BK)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=GROUND_TRUTH_SAMPLES)
    p.add_argument("--out", default="-")
    p.add_argument("--csv", default=None, help="also write a plot-ready CSV")

    return parser


def _cmd_topk(args) -> None:
    g = load_graph(args.nodes, args.edges)
    k = parse_k(args.k, g.n)
    params = ApproxParams(args.eps, args.delta)
    result = run_method(
        g, args.method, k, params, args.seed,
        z=args.z, bk=args.bk, fixed_samples=args.samples,
    )
    _write(args.out, result.to_tsv())


def _cmd_oracle(args) -> None:
    g = load_graph(args.nodes, args.edges)
    result = exact_topk(g, parse_k(args.k, g.n))
    _write(args.out, result.to_tsv())


def _cmd_truth(args) -> None:
    g = load_graph(args.nodes, args.edges)
    k = parse_k(args.k, g.n)
    truth = ground_truth(g, k, samples=args.samples, seed=args.seed)
    entries = [
        TopKEntry(v, g.labels[v], float(truth.estimates[i]), False, EST_FREQ)
        for i, v in enumerate(truth.nodes[:k])
    ]
    result = TopKResult(
        method="TRUTH", entries=entries, k=k, seed=args.seed, t_used=args.samples
    )
    _write(args.out, result.to_tsv())


def _cmd_bounds(args) -> None:
    g = load_graph(args.nodes, args.edges)
    bt = compute_bounds(g, args.z)
    lines = ["node\tp_l\tp_u"]
    for v in range(g.n):
        lines.append(f"{g.labels[v]}\t{float(bt.lower[v])!r}\t{float(bt.upper[v])!r}")
    _write(args.out, "\n".join(lines) + "\n")


def _cmd_eval(args) -> None:
    with open(args.pred, encoding="utf-8") as f:
        pred = parse_result_tsv(f.read())
    with open(args.truth, encoding="utf-8") as f:
        truth = parse_result_tsv(f.read())
    if len(pred) != len(truth):
        raise MismatchedK(f"pred has {len(pred)} rows, truth has {len(truth)}")
    pred_set = {row[0] for row in pred}
    truth_set = {row[0] for row in truth}
    sys.stdout.write(f"{len(pred_set & truth_set) / len(truth):.4f}\n")


def _cmd_synth(args) -> None:
    g = synth_graph(args.kind, args.n, args.m, args.seed)
    nodes_text, edges_text = serialize_graph(g)
    _write(args.out_nodes, nodes_text)
    _write(args.out_edges, edges_text)


def _cmd_bench(args) -> None:
    g = load_graph(args.nodes, args.edges)
    k = parse_k(args.k, g.n)
    params = ApproxParams(args.eps, args.delta)
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    report = bench(
        g, k, methods, params, args.seed,
        z=args.z, bk=args.bk, fixed_samples=args.samples,
    )
    _write(args.out, report.to_tsv())
    if args.csv:
        _write(args.csv, report.to_csv())


_COMMANDS = {
    "topk": _cmd_topk,
    "oracle": _cmd_oracle,
    "truth": _cmd_truth,
    "bounds": _cmd_bounds,
    "eval": _cmd_eval,
    "synth": _cmd_synth,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _COMMANDS[args.command](args)
    except VulnkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal error
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
