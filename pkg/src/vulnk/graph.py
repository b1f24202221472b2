"""Directed uncertain graph: per-node self-risk probability, per-edge
diffusion probability, CSR adjacency in both directions, TSV parsing."""

from __future__ import annotations

import io
from typing import Iterable, Sequence

import numpy as np

from .coins import KIND_PROB_EDGE, KIND_PROB_NODE, _u64, coins_for_ids
from .errors import (
    DuplicateEdge,
    MalformedLine,
    ProbabilityOutOfRange,
    SelfEdge,
    UnknownLabel,
)


def _csr(n: int, heads: np.ndarray, tails: np.ndarray):
    """CSR index over edges keyed by `heads`; neighbor = tails, plus the
    original edge id of every slot."""
    m = heads.size
    order = np.lexsort((np.arange(m), heads))
    counts = np.bincount(heads, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return indptr, tails[order].astype(np.int64), order.astype(np.int64)


class UncertainGraph:
    """Immutable after construction; safe to share across workers."""

    def __init__(
        self,
        labels: Sequence[str],
        self_risk: Sequence[float],
        edge_src: Sequence[int],
        edge_dst: Sequence[int],
        edge_prob: Sequence[float],
    ):
        self.labels = tuple(labels)
        self.self_risk = np.asarray(self_risk, dtype=np.float64)
        self.edge_src = np.asarray(edge_src, dtype=np.int64)
        self.edge_dst = np.asarray(edge_dst, dtype=np.int64)
        self.edge_prob = np.asarray(edge_prob, dtype=np.float64)
        self.n = len(self.labels)
        self.m = self.edge_src.size
        self._validate()
        self.label_to_id = {lab: i for i, lab in enumerate(self.labels)}
        self.out_indptr, self.out_dst, self.out_eid = _csr(
            self.n, self.edge_src, self.edge_dst
        )
        self.in_indptr, self.in_src, self.in_eid = _csr(
            self.n, self.edge_dst, self.edge_src
        )

    def _validate(self) -> None:
        if self.self_risk.size != self.n:
            raise MalformedLine("self_risk length does not match label count")
        if not (self.edge_dst.size == self.m and self.edge_prob.size == self.m):
            raise MalformedLine("edge arrays have inconsistent lengths")
        if self.n and (self.self_risk.min() < 0.0 or self.self_risk.max() > 1.0):
            raise ProbabilityOutOfRange("self-risk probability outside [0, 1]")
        if self.m:
            if self.edge_prob.min() < 0.0 or self.edge_prob.max() > 1.0:
                raise ProbabilityOutOfRange("diffusion probability outside [0, 1]")
            if self.edge_src.min() < 0 or self.edge_src.max() >= self.n:
                raise UnknownLabel("edge source id out of range")
            if self.edge_dst.min() < 0 or self.edge_dst.max() >= self.n:
                raise UnknownLabel("edge destination id out of range")
            if np.any(self.edge_src == self.edge_dst):
                raise SelfEdge("self-edges are not allowed")
            pair_keys = self.edge_src * self.n + self.edge_dst
            if np.unique(pair_keys).size != self.m:
                raise DuplicateEdge("duplicate (src, dst) edge")
        if len(set(self.labels)) != self.n:
            raise MalformedLine("duplicate node label")

    # -- accessors ---------------------------------------------------------

    def label_of(self, node: int) -> str:
        return self.labels[node]

    def id_of(self, label: str) -> int:
        try:
            return self.label_to_id[label]
        except KeyError:
            raise UnknownLabel(f"unknown node label {label!r}") from None

    def out_neighbors(self, v: int):
        s, e = self.out_indptr[v], self.out_indptr[v + 1]
        return self.out_dst[s:e], self.out_eid[s:e]

    def in_neighbors(self, v: int):
        s, e = self.in_indptr[v], self.in_indptr[v + 1]
        return self.in_src[s:e], self.in_eid[s:e]

    def edges_identical(self, other: "UncertainGraph") -> bool:
        return (
            self.labels == other.labels
            and np.array_equal(self.self_risk, other.self_risk)
            and np.array_equal(self.edge_src, other.edge_src)
            and np.array_equal(self.edge_dst, other.edge_dst)
            and np.array_equal(self.edge_prob, other.edge_prob)
        )


def reverse(g: UncertainGraph) -> UncertainGraph:
    """Flip every edge direction; edge ids and probabilities are preserved,
    so coin keys stay aligned with the original graph."""
    return UncertainGraph(g.labels, g.self_risk, g.edge_dst, g.edge_src, g.edge_prob)


def _iter_lines(text) -> Iterable[str]:
    if isinstance(text, str):
        return text.splitlines()
    if isinstance(text, io.IOBase):
        return text
    return text  # any iterable of lines


def parse_graph(nodes_text, edges_text) -> UncertainGraph:
    """Parse TSV node/edge streams.

    Node lines: ``label<TAB>p_self``; edge lines:
    ``src_label<TAB>dst_label<TAB>p_diff``.  Blank lines and lines
    starting with ``#`` are ignored.  Node order defines NodeId order.
    """
    labels: list[str] = []
    seen: set[str] = set()
    ps: list[float] = []
    for lineno, raw in enumerate(_iter_lines(nodes_text), 1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise MalformedLine(f"nodes line {lineno}: expected 2 fields, got {len(parts)}")
        label, prob_text = parts
        if label in seen:
            raise MalformedLine(f"nodes line {lineno}: duplicate label {label!r}")
        seen.add(label)
        ps.append(_parse_prob(prob_text, "nodes", lineno))
        labels.append(label)

    label_to_id = {lab: i for i, lab in enumerate(labels)}
    src: list[int] = []
    dst: list[int] = []
    pe: list[float] = []
    seen_edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(_iter_lines(edges_text), 1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise MalformedLine(f"edges line {lineno}: expected 3 fields, got {len(parts)}")
        s_label, d_label, prob_text = parts
        if s_label not in label_to_id:
            raise UnknownLabel(f"edges line {lineno}: unknown label {s_label!r}")
        if d_label not in label_to_id:
            raise UnknownLabel(f"edges line {lineno}: unknown label {d_label!r}")
        s, d = label_to_id[s_label], label_to_id[d_label]
        if s == d:
            raise SelfEdge(f"edges line {lineno}: self-edge on {s_label!r}")
        if (s, d) in seen_edges:
            raise DuplicateEdge(f"edges line {lineno}: duplicate edge {s_label!r}->{d_label!r}")
        seen_edges.add((s, d))
        src.append(s)
        dst.append(d)
        pe.append(_parse_prob(prob_text, "edges", lineno))

    return UncertainGraph(labels, ps, src, dst, pe)


def _parse_prob(text: str, which: str, lineno: int) -> float:
    try:
        p = float(text)
    except ValueError:
        raise MalformedLine(f"{which} line {lineno}: bad number {text!r}") from None
    if not (0.0 <= p <= 1.0):
        raise ProbabilityOutOfRange(f"{which} line {lineno}: probability {p} outside [0, 1]")
    return p


def serialize_graph(g: UncertainGraph) -> tuple[str, str]:
    """Inverse of parse_graph: returns (nodes_text, edges_text).  Floats use
    shortest round-trip repr, so parse(serialize(g)) is bit-identical."""
    nodes = "".join(f"{lab}\t{float(p)!r}\n" for lab, p in zip(g.labels, g.self_risk))
    edges = "".join(
        f"{g.labels[s]}\t{g.labels[d]}\t{float(p)!r}\n"
        for s, d, p in zip(g.edge_src, g.edge_dst, g.edge_prob)
    )
    return nodes, edges


def load_graph(nodes_path: str, edges_path: str) -> UncertainGraph:
    with open(nodes_path, encoding="utf-8") as nf, open(edges_path, encoding="utf-8") as ef:
        return parse_graph(nf, ef)


def assign_random_probabilities(g: UncertainGraph, seed: int) -> UncertainGraph:
    """Redraw every self-risk and diffusion probability i.i.d. uniform from
    the seed; same seed gives bit-identical tables."""
    s = _u64(seed)
    zero = _u64(0)
    ps = coins_for_ids(s, zero, _u64(KIND_PROB_NODE), g.n)
    pe = coins_for_ids(s, zero, _u64(KIND_PROB_EDGE), g.m)
    return UncertainGraph(g.labels, ps, g.edge_src, g.edge_dst, pe)
