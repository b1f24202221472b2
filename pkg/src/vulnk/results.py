"""Ranked result containers shared by all methods, plus TSV round-trip."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import MalformedLine

# estimator tags
EST_FREQ = "freq"       # v^c / t frequency estimate
EST_BOTTOMK = "bottomk"  # (bk-1) / (h^{bk} * t)
EST_BOUND = "bound"     # node verified/accepted from bounds, lower bound reported
EST_EXACT = "exact"     # exhaustive enumeration

TSV_HEADER = "rank\tnode\testimate\tverified\testimator"


@dataclass(frozen=True)
class TopKEntry:
    node: int
    label: str
    estimate: float
    verified: bool
    estimator: str


@dataclass
class TopKResult:
    method: str                      # N | SN | SR | BSR | BSRBK | ORACLE
    entries: list[TopKEntry]
    k: int
    seed: int | None = None
    t_used: int | None = None
    eps: float | None = None
    delta: float | None = None
    z: int | None = None
    bk: int | None = None
    wall_time: float | None = None
    extras: dict = field(default_factory=dict)

    def nodes(self) -> list[int]:
        return [e.node for e in self.entries]

    def node_set(self) -> set[int]:
        return {e.node for e in self.entries}

    def to_tsv(self) -> str:
        """Deterministic TSV (wall time deliberately excluded)."""
        meta = [f"method={self.method}", f"k={self.k}"]
        for name in ("eps", "delta", "z", "bk", "seed", "t_used"):
            value = getattr(self, name)
            if value is not None:
                meta.append(f"{name}={value!r}" if isinstance(value, float) else f"{name}={value}")
        lines = ["# " + " ".join(meta), TSV_HEADER]
        for rank, e in enumerate(self.entries, 1):
            lines.append(
                f"{rank}\t{e.label}\t{e.estimate!r}\t{int(e.verified)}\t{e.estimator}"
            )
        return "\n".join(lines) + "\n"


def parse_result_tsv(text: str) -> list[tuple[str, float, bool, str]]:
    """Rows of (label, estimate, verified, estimator) from a result TSV."""
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#") or line == TSV_HEADER:
            continue
        parts = line.split("\t")
        if len(parts) != 5:
            raise MalformedLine(f"bad result row: {raw!r}")
        _, label, est, verified, estimator = parts
        rows.append((label, float(est), verified == "1", estimator))
    return rows
