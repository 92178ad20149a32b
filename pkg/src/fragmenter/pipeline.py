"""End-to-end runs: text -> curve -> segmentation -> statistics, and h sweeps."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Sequence

from .cohesion import WindowConfig, similarity_curve
from .corpus import Document
from .costs import CostSpec
from .evaluation import FragmentStats, fragment_lengths, length_stats
from .segmenter import SegmentInput, Segmentation, segment, total_cost

DEFAULT_SWEEP = (0.25, 0.5, 0.75, 1.0, 1.25, 1.5)


@dataclass(frozen=True)
class RunResult:
    spec: CostSpec
    window: WindowConfig
    pruning: str
    lengths: tuple[int, ...]
    curve: tuple[float, ...]
    segmentation: Segmentation
    fragments: tuple[int, ...]
    stats: FragmentStats

    def to_dict(self) -> dict:
        return {
            "boundaries": list(self.segmentation.boundaries),
            "fragment_lengths": list(self.fragments),
            "total_cost": self.segmentation.total_cost,
            "params": {
                "cost": self.spec.family,
                "p": self.spec.p,
                "h": self.spec.h,
                "k": self.window.k,
                "W": self.window.W,
                "pruning": self.pruning,
            },
            "stats": asdict(self.stats),
            "paragraph_lengths": list(self.lengths),
            "similarities": list(self.curve),
        }


def segment_document(
    doc: Document,
    spec: CostSpec,
    window: WindowConfig | None = None,
    pruning: str = "safe",
    curve: Sequence[float] | None = None,
) -> RunResult:
    window = window or WindowConfig()
    if curve is None:
        curve = similarity_curve(doc, window)
    inp = SegmentInput(doc.lengths, curve, spec)
    seg = segment(inp, pruning)
    frags = fragment_lengths(seg.boundaries, inp.lengths)
    return RunResult(
        spec, window, pruning, inp.lengths, inp.sims, seg, tuple(frags), length_stats(frags, spec.p)
    )


@dataclass(frozen=True)
class SweepRow:
    family: str
    h: float
    stats: FragmentStats
    runs: tuple[RunResult, ...]


def sweep(
    docs: Sequence[Document],
    families: Sequence[str],
    p: int,
    hs: Sequence[float] = DEFAULT_SWEEP,
    window: WindowConfig | None = None,
    pruning: str = "safe",
) -> list[SweepRow]:
    """One stats row per (family, h); fragments of all documents are pooled."""
    window = window or WindowConfig()
    curves = [similarity_curve(doc, window) for doc in docs]
    rows = []
    for family in families:
        for h in hs:
            spec = CostSpec(family, p, h)
            runs = tuple(
                segment_document(doc, spec, window, pruning, curve) for doc, curve in zip(docs, curves)
            )
            pooled = [x for run in runs for x in run.fragments]
            rows.append(SweepRow(family, h, length_stats(pooled, p), runs))
    return rows


STATS_COLUMNS = ("cost_function", "h", "l_avg", "l_min", "l_max", "d_avg")


def _row_values(row: SweepRow) -> list[str]:
    s = row.stats
    return [row.family, f"{row.h:.2f}", f"{s.l_avg:.1f}", str(s.l_min), str(s.l_max), f"{s.d_avg:.1f}"]


def stats_csv(rows: Sequence[SweepRow]) -> str:
    lines = [",".join(STATS_COLUMNS)]
    lines.extend(",".join(_row_values(row)) for row in rows)
    return "\n".join(lines) + "\n"


def stats_text(rows: Sequence[SweepRow]) -> str:
    """Aligned table grouped by cost function, one row per h."""
    header = ["cost function", "h", "l_avg", "l_min", "l_max", "d_avg"]
    body = []
    previous = None
    for row in rows:
        values = _row_values(row)
        if row.family == previous:
            values[0] = ""
        previous = row.family
        body.append(values)
    widths = [max(len(r[i]) for r in [header, *body]) for i in range(len(header))]

    def fmt(values):
        first = values[0].ljust(widths[0])
        rest = " ".join(v.rjust(w) for v, w in zip(values[2:], widths[2:]))
        return f"{first} | {values[1].rjust(widths[1])} | {rest}"

    rule = "-" * len(fmt(header))
    lines = [fmt(header), rule]
    for i, values in enumerate(body):
        if i and values[0]:
            lines.append(rule)
        lines.append(fmt(values))
    return "\n".join(lines) + "\n"


def run_json(results: Sequence[RunResult]) -> str:
    if len(results) == 1:
        payload = results[0].to_dict()
    else:
        payload = {"runs": [r.to_dict() for r in results]}
    return json.dumps(payload, indent=2) + "\n"


def recompute_total_cost(payload: dict) -> float:
    """Recompute the objective from an emitted JSON object (round-trip check)."""
    params = payload["params"]
    spec = CostSpec(params["cost"], params["p"], params["h"])
    inp = SegmentInput(payload["paragraph_lengths"], payload["similarities"], spec)
    return total_cost(payload["boundaries"], inp)
