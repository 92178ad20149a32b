"""Boundary similarity curve from sliding windows of paragraph term vectors."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .corpus import Document, Paragraph
from .errors import BoundaryOutOfRange, TooFewParagraphs

TermVector = dict[str, float]


@dataclass(frozen=True)
class WindowConfig:
    k: int = 50
    W: int = 3
    weighting: str = "triangular"

    def __post_init__(self):
        if self.k < 1 or self.W < 1:
            raise ValueError("k and W must be >= 1")
        if self.weighting != "triangular":
            raise ValueError(f"unknown weighting {self.weighting!r}")


def top_k_terms(paragraph: Paragraph | Mapping[str, int], k: int) -> TermVector:
    """Keep the ``k`` most frequent terms; ties go to the lexicographically smaller term."""
    terms = paragraph.terms if isinstance(paragraph, Paragraph) else paragraph
    ranked = sorted(terms.items(), key=lambda item: (-item[1], item[0]))
    return {term: float(count) for term, count in ranked[:k] if count > 0}


def cosine(u: Mapping[str, float], v: Mapping[str, float]) -> float:
    u_max = max(u.values(), default=0.0)
    v_max = max(v.values(), default=0.0)
    if u_max <= 0.0 or v_max <= 0.0:
        return 0.0
    # rescale to avoid under/overflow in the squared norms
    u = {t: w / u_max for t, w in u.items()}
    v = {t: w / v_max for t, w in v.items()}
    # fixed summation order so cosine(u, v) == cosine(v, u) bit for bit
    dot = sum(u[term] * v[term] for term in sorted(u.keys() & v.keys()))
    # one sqrt of the product keeps cosine(u, u) exactly 1.0
    norm = math.sqrt(sum(w * w for w in u.values()) * sum(w * w for w in v.values()))
    return min(1.0, max(0.0, dot / norm))


def window_vector(doc: Document, boundary: int, side: str, cfg: WindowConfig) -> TermVector:
    """Weighted sum of the top-k vectors of up to ``W`` paragraphs on one side.

    ``boundary`` b sits between paragraphs b and b+1 (1-based). The paragraph
    at distance d from the boundary gets weight (W - d + 1) / W.
    """
    n = doc.n
    if not 1 <= boundary <= n - 1:
        raise BoundaryOutOfRange(f"boundary {boundary} not in 1..{n - 1}")
    if side == "left":
        indices = range(boundary, max(boundary - cfg.W, 0), -1)
    elif side == "right":
        indices = range(boundary + 1, min(boundary + cfg.W, n) + 1)
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    combined: TermVector = {}
    for d, index in enumerate(indices, start=1):
        weight = (cfg.W - d + 1) / cfg.W
        for term, value in top_k_terms(doc.paragraphs[index - 1], cfg.k).items():
            combined[term] = combined.get(term, 0.0) + weight * value
    return combined


def similarity_curve(doc: Document, cfg: WindowConfig | None = None) -> list[float]:
    """Return ``sim[1..n-1]`` as a 0-based list (element b-1 is boundary b)."""
    cfg = cfg or WindowConfig()
    if doc.n < 2:
        raise TooFewParagraphs(f"need at least 2 paragraphs, got {doc.n}")
    return [
        cosine(window_vector(doc, b, "left", cfg), window_vector(doc, b, "right", cfg))
        for b in range(1, doc.n)
    ]


def curve_csv(curve: Sequence[float]) -> str:
    rows = ["boundary,similarity"]
    rows.extend(f"{b},{value:.6f}" for b, value in enumerate(curve, start=1))
    return "\n".join(rows) + "\n"
