"""Fragment-length cost families."""

from __future__ import annotations

from dataclasses import dataclass

FAMILIES = ("parabola", "linear")


@dataclass(frozen=True)
class CostSpec:
    family: str
    p: int
    h: float

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"cost family must be one of {FAMILIES}, got {self.family!r}")
        if self.p < 1:
            raise ValueError(f"preferred length must be >= 1, got {self.p}")
        if not self.h > 0:
            raise ValueError(f"scale must be > 0, got {self.h}")


def length_cost(x: float, spec: CostSpec) -> float:
    """Penalty for a fragment of ``x`` words; zero exactly at ``x == spec.p``."""
    p, h = spec.p, spec.h
    if spec.family == "parabola":
        # expanded form can round a hair below zero next to p
        return max(0.0, h * (x * x / (p * p) - 2 * x / p + 1))
    return abs(h * (x / p - 1))
