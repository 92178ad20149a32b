"""Minimum-cost fragment boundary selection by dynamic programming.

Boundary ``b`` sits between paragraphs ``b`` and ``b + 1``; boundary 0 is the
start of the text and always has similarity 0. The objective for a boundary
set ``B`` is the sum of the length costs of the induced fragments plus the
similarities at the chosen boundaries.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Iterable, Sequence

from .costs import CostSpec, length_cost
from .errors import InvalidBoundary, InvalidInput

PRUNING_MODES = ("safe", "verbatim", "off")
# Candidates closer than this (relative) count as ties; keeps tie-breaking
# independent of floating-point summation order.
TIE_TOLERANCE = 1e-12


def improves(c: float, c_min: float) -> bool:
    """Strictly better than ``c_min`` by more than rounding noise."""
    if c_min == math.inf:
        return c < math.inf
    return c < c_min - TIE_TOLERANCE * max(1.0, abs(c_min))


@dataclass(frozen=True)
class SegmentInput:
    lengths: tuple[int, ...]
    sims: tuple[float, ...]
    spec: CostSpec

    def __init__(self, lengths: Sequence[int], sims: Sequence[float], spec: CostSpec):
        object.__setattr__(self, "lengths", tuple(int(x) for x in lengths))
        object.__setattr__(self, "sims", tuple(float(s) for s in sims))
        object.__setattr__(self, "spec", spec)
        if not self.lengths:
            raise InvalidInput("lengths must be non-empty")
        if any(x < 1 for x in self.lengths):
            raise InvalidInput("paragraph lengths must be positive")
        if len(self.sims) != len(self.lengths) - 1:
            raise InvalidInput(
                f"curve has {len(self.sims)} values, expected {len(self.lengths) - 1}"
            )
        if any(math.isnan(s) or math.isinf(s) for s in self.sims):
            raise InvalidInput("similarities must be finite")

    @property
    def n(self) -> int:
        return len(self.lengths)


@dataclass(frozen=True)
class DpState:
    cost: tuple[float, ...]       # cost[0..n], cost[0] == 0
    link_prev: tuple[int, ...]    # link_prev[0..n], entry 0 unused (0)


@dataclass(frozen=True)
class Segmentation:
    boundaries: tuple[int, ...]
    total_cost: float


def _check_boundaries(boundaries: Iterable[int], n: int) -> list[int]:
    result = set()
    for b in boundaries:
        try:
            b = operator.index(b)
        except TypeError:
            raise InvalidBoundary(f"boundary {b!r} is not an integer") from None
        if not 1 <= b <= n - 1:
            raise InvalidBoundary(f"boundary {b} not in 1..{n - 1}")
        result.add(b)
    return sorted(result)


def total_cost(boundaries: Iterable[int], inp: SegmentInput) -> float:
    """Evaluate the objective directly for a given boundary set."""
    bs = _check_boundaries(boundaries, inp.n)
    cuts = [0, *bs, inp.n]
    cost = 0.0
    for start, end in zip(cuts, cuts[1:]):
        cost += length_cost(sum(inp.lengths[start:end]), inp.spec)
    return cost + sum(inp.sims[b - 1] for b in bs)


def run_dp(inp: SegmentInput, pruning: str = "safe") -> DpState:
    """Fill the cost and predecessor tables.

    ``safe`` stops scanning earlier split points once the growing final
    fragment is at least ``p`` words and its length cost alone exceeds the
    best candidate; past ``p`` the length cost only grows, so nothing further
    can win. ``verbatim`` stops on the length-cost test alone, regardless of
    length, and can miss the optimum. ``off`` scans every split point.
    """
    if pruning not in PRUNING_MODES:
        raise ValueError(f"pruning must be one of {PRUNING_MODES}, got {pruning!r}")
    if pruning != "off" and any(s < 0 for s in inp.sims):
        raise InvalidInput("negative similarities require pruning='off'")

    n, lengths, spec = inp.n, inp.lengths, inp.spec
    sim = (0.0, *inp.sims)  # sim[0] is the text start
    cost = [0.0] * (n + 1)
    link_prev = [0] * (n + 1)
    for par in range(1, n + 1):
        len_sum = 0
        c_min = math.inf
        loc_c_min = par - 1
        for i in range(par, 0, -1):
            len_sum += lengths[i - 1]
            c = length_cost(len_sum, spec)
            if c > c_min and (pruning == "verbatim" or (pruning == "safe" and len_sum >= spec.p)):
                break
            c += cost[i - 1] + sim[i - 1]
            if improves(c, c_min):
                c_min = c
                loc_c_min = i - 1
        cost[par] = c_min
        link_prev[par] = loc_c_min
    return DpState(tuple(cost), tuple(link_prev))


def backtrack(state: DpState) -> tuple[int, ...]:
    boundaries = []
    j = len(state.link_prev) - 1
    while state.link_prev[j] > 0:
        j = state.link_prev[j]
        boundaries.append(j)
    return tuple(reversed(boundaries))


def segment(inp: SegmentInput, pruning: str = "safe") -> Segmentation:
    """Return a minimum-cost segmentation of ``inp``.

    On exact ties the candidate with the shortest final fragment wins.
    """
    state = run_dp(inp, pruning)
    return Segmentation(backtrack(state), state.cost[-1])
