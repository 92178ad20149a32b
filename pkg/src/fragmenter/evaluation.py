"""Exhaustive optimality oracle and fragment-length statistics."""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .costs import FAMILIES, CostSpec
from .errors import InstanceTooLarge, InvalidBoundary
from .segmenter import TIE_TOLERANCE, SegmentInput, Segmentation, segment

log = logging.getLogger(__name__)

MAX_BRUTE_FORCE_N = 20


@dataclass(frozen=True)
class FragmentStats:
    l_avg: float
    l_min: int
    l_max: int
    d_avg: float
    m: int


def _length_cost_array(x: np.ndarray, spec: CostSpec) -> np.ndarray:
    # written out independently of costs.length_cost so the oracle shares no code with the DP
    ratio = x / spec.p
    if spec.family == "parabola":
        return spec.h * (ratio - 1.0) ** 2
    return spec.h * np.abs(ratio - 1.0)


def brute_force_segment(inp: SegmentInput) -> Segmentation:
    """Score all 2^(n-1) boundary subsets and return the cheapest.

    Equal-cost minimizers (within rounding) are resolved in favour of the
    lexicographically smallest boundary sequence.
    """
    n = inp.n
    if n > MAX_BRUTE_FORCE_N:
        raise InstanceTooLarge(f"n={n} exceeds the enumeration limit of {MAX_BRUTE_FORCE_N}")
    if n == 1:
        return Segmentation((), float(_length_cost_array(np.array([inp.lengths[0]], float), inp.spec)[0]))

    masks = np.arange(2 ** (n - 1), dtype=np.int64)
    # bits[s, b-1] == 1 iff boundary b is chosen in subset s
    bits = (masks[:, None] >> np.arange(n - 1)) & 1
    sims = np.asarray(inp.sims, dtype=float)
    sim_cost = bits @ sims

    # fragment id of each paragraph, then per-(subset, fragment) word totals
    frag_id = np.concatenate([np.zeros((len(masks), 1), np.int64), np.cumsum(bits, axis=1)], axis=1)
    flat = (np.arange(len(masks))[:, None] * n + frag_id).ravel()
    weights = np.tile(np.asarray(inp.lengths, dtype=float), len(masks))
    frag_len = np.bincount(flat, weights=weights, minlength=len(masks) * n).reshape(len(masks), n)
    used = np.arange(n)[None, :] <= frag_id[:, -1:]
    len_cost = np.where(used, _length_cost_array(frag_len, inp.spec), 0.0).sum(axis=1)

    totals = len_cost + sim_cost
    best = totals.min()
    tied = np.flatnonzero(totals <= best + TIE_TOLERANCE * max(1.0, abs(best)))
    choice = min(tied, key=lambda s: tuple(np.flatnonzero(bits[s])))
    return Segmentation(tuple(int(b) + 1 for b in np.flatnonzero(bits[choice])), float(totals[choice]))


def fragment_lengths(boundaries: Iterable[int], lengths: Sequence[int]) -> list[int]:
    n = len(lengths)
    bs = sorted(set(boundaries))
    if any(not 1 <= b <= n - 1 for b in bs):
        raise InvalidBoundary(f"boundaries {bs} not within 1..{n - 1}")
    cuts = [0, *bs, n]
    return [sum(lengths[a:b]) for a, b in zip(cuts, cuts[1:])]


def length_stats(fragments: Sequence[float], p: float) -> FragmentStats:
    if not fragments:
        raise ValueError("need at least one fragment")
    m = len(fragments)
    return FragmentStats(
        l_avg=sum(fragments) / m,
        l_min=min(fragments),
        l_max=max(fragments),
        d_avg=sum(abs(p - x) for x in fragments) / m,
        m=m,
    )


def random_instance(rng: random.Random, n_range=(2, 14), len_range=(50, 1200)) -> SegmentInput:
    """Draw a fuzz instance from the acceptance distribution."""
    n = rng.randint(*n_range)
    lengths = [rng.randint(*len_range) for _ in range(n)]
    sims = [rng.random() for _ in range(n - 1)]
    spec = CostSpec(rng.choice(FAMILIES), rng.choice((300, 600, 1000)), rng.choice((0.25, 0.5, 1.0, 1.5)))
    return SegmentInput(lengths, sims, spec)


@dataclass
class SelfTestReport:
    seed: int
    cases: int
    cost_mismatches: list = field(default_factory=list)
    boundary_mismatches: list = field(default_factory=list)
    pruning_mismatches: list = field(default_factory=list)
    verbatim_divergences: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not (self.cost_mismatches or self.boundary_mismatches or self.pruning_mismatches)

    def summary(self) -> str:
        lines = [
            f"seed={self.seed} cases={self.cases} time={self.seconds:.2f}s",
            f"dp vs oracle cost mismatches: {len(self.cost_mismatches)}",
            f"dp vs oracle boundary mismatches: {len(self.boundary_mismatches)}",
            f"safe vs off pruning mismatches: {len(self.pruning_mismatches)}",
            f"verbatim pruning divergences from oracle: {len(self.verbatim_divergences)}",
            "PASS" if self.ok else "FAIL",
        ]
        return "\n".join(lines)


def self_test(seed: int = 0, cases: int = 500, tol: float = 1e-9) -> SelfTestReport:
    """Compare the DP against the exhaustive oracle on seeded random instances."""
    log.info("self-test seed=%d cases=%d", seed, cases)
    rng = random.Random(seed)
    report = SelfTestReport(seed, cases)
    start = time.perf_counter()
    for case in range(cases):
        inp = random_instance(rng)
        oracle = brute_force_segment(inp)
        safe = segment(inp, "safe")
        off = segment(inp, "off")
        verbatim = segment(inp, "verbatim")
        if abs(safe.total_cost - oracle.total_cost) > tol:
            report.cost_mismatches.append((case, inp, safe, oracle))
        if safe.boundaries != oracle.boundaries:
            report.boundary_mismatches.append((case, inp, safe, oracle))
        if safe.boundaries != off.boundaries:
            report.pruning_mismatches.append((case, inp, safe, off))
        if verbatim.total_cost - oracle.total_cost > tol:
            log.info(
                "verbatim pruning missed the optimum on case %d: %s vs %s (cost %.6f vs %.6f)",
                case, verbatim.boundaries, oracle.boundaries, verbatim.total_cost, oracle.total_cost,
            )
            report.verbatim_divergences.append((case, inp, verbatim, oracle))
    report.seconds = time.perf_counter() - start
    return report
