"""Monte Carlo estimation of skew Brownian motion occupation-time moments
via a skew simple random walk.

Lattice construction (Harrison/Shepp): from state 0 the walk steps to +1
with probability alpha and to -1 otherwise; away from 0 it is a symmetric
simple walk.  This converges in law to a skew Brownian motion with
skewness alpha.  Scaling ``steps`` lattice steps onto the unit time
interval, the positive occupation time is estimated as

    A_1  ~  #{intervals on which the interpolated path is nonnegative} / steps,

where interval i counts iff S_i >= 0 and S_{i+1} >= 0 (state 0 itself is
nonnegative).  Under this two-endpoint rule an interval is nonnegative
exactly when the excursion containing it is positive, which happens with
probability alpha independently of the reflected walk, so
E[occupation fraction] = alpha with no discretization bias; counting left
endpoints alone would inflate the mean by roughly
(1 - alpha) * E[#visits to 0] / steps ~ steps^(-1/2), a multiple-sigma
systematic offset at the sample sizes used by the statistical checks.
Residual bias for higher moments is O(1/steps).

Determinism: paths are partitioned into fixed blocks of ``BATCH_PATHS``;
block b draws from a counter-based Philox stream keyed by (seed, b), and
moment accumulation is exact integer arithmetic on the per-path lattice
counts.  A given ``SimConfig`` therefore produces bit-identical results
regardless of the worker count.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .families import pn_skew_bm
from .polys import Rational

BATCH_PATHS = 32768


@dataclass(frozen=True)
class SimConfig:
    """Parameters of one moment-estimation run.

    alpha is the skewness (probability of a positive excursion), steps the
    walk length N, paths the number of independent walks, max_moment the
    largest moment order reported, seed the 64-bit RNG key.
    """

    alpha: float
    steps: int
    paths: int
    max_moment: int
    seed: int

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ValueError("alpha must lie strictly between 0 and 1")
        if self.steps < 1:
            raise ValueError("steps must be positive")
        if self.paths < 1:
            raise ValueError("paths must be positive")
        if self.max_moment < 1:
            raise ValueError("max_moment must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")


@dataclass(frozen=True)
class MomentEstimate:
    n: int
    empirical_mean: float
    standard_error: float | None  # None when paths < 2 or the sample is degenerate
    exact_value: Fraction
    z_score: float | None


@dataclass(frozen=True)
class SimResult:
    config: SimConfig
    time_fraction: Fraction
    moments: tuple[MomentEstimate, ...]
    paths_used: int


def _block_rng(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=[seed, block]))


def _walk_counts(alpha: float, intervals: int, size: int, rng: np.random.Generator) -> np.ndarray:
    """Occupation counts over the first ``intervals`` unit intervals for
    ``size`` paths driven by one stream (draw order: step-major, then path).
    """
    pos = np.zeros(size, dtype=np.int32)
    occ = np.zeros(size, dtype=np.int32)
    u = np.empty(size, dtype=np.float64)
    thr = np.empty(size, dtype=np.float64)
    at0 = np.empty(size, dtype=bool)
    up = np.empty(size, dtype=bool)
    step = np.empty(size, dtype=np.int32)
    both = np.empty(size, dtype=np.int32)
    for _ in range(intervals):
        rng.random(out=u)
        np.equal(pos, 0, out=at0)
        np.multiply(at0, alpha - 0.5, out=thr, casting="unsafe")
        thr += 0.5
        np.less(u, thr, out=up)
        np.multiply(up, 2, out=step, casting="unsafe")
        step -= 1
        np.add(pos, step, out=step)  # step now holds the new position
        np.add(pos, step, out=both)  # old + new; > 0 iff both endpoints >= 0
        np.copyto(pos, step)
        np.greater(both, 0, out=up)
        np.add(occ, up, out=occ, casting="unsafe")
    return occ


def _block_counts(alpha: float, intervals: int, size: int, seed: int, block: int) -> np.ndarray:
    return _walk_counts(alpha, intervals, size, _block_rng(seed, block))


def simulate_skew_walk(alpha: float, steps: int, rng: np.random.Generator) -> Fraction:
    """Occupation fraction of a single skew walk, exact as a rational.

    Reproducible bit-for-bit given the generator's state.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError("alpha must lie strictly between 0 and 1")
    if steps < 1:
        raise ValueError("steps must be positive")
    counts = _walk_counts(alpha, steps, 1, rng)
    return Fraction(int(counts[0]), steps)


def path_occupation_counts(
    config: SimConfig, time_fraction: Rational = 1, jobs: int = 1
) -> np.ndarray:
    """Per-path lattice occupation counts over the first
    floor(time_fraction * steps) intervals, in path order."""
    t = Fraction(time_fraction)
    if not 0 < t <= 1:
        raise ValueError("time fraction must lie in (0, 1]")
    intervals = math.floor(t * config.steps)
    blocks = []
    start = 0
    b = 0
    while start < config.paths:
        size = min(BATCH_PATHS, config.paths - start)
        blocks.append((config.alpha, intervals, size, config.seed, b))
        start += size
        b += 1
    if jobs > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(blocks))) as pool:
            parts = list(pool.map(_block_counts, *zip(*blocks)))
    else:
        parts = [_block_counts(*blk) for blk in blocks]
    return np.concatenate(parts)


def _summarize(counts: np.ndarray, config: SimConfig, t: Fraction) -> SimResult:
    m_paths = int(counts.size)
    top = 2 * config.max_moment
    power_sums = [0] * (top + 1)
    for c in counts.tolist():  # exact integer accumulation, order-independent
        p = 1
        for n in range(1, top + 1):
            p *= c
            power_sums[n] += p
    alpha_exact = Fraction(config.alpha)
    steps = Fraction(config.steps)
    records = []
    for n in range(1, config.max_moment + 1):
        mean = Fraction(power_sums[n], m_paths) / steps**n
        exact = t**n * pn_skew_bm(n)(alpha_exact)
        stderr = None
        z = None
        if m_paths >= 2:
            second = Fraction(power_sums[2 * n], m_paths) / steps ** (2 * n)
            variance = (second - mean * mean) * Fraction(m_paths, m_paths - 1)
            if variance > 0:
                stderr = math.sqrt(variance / m_paths)
                z = (float(mean) - float(exact)) / stderr
        records.append(
            MomentEstimate(
                n=n,
                empirical_mean=float(mean),
                standard_error=stderr,
                exact_value=exact,
                z_score=z,
            )
        )
    return SimResult(config=config, time_fraction=t, moments=tuple(records), paths_used=m_paths)


def estimate_moments(config: SimConfig, jobs: int = 1) -> SimResult:
    """Empirical moments E[A_1^n] for n = 1..max_moment against the exact
    polynomial references, with standard errors and z-scores."""
    counts = path_occupation_counts(config, 1, jobs)
    return _summarize(counts, config, Fraction(1))


def self_similarity_check(config: SimConfig, t: Rational, jobs: int = 1) -> SimResult:
    """Estimate E[A_t^n] by truncating each path at fraction t of its steps;
    exact references scale as t^n times the t = 1 values."""
    tf = Fraction(t)
    if not 0 < tf <= 1:
        raise ValueError("time fraction must lie in (0, 1]")
    counts = path_occupation_counts(config, tf, jobs)
    return _summarize(counts, config, tf)


# ---------------------------------------------------------------------------
# serialization

def result_to_dict(result: SimResult) -> dict:
    cfg = result.config
    return {
        "config": {
            "alpha": cfg.alpha,
            "steps": cfg.steps,
            "paths": cfg.paths,
            "max_moment": cfg.max_moment,
            "seed": cfg.seed,
        },
        "time_fraction": str(result.time_fraction),
        "paths_used": result.paths_used,
        "moments": [
            {
                "n": m.n,
                "empirical_mean": m.empirical_mean,
                "standard_error": m.standard_error,
                "exact": str(m.exact_value),
                "exact_float": float(m.exact_value),
                "z_score": m.z_score,
            }
            for m in result.moments
        ],
    }


def result_to_json(result: SimResult) -> str:
    return json.dumps(result_to_dict(result), indent=2)


def result_to_csv(result: SimResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["n", "empirical_mean", "stderr", "exact", "z_score"])
    for m in result.moments:
        writer.writerow(
            [
                m.n,
                repr(m.empirical_mean),
                "" if m.standard_error is None else repr(m.standard_error),
                str(m.exact_value),
                "" if m.z_score is None else repr(m.z_score),
            ]
        )
    return buf.getvalue()
