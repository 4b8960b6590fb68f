"""Monte Carlo replay of the MaxSPRT stopping rule.

Independent of the exact engine: arrivals are drawn as exponential gaps
and the statistic is evaluated directly at every look, with no boundary
inversion. Replications run in fixed-size blocks, each with its own
``SeedSequence(seed, spawn_key=(block,))`` stream, so results depend only
on (seed, replications, block_size) and not on execution order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .engine import SequentialDesign
from .errors import DomainError

BLOCK_SIZE = 1 << 16
HIST_BINS = 20


@dataclass(frozen=True)
class SimConfig:
    design: SequentialDesign
    replications: int
    seed: int
    block_size: int = BLOCK_SIZE

    def __post_init__(self):
        if self.replications < 1:
            raise DomainError(f"replications must be >= 1, got {self.replications}")
        if self.block_size < 1:
            raise DomainError(f"block_size must be >= 1, got {self.block_size}")


@dataclass(frozen=True)
class SimReport:
    config: SimConfig
    n_signals: int
    reject_rate: float
    reject_se: float
    ets_mean: float | None
    ets_se: float | None
    signal_time_histogram: tuple[tuple[float, int], ...]
    # counts observed at the delayed-start look, indexed by count
    start_counts: tuple[int, ...] = ()


def llr_array(c: np.ndarray, mu: np.ndarray | float) -> np.ndarray:
    c = np.asarray(c, dtype=float)
    mu = np.broadcast_to(np.asarray(mu, dtype=float), c.shape)
    out = np.zeros(c.shape)
    pos = c > mu
    cc, mm = c[pos], mu[pos]
    with np.errstate(divide="ignore"):
        out[pos] = (mm - cc) + cc * np.log(cc / mm)
    return out


def _run_block(design: SequentialDesign, n: int, rng: np.random.Generator):
    cv, t_cap, m_min, d, rr = design.cv, design.t_cap, design.m_min, design.d_start, design.rr
    clock = np.zeros(n)
    count = np.zeros(n, dtype=np.int64)
    signal_at = np.full(n, np.nan)
    looked = np.full(n, d == 0.0)
    start_count = np.full(n, -1, dtype=np.int64)
    live = np.arange(n)
    scale = 1.0 / rr
    while live.size:
        s = clock[live] + rng.exponential(scale, size=live.size)
        keep = np.ones(live.size, dtype=bool)

        if d > 0.0:
            # first arrival past D: test the tally at mu = D before counting it
            look = ~looked[live] & (s > d)
            if look.any():
                ids = live[look]
                c = count[ids]
                start_count[ids] = c
                looked[ids] = True
                hit = (c >= m_min) & (llr_array(c, d) >= cv)
                signal_at[ids[hit]] = d
                keep[np.nonzero(look)[0][hit]] = False

        keep &= s <= t_cap

        ids = live[keep]
        s_k = s[keep]
        count[ids] += 1
        clock[ids] = s_k
        c = count[ids]
        hit = (s_k > d) & (c >= m_min) & (llr_array(c, s_k) >= cv)
        signal_at[ids[hit]] = s_k[hit]
        live = ids[~hit]
    return signal_at, start_count


def simulate(config: SimConfig) -> SimReport:
    design = config.design
    n_blocks = -(-config.replications // config.block_size)
    edges = np.linspace(0.0, design.t_cap, HIST_BINS + 1)
    hist = np.zeros(HIST_BINS, dtype=np.int64)
    n_sig = 0
    sums, sumsqs = [], []
    start_hist = np.zeros(0, dtype=np.int64)
    for b in range(n_blocks):
        size = min(config.block_size, config.replications - b * config.block_size)
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(config.seed, spawn_key=(b,))))
        signal_at, start_count = _run_block(design, size, rng)
        times = signal_at[~np.isnan(signal_at)]
        n_sig += times.size
        sums.append(float(np.sum(times)))
        sumsqs.append(float(np.sum(times * times)))
        hist += np.histogram(times, bins=edges)[0]
        if design.d_start > 0:
            sc = np.bincount(start_count[start_count >= 0])
            if sc.size > start_hist.size:
                start_hist = np.pad(start_hist, (0, sc.size - start_hist.size))
            start_hist[: sc.size] += sc

    reps = config.replications
    p = n_sig / reps
    se = math.sqrt(p * (1.0 - p) / reps)
    if n_sig:
        mean = math.fsum(sums) / n_sig
        var = (math.fsum(sumsqs) - n_sig * mean * mean) / max(n_sig - 1, 1)
        ets_mean, ets_se = mean, math.sqrt(max(var, 0.0) / n_sig)
    else:
        ets_mean = ets_se = None
    return SimReport(
        config=config,
        n_signals=n_sig,
        reject_rate=p,
        reject_se=se,
        ets_mean=ets_mean,
        ets_se=ets_se,
        signal_time_histogram=tuple((float(e), int(h)) for e, h in zip(edges[:-1], hist)),
        start_counts=tuple(int(x) for x in start_hist),
    )
