"""Apply a fixed design to an observed stream of adverse events."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence

from .csvio import EventRecord
from .engine import SequentialDesign
from .llr import invert_boundary, llr

MONITOR_COLUMNS = ("n", "mu", "llr", "tau", "signal")


@dataclass(frozen=True)
class MonitorRow:
    n: int
    mu: float
    llr: float
    tau: float
    signal: bool
    label: str = ""
    # True for the synthetic row of the delayed-start look
    look: bool = False


@dataclass(frozen=True)
class MonitorVerdict:
    rows: tuple[MonitorRow, ...]
    status: Literal["signal", "continue", "ended"]
    signal_row: int | None = None

    def describe(self) -> str:
        if self.status == "signal":
            row = self.rows[self.signal_row]
            where = f"look at mu={row.mu:g}" if row.look else f"event {row.n}"
            return f"signal at {where}"
        return "continue" if self.status == "continue" else "surveillance ended"


def run_monitor(design: SequentialDesign, events: Sequence[EventRecord],
                mu_now: float | None = None) -> MonitorVerdict:
    """Replay the stopping rule over ``events``.

    Events at or before ``d_start`` are only tallied; the tally is tested
    once at mu = d_start, as soon as the stream (or ``mu_now``) shows that
    mu has passed it. After a signal, later rows are reported but cannot
    signal again.
    """
    cv, d = design.cv, design.d_start
    rows: list[MonitorRow] = []
    fired: int | None = None
    looked = d == 0.0

    def add(n, mu, label="", look=False, testable=True):
        nonlocal fired
        value = llr(n, mu) if n > 0 else 0.0
        tau = invert_boundary(n, cv) if n > 0 else 0.0
        hit = fired is None and testable and n >= design.m_min and value >= cv
        rows.append(MonitorRow(n, mu, value, tau, hit, label, look))
        if hit:
            fired = len(rows) - 1

    for n, ev in enumerate(events, start=1):
        if not looked and ev.mu > d:
            add(n - 1, d, look=True)
            looked = True
        add(n, ev.mu, ev.label, testable=looked)
    horizon = mu_now if mu_now is not None else (events[-1].mu if events else 0.0)
    if not looked and horizon >= d:
        add(len(events), d, look=True)

    if fired is not None:
        return MonitorVerdict(tuple(rows), "signal", fired)
    if mu_now is not None and mu_now >= design.t_cap:
        return MonitorVerdict(tuple(rows), "ended")
    return MonitorVerdict(tuple(rows), "continue")


def verdict_rows(verdict: MonitorVerdict) -> list[dict]:
    return [{"n": str(r.n), "mu": repr(r.mu), "llr": f"{r.llr:.6f}", "tau": f"{r.tau:.6f}",
             "signal": "1" if r.signal else "0"} for r in verdict.rows]
