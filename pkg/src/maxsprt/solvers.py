"""Critical-value and surveillance-length searches on top of the engine."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .engine import CV_FLOOR, SequentialDesign, alpha_max, evaluate
from .errors import ConvergenceError, DomainError
from .llr import llr

CV_CEILING = 20.0
CV_BRACKET_WIDTH = 1e-9
LIBERAL_STEP = 1e-6
ALPHA_ATOL = 1e-11
MAX_ITER = 200
T_CEILING = 10_000.0

Status = Literal["exact", "discrete", "unachievable"]


@dataclass(frozen=True)
class CvSolution:
    status: Status
    target_alpha: float
    cv_cons: float | None = None
    alpha_cons: float | None = None
    cv_lib: float | None = None
    alpha_lib: float | None = None
    alpha_max: float | None = None


@dataclass(frozen=True)
class DesignSolution:
    t_solved: float
    cv_at_t: float
    power_attained: float
    cv_solution: CvSolution


def _alpha(cv: float, t_cap: float, m_min: int, d_start: float, backend: str) -> float:
    design = SequentialDesign(cv=cv, t_cap=t_cap, m_min=m_min, d_start=d_start, rr=1.0)
    return evaluate(design, backend=backend).reject_prob


def _jump_points(t_cap: float, d_start: float, lo: float, hi: float) -> list[float]:
    """cv values in [lo, hi) where a count at the start look flips to signalling.

    With a delayed start, count c at mu = D signals iff llr(c, D) >= cv, so
    alpha(cv) drops discontinuously just above each llr(c, D).
    """
    if d_start <= 0:
        return []
    out = []
    c = math.floor(d_start) + 1
    while True:
        v = llr(c, d_start)
        if v >= hi:
            break
        if v >= lo:
            out.append(v)
        c += 1
    return out


def _grid_above(x: float) -> float:
    """Smallest point of the 1e-6 grid strictly above x."""
    g = math.ceil(round(x / LIBERAL_STEP, 6)) * LIBERAL_STEP
    if g <= x:
        g += LIBERAL_STEP
    return round(g, 6)


def _bracket_root(f, target, lo, f_lo, hi, f_hi):
    """Shrink [lo, hi] with f(lo) > target >= f(hi) for non-increasing f.

    Illinois false-position steps, with a bisection step whenever two
    steps in a row fail to halve the bracket. Stops when the bracket is
    narrower than CV_BRACKET_WIDTH or f(hi) sits within ALPHA_ATOL below
    the target.
    """
    w_lo = w_hi = 1.0
    width = hi - lo
    stalls = 0
    for _ in range(MAX_ITER):
        if hi - lo <= CV_BRACKET_WIDTH or f_hi >= target - ALPHA_ATOL:
            return lo, f_lo, hi, f_hi
        if stalls >= 2:
            x, stalls = 0.5 * (lo + hi), 0
        else:
            g_lo, g_hi = w_lo * (f_lo - target), w_hi * (f_hi - target)
            x = hi - g_hi * (hi - lo) / (g_hi - g_lo)
            margin = 1e-3 * (hi - lo)
            x = min(max(x, lo + margin), hi - margin)
        fx = f(x)
        if fx > target:
            lo, f_lo = x, fx
            w_lo, w_hi = 1.0, 0.5 * w_hi
        else:
            hi, f_hi = x, fx
            w_lo, w_hi = 0.5 * w_lo, 1.0
        stalls = stalls + 1 if hi - lo > 0.5 * width else 0
        width = hi - lo
    raise ConvergenceError(f"cv search did not reach width {CV_BRACKET_WIDTH}")


def solve_cv(
    target_alpha: float,
    t_cap: float,
    m_min: int = 1,
    d_start: float = 0.0,
    backend: str = "auto",
    bracket: tuple[float, float] | None = None,
) -> CvSolution:
    """Critical value giving type 1 error ``target_alpha``.

    alpha(cv) is non-increasing, so the root is bracketed and narrowed. A
    delayed start makes alpha jump down just above each llr(c, D); when the
    target falls inside such a gap the result is ``discrete`` and carries
    the conservative/liberal pair straddling the jump on the 1e-6 grid.
    ``d_start >= t_cap`` leaves no sequential procedure and is reported as
    unachievable with alpha_max = 0.
    """
    if not 0.0 < target_alpha < 1.0:
        raise DomainError(f"target_alpha must lie in (0, 1), got {target_alpha}")
    if d_start < 0 or t_cap <= 0 or m_min < 1:
        raise DomainError("need t_cap > 0, d_start >= 0, m_min >= 1")
    if d_start >= t_cap:
        return CvSolution("unachievable", target_alpha, alpha_max=0.0)

    a_max = alpha_max(t_cap, m_min, d_start, backend=backend)
    if a_max < target_alpha:
        return CvSolution("unachievable", target_alpha, alpha_max=a_max)

    lo, hi = CV_FLOOR, CV_CEILING
    f_lo = a_max
    if bracket is not None:
        # a caller's hint is used only if it really straddles the target
        b_lo, b_hi = bracket
        fb_lo = _alpha(b_lo, t_cap, m_min, d_start, backend)
        fb_hi = _alpha(b_hi, t_cap, m_min, d_start, backend)
        if fb_lo > target_alpha >= fb_hi:
            lo, f_lo, hi = b_lo, fb_lo, b_hi
    f_hi = _alpha(hi, t_cap, m_min, d_start, backend)
    if f_hi > target_alpha:
        raise ConvergenceError(f"alpha at cv={hi} is {f_hi}, above target {target_alpha}")
    if f_lo == target_alpha:
        hi, f_hi = lo, f_lo

    lo, f_lo, hi, f_hi = _bracket_root(
        lambda cv: _alpha(cv, t_cap, m_min, d_start, backend), target_alpha, lo, f_lo, hi, f_hi
    )

    jumps = _jump_points(t_cap, d_start, lo, hi + CV_BRACKET_WIDTH)
    if jumps and f_hi < target_alpha - 1e-8:
        cv_cons = _grid_above(jumps[0])
        cv_lib = round(cv_cons - LIBERAL_STEP, 6)
        return CvSolution(
            "discrete",
            target_alpha,
            cv_cons=cv_cons,
            alpha_cons=_alpha(cv_cons, t_cap, m_min, d_start, backend),
            cv_lib=cv_lib,
            alpha_lib=_alpha(cv_lib, t_cap, m_min, d_start, backend),
            alpha_max=a_max,
        )
    return CvSolution(
        "exact",
        target_alpha,
        cv_cons=hi,
        alpha_cons=f_hi,
        cv_lib=hi,
        alpha_lib=f_hi,
        alpha_max=a_max,
    )


def _power_at(t_cap, rr, target_alpha, m_min, d_start, backend):
    sol = solve_cv(target_alpha, t_cap, m_min, d_start, backend=backend)
    if sol.status == "unachievable":
        return 0.0, sol
    design = SequentialDesign(sol.cv_cons, t_cap, m_min, d_start, rr)
    return evaluate(design, backend=backend).reject_prob, sol


def solve_t(
    target_power: float,
    rr_design: float,
    target_alpha: float = 0.05,
    m_min: int = 1,
    d_start: float = 0.0,
    rel_tol: float = 1e-4,
    t_ceiling: float = T_CEILING,
    backend: str = "auto",
) -> DesignSolution:
    """Smallest surveillance length T whose own alpha-level design reaches
    ``target_power`` against ``rr_design``.

    The critical value is re-solved at every trial T. T grows geometrically
    until power is reached, then the bracket is bisected to ``rel_tol``.
    If even T just above ``d_start`` has enough power, that floor is
    returned.
    """
    if not 0.0 < target_alpha < 1.0 or not 0.0 < target_power < 1.0:
        raise DomainError("target_alpha and target_power must lie in (0, 1)")
    if target_power <= target_alpha:
        raise DomainError(
            f"target_power={target_power} <= target_alpha={target_alpha}: any T achieves it"
        )
    if not rr_design > 1:
        raise DomainError(f"rr_design must exceed 1, got {rr_design}")

    t_floor = d_start * (1.0 + rel_tol) if d_start > 0 else rel_tol
    t_lo = t_floor
    t_hi = max(1.0, 2.0 * d_start)
    p_hi, sol_hi = _power_at(t_hi, rr_design, target_alpha, m_min, d_start, backend)
    while p_hi < target_power:
        t_lo = t_hi
        t_hi *= 2.0
        if t_hi > t_ceiling:
            raise ConvergenceError(f"power {target_power} not reached below T ceiling {t_ceiling}")
        p_hi, sol_hi = _power_at(t_hi, rr_design, target_alpha, m_min, d_start, backend)

    for _ in range(MAX_ITER):
        if t_hi - t_lo <= rel_tol * t_hi:
            break
        mid = 0.5 * (t_lo + t_hi)
        p_mid, sol_mid = _power_at(mid, rr_design, target_alpha, m_min, d_start, backend)
        if p_mid >= target_power:
            t_hi, p_hi, sol_hi = mid, p_mid, sol_mid
        else:
            t_lo = mid
    else:
        raise ConvergenceError("T bisection did not converge")
    return DesignSolution(t_solved=t_hi, cv_at_t=sol_hi.cv_cons, power_attained=p_hi, cv_solution=sol_hi)

