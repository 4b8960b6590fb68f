"""Parameter grids and row builders for the published result tables and
figure datasets.

Each builder yields plain dicts keyed by the CSV column names, so the CLI
and the experiment scripts share one code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable

from .engine import SequentialDesign, alpha_max, evaluate
from .errors import ConvergenceError, DomainError
from .solvers import solve_cv, solve_t

ALPHA = 0.05

T_GRID_M = (1, 1.5, 2, 2.5, 3, 4, 5, 6, 8, 10, 12, 15, 20, 25, 30, 40, 50, 60, 80,
            100, 120, 150, 200, 250, 300, 400, 500, 600, 800, 1000)
M_GRID = (1, 2, 3, 4, 6, 8, 10)
T_GRID_D = T_GRID_M[1:]
D_GRID = (0, 1, 2, 3, 4, 6, 8, 10)

RR_GRID = (1.5, 2.0, 3.0, 4.0, 10.0)
POWER_T = (1, 2, 5, 10, 20, 50, 100, 200)
POWER_M = (1, 3, 6, 10)
POWER_T_D = (5, 10, 20, 50, 100, 200)
POWER_D = (0, 3, 6, 10)

DISCRETE_CELLS = ((5, 1), (10, 2), (10, 4), (10, 8), (15, 10), (20, 3),
                  (60, 4), (60, 6), (80, 8), (800, 3), (1000, 1), (1000, 8))

FIG_M = (1, 2, 3, 6, 10)
FIG_D = (0, 1, 3, 6, 10)
FIG_POWER = (0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99)
FIG_DESIGN_RR = (1.5, 2.0)
FIG_TRUE_RR = (1.5, 2.0, 3.0, 4.0)

COLUMNS = {
    1: ("T", "M", "cv", "status"),
    2: ("T", "M_or_D", "rr", "power", "ets"),
    3: ("T", "D", "cv", "status"),
    4: ("T", "D", "cv_cons", "alpha_cons", "cv_lib", "alpha_lib"),
    5: ("T", "M_or_D", "rr", "power", "ets"),
}
FIGURE_COLUMNS = ("fig", "design_rr", "target_power", "M_or_D", "true_rr", "T_solved", "ets", "status")


@dataclass(frozen=True)
class Cell:
    table: int
    t_cap: float
    m_min: int = 1
    d_start: float = 0.0
    backend: str = "auto"

    @property
    def key(self) -> dict:
        if self.table in (1, 2):
            return {"T": self.t_cap, "M": self.m_min}
        return {"T": self.t_cap, "D": self.d_start}


def table_cells(table: int, backend: str = "auto") -> list[Cell]:
    if table == 1:
        grid = [(t, m, 0) for t, m in product(T_GRID_M, M_GRID)]
    elif table == 2:
        # cells with no alpha-level design are left out, not blanked
        grid = [(t, m, 0) for t, m in product(POWER_T, POWER_M)
                if alpha_max(t, m, backend=backend) >= ALPHA]
    elif table == 3:
        grid = [(t, 1, d) for t, d in product(T_GRID_D, D_GRID)]
    elif table == 4:
        grid = [(t, 1, d) for t, d in DISCRETE_CELLS]
    elif table == 5:
        grid = [(t, 1, d) for t, d in product(POWER_T_D, POWER_D) if d < t]
    else:
        raise DomainError(f"no table {table}")
    return [Cell(table, float(t), int(m), float(d), backend) for t, m, d in grid]


def _num(x: float) -> str:
    return f"{x:g}"


def cell_rows(cell: Cell) -> list[dict]:
    """Rows for one grid cell, formatted at table precision."""
    sol = solve_cv(ALPHA, cell.t_cap, cell.m_min, cell.d_start, backend=cell.backend)
    t = _num(cell.t_cap)
    if cell.table in (1, 3):
        second = ("M", cell.m_min) if cell.table == 1 else ("D", _num(cell.d_start))
        cv = "" if sol.status == "unachievable" else f"{sol.cv_cons:.6f}"
        return [{"T": t, second[0]: str(second[1]), "cv": cv, "status": sol.status}]
    if cell.table == 4:
        if sol.status != "discrete":
            raise ConvergenceError(f"cell T={t} D={cell.d_start} is not discrete ({sol.status})")
        return [{
            "T": t, "D": _num(cell.d_start),
            "cv_cons": f"{sol.cv_cons:.6f}", "alpha_cons": f"{sol.alpha_cons:.5f}",
            "cv_lib": f"{sol.cv_lib:.6f}", "alpha_lib": f"{sol.alpha_lib:.5f}",
        }]
    md = cell.m_min if cell.table == 2 else _num(cell.d_start)
    rows = []
    for rr in RR_GRID:
        if sol.status == "unachievable":
            rows.append({"T": t, "M_or_D": str(md), "rr": _num(rr), "power": "", "ets": ""})
            continue
        rep = evaluate(SequentialDesign(sol.cv_cons, cell.t_cap, cell.m_min, cell.d_start, rr),
                       backend=cell.backend)
        rows.append({"T": t, "M_or_D": str(md), "rr": _num(rr),
                     "power": f"{rep.reject_prob:.3f}", "ets": f"{rep.ets_conditional:.2f}"})
    return rows


def matches(cell: Cell, only: dict[str, float]) -> bool:
    key = cell.key
    return all(k in key and float(key[k]) == v for k, v in only.items())


@dataclass(frozen=True)
class FigurePoint:
    fig: int
    design_rr: float
    target_power: float
    value: float
    true_rr: tuple[float, ...]
    backend: str = "auto"


def figure_points(fig: int, values: Iterable[float], powers: Iterable[float],
                  design_rr: Iterable[float], true_rr: Iterable[float],
                  backend: str = "auto") -> list[FigurePoint]:
    if fig not in (1, 2):
        raise DomainError(f"no figure {fig}")
    true_rr = tuple(true_rr)
    return [FigurePoint(fig, drr, p, v, true_rr, backend)
            for drr, p, v in product(design_rr, powers, values)]


def figure_rows(pt: FigurePoint) -> list[dict]:
    """Solve T for one (design RR, power, M or D) point, then ETS per true RR."""
    m_min, d_start = (int(pt.value), 0.0) if pt.fig == 1 else (1, float(pt.value))
    base = {"fig": str(pt.fig), "design_rr": _num(pt.design_rr),
            "target_power": _num(pt.target_power), "M_or_D": _num(pt.value)}
    try:
        sol = solve_t(pt.target_power, pt.design_rr, ALPHA, m_min, d_start, backend=pt.backend)
    except (ConvergenceError, DomainError) as exc:
        status = "nonconvergent" if isinstance(exc, ConvergenceError) else "invalid"
        return [{**base, "true_rr": _num(rr), "T_solved": "", "ets": "", "status": status}
                for rr in pt.true_rr]
    rows = []
    for rr in pt.true_rr:
        rep = evaluate(SequentialDesign(sol.cv_at_t, sol.t_solved, m_min, d_start, rr), backend=pt.backend)
        ets = "" if rep.ets_conditional is None else f"{rep.ets_conditional:.4f}"
        rows.append({**base, "true_rr": _num(rr), "T_solved": f"{sol.t_solved:.4f}", "ets": ets, "status": "ok"})
    return rows


def run_cells(fn: Callable, items: list, jobs: int = 1) -> list[list[dict]]:
    """Map ``fn`` over ``items``; results keep input order regardless of jobs."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))
