"""Command-line interface.

Exit codes: 0 success, 2 usage or input error, 3 unachievable alpha
target, 4 numerical non-convergence, 1 I/O failure.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from pathlib import Path

from . import tables
from .csvio import EventFileError, read_events, to_json, write_rows
from .engine import BACKENDS, SequentialDesign, evaluate
from .errors import ConvergenceError, DomainError
from .mc import SimConfig, simulate
from .monitor import MONITOR_COLUMNS, run_monitor, verdict_rows
from .solvers import solve_cv

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_UNACHIEVABLE, EXIT_NONCONVERGENT = 0, 1, 2, 3, 4

# flag -> (type, default); flags default to None so a config file can fill gaps
DESIGN_KEYS = {
    "alpha": (float, 0.05),
    "t": (float, None),
    "m": (int, 1),
    "d": (float, 0.0),
    "rr": (float, 1.0),
    "cv": (float, None),
    "reps": (int, 100_000),
    "seed": (int, 0),
    "backend": (str, "auto"),
    "out": (str, None),
}


class Unachievable(Exception):
    def __init__(self, alpha_max: float):
        super().__init__(alpha_max)
        self.alpha_max = alpha_max


def _floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _only(text: str) -> dict[str, float]:
    out = {}
    for part in text.split(","):
        key, sep, val = part.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"expected KEY=VALUE, got {part!r}")
        try:
            out[key.strip()] = float(val)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad value in {part!r}") from None
    return out


def read_config(path: str) -> dict[str, str]:
    """key=value lines; blank lines and ``#`` comments are skipped."""
    cfg = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = line.partition("=")
        key = key.strip().lstrip("-").replace("-", "_")
        if not sep or key not in DESIGN_KEYS:
            raise DomainError(f"{path}:{lineno}: unrecognized config line {line!r}")
        cfg[key] = val.strip()
    return cfg


def _resolve(args: argparse.Namespace) -> None:
    """Fill unset flags from --config, then from built-in defaults."""
    cfg = read_config(args.config) if getattr(args, "config", None) else {}
    for key, (kind, default) in DESIGN_KEYS.items():
        if not hasattr(args, key) or getattr(args, key) is not None:
            continue
        if key in cfg:
            try:
                setattr(args, key, kind(cfg[key]))
            except ValueError:
                raise DomainError(f"config value for {key!r} is not a {kind.__name__}") from None
        else:
            setattr(args, key, default)
    if getattr(args, "backend", None) not in (None, *BACKENDS):
        raise DomainError(f"backend must be one of {BACKENDS}")


def _add_design(p: argparse.ArgumentParser, rr: bool = True, cv: bool = True) -> None:
    p.add_argument("--alpha", type=float, help="target type 1 error (default 0.05)")
    p.add_argument("--t", type=float, help="surveillance length T in expected null events")
    p.add_argument("--m", type=int, help="minimum events before a signal (default 1)")
    p.add_argument("--d", type=float, help="delayed start D in expected null events (default 0)")
    if rr:
        p.add_argument("--rr", type=float, help="true relative risk (default 1)")
    if cv:
        p.add_argument("--cv", type=float, help="critical value; solved from --alpha when omitted")
    p.add_argument("--backend", choices=BACKENDS, help="exact engine backend (default auto)")
    p.add_argument("--config", help="file of key=value defaults; flags override it")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maxsprt", description="Exact Poisson MaxSPRT design and evaluation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cv", help="solve the critical value for an alpha target")
    _add_design(p, rr=False, cv=False)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("evaluate", help="power and expected time to signal")
    _add_design(p)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--json", action="store_const", dest="format", const="json")

    p = sub.add_parser("table", help="reproduce a result table as CSV")
    p.add_argument("table_id", type=int, choices=sorted(tables.COLUMNS))
    p.add_argument("--only", type=_only, default={}, help="filter cells, e.g. T=20 or T=10,D=8")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--backend", choices=BACKENDS, default="auto")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("figure", help="figure dataset: ETS against design power")
    p.add_argument("fig_id", type=int, choices=(1, 2))
    p.add_argument("--values", type=_floats, help="M values (fig 1) or D values (fig 2)")
    p.add_argument("--powers", type=_floats, default=tables.FIG_POWER)
    p.add_argument("--design-rr", type=_floats, default=tables.FIG_DESIGN_RR)
    p.add_argument("--true-rr", type=_floats, default=tables.FIG_TRUE_RR)
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--backend", choices=BACKENDS, default="auto")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("monitor", help="apply a design to an observed events file")
    _add_design(p, rr=False)
    p.add_argument("--events", required=True, help="CSV with header mu,label")
    p.add_argument("--mu-now", type=float, help="current mu, if past the last event")
    p.add_argument("--out", help="write the per-event CSV here instead of stdout")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("simulate", help="Monte Carlo check of a design")
    _add_design(p)
    p.add_argument("--reps", type=int, help="replications (default 100000)")
    p.add_argument("--seed", type=int, help="RNG seed (default 0)")
    p.add_argument("--json", action="store_true")
    return parser


def _need_t(args) -> float:
    if args.t is None:
        raise DomainError("--t is required")
    if not args.t > args.d >= 0:
        raise DomainError(f"need T > D >= 0, got T={args.t:g}, D={args.d:g}")
    return args.t


def _design_cv(args) -> float:
    """--cv if given, else the conservative critical value for --alpha."""
    if args.cv is not None:
        return args.cv
    sol = solve_cv(args.alpha, _need_t(args), args.m, args.d, backend=args.backend)
    if sol.status == "unachievable":
        raise Unachievable(sol.alpha_max)
    return sol.cv_cons


@contextmanager
def _sink(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def cmd_cv(args) -> int:
    sol = solve_cv(args.alpha, _need_t(args), args.m, args.d, backend=args.backend)
    if args.json:
        print(to_json(sol))
    elif sol.status == "unachievable":
        print(f"status     unachievable\nalpha_max  {sol.alpha_max:.6f}")
    elif sol.status == "exact":
        print(f"status     exact\ncv         {sol.cv_cons:.6f}\nalpha      {sol.alpha_cons:.6f}")
    else:
        print(f"status     discrete\ncv_cons    {sol.cv_cons:.6f}\nalpha_cons {sol.alpha_cons:.6f}\n"
              f"cv_lib     {sol.cv_lib:.6f}\nalpha_lib  {sol.alpha_lib:.6f}")
    return EXIT_UNACHIEVABLE if sol.status == "unachievable" else EXIT_OK


def cmd_evaluate(args) -> int:
    design = SequentialDesign(_design_cv(args), _need_t(args), args.m, args.d, args.rr)
    rep = evaluate(design, backend=args.backend)
    ets = rep.ets_conditional
    if args.format == "json":
        print(to_json({"design": design, "power": rep.reject_prob, "ets": ets,
                       "signal_at_start_mass": rep.signal_at_start_mass, "backend": rep.backend}))
    elif args.format == "csv":
        row = {"T": f"{design.t_cap:g}", "M": str(design.m_min), "D": f"{design.d_start:g}",
               "rr": f"{design.rr:g}", "cv": f"{design.cv:.6f}", "power": f"{rep.reject_prob:.3f}",
               "ets": "" if ets is None else f"{ets:.2f}"}
        write_rows([row], list(row), sys.stdout)
    else:
        print(f"cv     {design.cv:.6f}\npower  {rep.reject_prob:.3f}\nets    "
              + ("n/a" if ets is None else f"{ets:.2f}"))
    return EXIT_OK


def cmd_table(args) -> int:
    cells = [c for c in tables.table_cells(args.table_id, args.backend) if tables.matches(c, args.only)]
    if args.only and not cells:
        raise DomainError(f"--only {args.only} selects no cells of table {args.table_id}")
    chunks = tables.run_cells(tables.cell_rows, cells, args.jobs)
    with _sink(args.out) as out:
        write_rows((r for chunk in chunks for r in chunk), tables.COLUMNS[args.table_id], out)
    return EXIT_OK


def cmd_figure(args) -> int:
    values = args.values or (tables.FIG_M if args.fig_id == 1 else tables.FIG_D)
    points = tables.figure_points(args.fig_id, values, args.powers, args.design_rr, args.true_rr, args.backend)
    chunks = tables.run_cells(tables.figure_rows, points, args.jobs)
    with _sink(args.out) as out:
        write_rows((r for chunk in chunks for r in chunk), tables.FIGURE_COLUMNS, out)
    return EXIT_OK


def cmd_monitor(args) -> int:
    t_cap = _need_t(args)
    events = read_events(args.events, t_cap)
    design = SequentialDesign(_design_cv(args), t_cap, args.m, args.d, 1.0)
    verdict = run_monitor(design, events, args.mu_now)
    if args.json:
        print(to_json({"design": design, "status": verdict.status, "signal_row": verdict.signal_row,
                       "rows": [dict(vars(r)) for r in verdict.rows]}))
        return EXIT_OK
    if args.out:
        with _sink(args.out) as out:
            write_rows(verdict_rows(verdict), MONITOR_COLUMNS, out)
    else:
        write_rows(verdict_rows(verdict), MONITOR_COLUMNS, sys.stdout)
        print()
    print(f"status: {verdict.describe()}")
    return EXIT_OK


def cmd_simulate(args) -> int:
    design = SequentialDesign(_design_cv(args), _need_t(args), args.m, args.d, args.rr)
    rep = simulate(SimConfig(design, args.reps, args.seed))
    if args.json:
        print(to_json(rep))
        return EXIT_OK
    lines = [f"cv           {design.cv:.6f}", f"replications {args.reps}",
             f"reject_rate  {rep.reject_rate:.6f}", f"reject_se    {rep.reject_se:.6f}"]
    if rep.ets_mean is not None:
        lines += [f"ets_mean     {rep.ets_mean:.4f}", f"ets_se       {rep.ets_se:.4f}"]
    print("\n".join(lines))
    return EXIT_OK


COMMANDS = {"cv": cmd_cv, "evaluate": cmd_evaluate, "table": cmd_table,
            "figure": cmd_figure, "monitor": cmd_monitor, "simulate": cmd_simulate}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _resolve(args)
        return COMMANDS[args.command](args)
    except Unachievable as exc:
        print(f"status     unachievable\nalpha_max  {exc.alpha_max:.6f}")
        return EXIT_UNACHIEVABLE
    except EventFileError as exc:
        print(f"error: {args.events}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"error: did not converge: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
