"""Exact design and evaluation of the continuous Poisson MaxSPRT."""

from .engine import EvalReport, SequentialDesign, alpha_max, evaluate
from .errors import ConvergenceError, DomainError
from .llr import Boundary, build_boundary, invert_boundary, llr
from .mc import SimConfig, SimReport, simulate
from .solvers import CvSolution, DesignSolution, solve_cv, solve_t

__all__ = [
    "Boundary", "ConvergenceError", "CvSolution", "DesignSolution", "DomainError",
    "EvalReport", "SequentialDesign", "SimConfig", "SimReport", "alpha_max",
    "build_boundary", "evaluate", "invert_boundary", "llr", "simulate",
    "solve_cv", "solve_t",
]
