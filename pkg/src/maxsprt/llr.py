"""Poisson MaxSPRT log-likelihood ratio and its event-count boundary.

Time is measured in mu units: the cumulative number of adverse events
expected under the null. With ``c`` observed events at mu-time ``mu`` the
statistic is

    LLR(c, mu) = (mu - c) + c * log(c / mu)      for c > mu, else 0.

For fixed ``c`` it is strictly decreasing on (0, c), so the statistic can
only first cross a flat critical value at the moment an event arrives. The
n-th event signals iff it arrives at mu <= tau_n, where tau_n solves
LLR(n, tau_n) = cv.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError

INVERSION_TOL = 1e-12


def llr(c: int, mu: float) -> float:
    """Log-likelihood ratio for ``c`` events at mu-time ``mu``.

    Floors at zero when ``c <= mu`` (the maximisation runs over RR > 1).
    Returns ``inf`` for ``mu == 0`` with ``c > 0``.
    """
    if c < 0 or mu < 0 or not math.isfinite(mu):
        raise DomainError(f"llr needs c >= 0 and finite mu >= 0, got c={c}, mu={mu}")
    if c <= mu:
        return 0.0
    if mu == 0.0:
        return math.inf
    if mu < 0.5 * c:
        # (mu - c) / c would round away the relative precision of a tiny mu
        return (mu - c) + c * math.log(c / mu)
    x = (mu - c) / c
    if x > -1e-4:
        # x - log1p(x) loses everything to cancellation near zero
        return c * x * x * (0.5 - x * (1.0 / 3.0 - x * (0.25 - x / 5.0)))
    return c * (x - math.log1p(x))


def _llr_dmu(c: int, mu: float) -> float:
    return 1.0 - c / mu


def invert_boundary(c: int, cv: float) -> float:
    """Return the unique tau in (0, c) with ``llr(c, tau) == cv``.

    Bisection in log(mu) brackets the root, then a few Newton steps polish
    it until the residual is within ``INVERSION_TOL * max(1, cv)``.
    """
    if c < 1:
        raise DomainError(f"boundary needs c >= 1, got {c}")
    if not cv > 0 or not math.isfinite(cv):
        raise DomainError(f"cv must be positive and finite, got {cv}")
    tol = INVERSION_TOL * max(1.0, cv)

    # llr(c, mu) >= c*log(c/mu) - c, so this lower end is always above the root
    lo = c * math.exp(-(cv + c) / c)
    hi = float(c)
    for _ in range(200):
        mid = math.sqrt(lo * hi)
        if llr(c, mid) >= cv:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-9 * hi:
            break
    tau = 0.5 * (lo + hi)
    for _ in range(20):
        resid = llr(c, tau) - cv
        if abs(resid) <= tol:
            break
        step = resid / _llr_dmu(c, tau)
        new = tau - step
        if not lo <= new <= hi:
            new = 0.5 * (lo + hi)
        if llr(c, new) >= cv:
            lo = new
        else:
            hi = new
        tau = new
    return tau


@dataclass(frozen=True)
class Boundary:
    """Rejection thresholds tau_1 < tau_2 < ... in mu-time.

    ``taus[n - 1]`` is tau_n. The list stops at ``n_max``, the first event
    index whose threshold reaches ``t_cap``; any later event can only
    signal by arriving before the end of surveillance.
    """

    cv: float
    t_cap: float
    taus: tuple[float, ...]

    @property
    def n_max(self) -> int:
        return len(self.taus)

    def tau(self, n: int) -> float:
        """tau_n for any n >= 1, extending past ``n_max`` on demand."""
        if n <= self.n_max:
            return self.taus[n - 1]
        return invert_boundary(n, self.cv)

    def reject_limit(self, n: int) -> float:
        """Latest mu at which the n-th event still signals: min(tau_n, t_cap)."""
        if n >= self.n_max:
            return self.t_cap
        return self.taus[n - 1]

    def rejects(self, c: int, mu: float) -> bool:
        """Decision at ``c`` events and mu-time ``mu`` (equality signals)."""
        if c < 1 or mu > self.t_cap:
            return False
        return mu <= self.tau(c)


@lru_cache(maxsize=512)
def build_boundary(cv: float, t_cap: float) -> Boundary:
    if not cv > 0:
        raise DomainError(f"cv must be positive, got {cv}")
    if not t_cap > 0 or not math.isfinite(t_cap):
        raise DomainError(f"t_cap must be positive and finite, got {t_cap}")
    taus = []
    n = 0
    while True:
        n += 1
        tau = invert_boundary(n, cv)
        taus.append(tau)
        if tau >= t_cap:
            break
    return Boundary(cv=float(cv), t_cap=float(t_cap), taus=tuple(taus))
