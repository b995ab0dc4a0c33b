"""Parameter selection rules and numerical hypothesis checking.

The simplified error form collapses, once all non-exponential prefactors are
treated as unit, into two feasibility rules for a target accuracy order eta
(error ~ 10^-eta):

    r * (pi - B*delta) > sqrt(2 eta ln 10)        (regularization rule)
    m / r             > sqrt(2 eta ln 10)        (truncation rule)

min_r / min_m report the literal rule thresholds; choose() applies a safety
margin on r and then sizes the window.  For eta = 15 the literal r threshold
at B = 0 is sqrt(30 ln 10)/pi = 2.6456; the working folklore value quoted
alongside it is r > 2.8, a rounded/conservative reading of the same rule,
which this module reports as-is without reverse-engineering the gap.

check_hypotheses probes the theorem's tail monotonicity conditions: with
g(x) = f(x) * H_k((t - x)/(sqrt2 sigma)), it requires

    g'(x) <= g(x)(x - t)/sigma^2   for x >= t + (m1 - 1) delta,
    g'(x) >= g(x)(x - t)/sigma^2   for x <= t - m2 delta,

equivalently that g(x) exp(-(x-t)^2/(2 sigma^2)) is non-increasing on the
right tail and non-decreasing on the left one.  The conditions are posed on
unbounded tails; only a finite mesh extent can be checked, and the report
records exactly what was checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bounds import Window
from .errors import NyquistError, ParameterError
from .kernel import KernelParams, hermite_phys

__all__ = [
    "ParamChoice",
    "HypothesisReport",
    "KHypothesisResult",
    "min_r",
    "min_m",
    "choose",
    "check_hypotheses",
    "DEFAULT_SAFETY",
    "DEFAULT_M_CAP",
]

DEFAULT_SAFETY = 1.2
DEFAULT_M_CAP = 200

# Relative nudge applied when the strict inequality lands exactly on the
# boundary (safety = 1); feasibility must re-verify by direct evaluation.
_TIE_NUDGE = 1e-12


def _rule_rhs(eta: float) -> float:
    if not (eta > 0):
        raise ParameterError(f"eta must be positive, got {eta}")
    return math.sqrt(2.0 * eta * math.log(10.0))


@dataclass(frozen=True)
class ParamChoice:
    """A (r, m) working point for a requested accuracy order."""

    r: float
    m: int
    eta: float
    feasible: bool
    rule_rhs: float        # sqrt(2 eta ln 10)
    r_floor: float         # literal minimum r for this (eta, B, delta)
    m_cap: int


def min_r(eta: float, bandlimit: float, delta: float) -> float:
    """Infimum of feasible grid ratios: sqrt(2 eta ln 10)/(pi - B delta)."""
    rhs = _rule_rhs(eta)
    bd = bandlimit * delta
    if bd >= math.pi:
        raise NyquistError(
            f"B*delta={bd} must lie strictly below pi; sampling at or above "
            f"the Nyquist rate leaves no feasible r")
    return rhs / (math.pi - bd)


def min_m(eta: float, r: float) -> int:
    """Smallest integer window half-width strictly satisfying m/r > rhs."""
    if not (r > 0):
        raise ParameterError(f"r must be positive, got {r}")
    x = r * _rule_rhs(eta)
    m = math.floor(x) + 1          # strictly greater, also when x is integral
    return int(m)


def choose(eta: float, bandlimit: float, delta: float,
           safety: float = DEFAULT_SAFETY, m_cap: int = DEFAULT_M_CAP) -> ParamChoice:
    """Pick (r, m) for accuracy order eta at band limit B.

    r = safety * min_r, nudged up one part in 1e12 if the strict rule would
    tie; m from min_m.  Infeasibility (m above the cap) is a returned state,
    not an error: beyond a couple hundred nodes per window the method loses
    to dense spectral alternatives.
    """
    if safety < 1:
        raise ParameterError(f"safety must be >= 1, got {safety}")
    rhs = _rule_rhs(eta)
    r_floor = min_r(eta, bandlimit, delta)
    r = safety * r_floor
    bd = bandlimit * delta
    if not (r * (math.pi - bd) > rhs):
        r = r * (1.0 + _TIE_NUDGE)
    m = min_m(eta, r)
    feasible = m <= m_cap and r * (math.pi - bd) > rhs and m / r > rhs
    return ParamChoice(r=r, m=m, eta=float(eta), feasible=feasible,
                       rule_rhs=rhs, r_floor=r_floor, m_cap=m_cap)


@dataclass(frozen=True)
class KHypothesisResult:
    k: int
    passed: bool
    first_violation_x: float | None = None
    side: str | None = None          # "right" or "left"


@dataclass(frozen=True)
class HypothesisReport:
    """Per-k verdicts of the tail monotonicity conditions at one t.

    Only the stated finite extents were checked; the unbounded-tail
    conditions themselves are not decidable by sampling.
    """

    t: float
    right_extent: tuple[float, float]
    left_extent: tuple[float, float]
    mesh_per_delta: int
    results: tuple[KHypothesisResult, ...] = field(default=())

    def passed(self, k_max: int | None = None) -> bool:
        rs = self.results if k_max is None else self.results[: k_max + 1]
        return all(r.passed for r in rs)

    def first_failure(self) -> KHypothesisResult | None:
        for r in self.results:
            if not r.passed:
                return r
        return None


def check_hypotheses(f, f_prime, t: float, params: KernelParams,
                     window: Window, k_max: int, mesh: int = 12,
                     tail_extent: float = 20.0) -> HypothesisReport:
    """Mesh-check the tail conditions for each Hermite order k <= k_max.

    f and f_prime are vectorized callables.  The right tail is sampled on
    [t + (m1-1) delta, t + (m1-1+tail_extent) delta], the left on
    [t - (m2+tail_extent) delta, t - m2 delta], with `mesh` points per delta
    (at least 10).  g' is assembled from f' and H_k' = 2k H_{k-1}.
    """
    if mesh < 10:
        raise ParameterError(f"mesh must be at least 10 points per delta, got {mesh}")
    if k_max < 0:
        raise ParameterError(f"k_max must be >= 0, got {k_max}")
    d, sig = params.delta, params.sigma
    sqrt2sig = math.sqrt(2.0) * sig

    r_lo = t + (window.m1 - 1) * d
    r_hi = r_lo + tail_extent * d
    l_hi = t - window.m2 * d
    l_lo = l_hi - tail_extent * d
    n_pts = int(round(tail_extent * mesh)) + 1
    xr = np.linspace(r_lo, r_hi, n_pts)
    xl = np.linspace(l_lo, l_hi, n_pts)

    results = []
    for k in range(k_max + 1):
        verdict = KHypothesisResult(k=k, passed=True)
        for x, side in ((xr, "right"), (xl, "left")):
            fx = np.asarray(f(x), dtype=float)
            fpx = np.asarray(f_prime(x), dtype=float)
            y = (t - x) / sqrt2sig
            hk = hermite_phys(k, y)
            g = fx * hk
            gp = fpx * hk
            if k > 0:
                gp = gp + fx * (2.0 * k) * hermite_phys(k - 1, y) * (-1.0 / sqrt2sig)
            rhs = g * (x - t) / (sig * sig)
            bad = (gp > rhs) if side == "right" else (gp < rhs)
            if bad.any():
                i = int(np.argmax(bad))
                verdict = KHypothesisResult(k=k, passed=False,
                                            first_violation_x=float(x[i]),
                                            side=side)
                break
        results.append(verdict)

    return HypothesisReport(t=float(t), right_extent=(float(r_lo), float(r_hi)),
                            left_extent=(float(l_lo), float(l_hi)),
                            mesh_per_delta=int(mesh), results=tuple(results))
