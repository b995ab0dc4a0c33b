"""Applying the kernels to uniformly sampled data.

Index conventions follow the source formulas: the window is centered on the
integral part of the evaluation coordinate, i.e. center node
c = floor((t - origin)/delta) and fractional offset tau = t - origin -
c*delta in [0, delta).  (The sum runs over nodes [c - m2, c + m1], so the
retained window is asymmetric about t except at tau = 0.)

Stencils -- the vector of kernel-derivative weights for one (s, tau) -- are
cached.  Weights scale as delta^-s times a function of (tau/delta, r) only,
so the cache stores grid-normalized weights keyed by
(kind, s, tau/delta quantized to 1e-12, r, m1, m2, dtype) and rescales on
retrieval.  PDE-style callers hit identical stencils millions of times.

Stencil construction and application are pure; the cache is shared across
threads with insertion serialized by a lock (plain dict reads are atomic
under the GIL).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field

import numpy as np

from .bounds import Window
from .errors import ParameterError, WindowError, WindowExceedsDataError
from .kernel import KernelParams, _kernel_deriv_core, _validate_order

__all__ = [
    "UniformSamples",
    "Stencil",
    "BandedDerivativeOperator",
    "build_stencil",
    "approximate",
    "approximate_at_offset",
    "diff_matrix",
    "plain_shannon_approx",
    "clear_stencil_cache",
]

#: Evaluation points within this many grid units of a node are treated as
#: node-exact (tau snapped to 0).  Comfortably above floating slop in the
#: (t - origin)/delta reduction and far below any tolerance in use.
NODE_SNAP = 1e-12

_TAU_QUANTUM = 1e-12

_cache_lock = threading.Lock()
_stencil_cache: dict = {}


def clear_stencil_cache() -> None:
    """Drop all cached stencil weights (mainly for tests and memory audits)."""
    with _cache_lock:
        _stencil_cache.clear()


@dataclass(frozen=True)
class UniformSamples:
    """Sample values on a uniform grid: node i sits at origin + i*delta."""

    values: np.ndarray
    delta: float
    origin: float = 0.0

    def __post_init__(self):
        vals = np.asarray(self.values)
        if vals.dtype.kind != "f":
            vals = vals.astype(np.float64)
        if vals.ndim != 1 or vals.size == 0:
            raise ParameterError("values must be a non-empty 1-d sequence")
        if not np.isfinite(vals.astype(np.float64)).all():
            raise ParameterError("all sample values must be finite")
        if not (float(self.delta) > 0 and math.isfinite(float(self.delta))):
            raise ParameterError(f"delta must be positive and finite, got {self.delta}")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "delta", float(self.delta))
        object.__setattr__(self, "origin", float(self.origin))

    def __len__(self) -> int:
        return self.values.size

    def node(self, i: int) -> float:
        return self.origin + i * self.delta


@dataclass(frozen=True)
class Stencil:
    """Kernel-derivative weights for one fractional offset and order.

    weights[k] multiplies the sample at node offset offsets[k] = k - m2,
    running over [-m2, m1].
    """

    s: int
    frac_offset: float
    params: KernelParams
    m1: int
    m2: int
    weights: np.ndarray = field(repr=False)

    @property
    def offsets(self) -> np.ndarray:
        return np.arange(-self.m2, self.m1 + 1)


def _normalized_weights(kind: str, s: int, tau_over_delta: float, r: float,
                        m1: int, m2: int, dtype) -> np.ndarray:
    """Grid-normalized stencil weights (delta = 1), cached."""
    dt = np.dtype(dtype)
    key = (kind, s, int(round(tau_over_delta / _TAU_QUANTUM)), r, m1, m2, dt.name)
    w = _stencil_cache.get(key)
    if w is not None:
        return w
    offs = np.arange(-m2, m1 + 1)
    x = dt.type(tau_over_delta) - offs.astype(dt)
    sigma = r if kind == "reg" else None
    w = _kernel_deriv_core(s, x, 1.0, sigma)
    w.setflags(write=False)
    with _cache_lock:
        _stencil_cache.setdefault(key, w)
    return w


def build_stencil(s: int, frac_offset: float, params: KernelParams,
                  window: Window, dtype=np.float64) -> Stencil:
    """Stencil of kernel-derivative weights at fractional offset tau.

    frac_offset is the distance from the evaluation point down to its left
    node, in [0, delta).  Deterministic for identical inputs.
    """
    s = _validate_order(s)
    tau = float(frac_offset)
    if not (0.0 <= tau < params.delta):
        raise ParameterError(
            f"frac_offset must lie in [0, delta)={params.delta}, got {frac_offset}")
    w = _normalized_weights("reg", s, tau / params.delta, params.r,
                            window.m1, window.m2, dtype)
    dt = np.dtype(dtype)
    weights = w * dt.type(params.delta) ** (-s)
    weights.setflags(write=False)
    return Stencil(s=s, frac_offset=tau, params=params,
                   m1=window.m1, m2=window.m2, weights=weights)


def _locate(samples: UniformSamples, t: float) -> tuple[int, float]:
    """Center node index and fractional offset for evaluation point t."""
    p = (float(t) - samples.origin) / samples.delta
    rho = round(p)
    if abs(p - rho) <= NODE_SNAP:
        return int(rho), 0.0
    c = math.floor(p)
    return c, (p - c) * samples.delta


def _check_window(samples: UniformSamples, c: int, window: Window) -> None:
    missing_left = max(0, window.m2 - c)
    missing_right = max(0, c + window.m1 - (len(samples) - 1))
    if missing_left or missing_right:
        raise WindowExceedsDataError(missing_left, missing_right)


def _check_delta(samples: UniformSamples, delta: float) -> None:
    if abs(samples.delta - delta) > 1e-12 * samples.delta:
        raise ParameterError(
            f"grid spacing mismatch: samples have delta={samples.delta}, "
            f"kernel parameters have delta={delta}")


def approximate_at_offset(samples: UniformSamples, center: int, frac_offset: float,
                          s: int, params: KernelParams, window: Window):
    """Windowed approximation addressed by (center node, fractional offset).

    Low-level entry: the evaluation point is origin + center*delta +
    frac_offset, passed split so callers (notably the verification harness)
    can keep the offset bit-exact across cells.  Works in the dtype of the
    stored samples.
    """
    _check_delta(samples, params.delta)
    _check_window(samples, center, window)
    st = build_stencil(s, frac_offset, params, window, dtype=samples.values.dtype)
    seg = samples.values[center - window.m2: center + window.m1 + 1]
    return np.dot(st.weights, seg)


def approximate(samples: UniformSamples, t: float, s: int,
                params: KernelParams, window: Window):
    """Approximate f^(s)(t) from the samples through the regularized kernel.

    Consumes exactly m1 + m2 + 1 samples around the integral part of
    (t - origin)/delta; raises WindowExceedsDataError (with the missing side
    and count) if the window leaves the data.  At nodes with s = 0 the stored
    sample is returned bit-exactly (cardinal stencil).
    """
    s = _validate_order(s)
    _check_delta(samples, params.delta)
    c, tau = _locate(samples, t)
    return approximate_at_offset(samples, c, tau, s, params, window)


@dataclass(frozen=True)
class BandedDerivativeOperator:
    """Grid-to-grid derivative operator: one tau = 0 stencil applied along
    the grid (translation invariance makes every interior row identical).

    apply() maps n_points sample values to derivative values at the interior
    nodes m, ..., n_points - 1 - m.
    """

    s: int
    m: int
    n_points: int
    params: KernelParams
    band: np.ndarray = field(repr=False)

    @property
    def interior_indices(self) -> np.ndarray:
        return np.arange(self.m, self.n_points - self.m)

    def apply(self, values) -> np.ndarray:
        v = np.asarray(values)
        if v.shape != (self.n_points,):
            raise ParameterError(
                f"expected {self.n_points} values, got shape {v.shape}")
        # (D v)[i] = sum_k band[k] v[i + k - m]  == correlation == flipped convolution
        return np.convolve(v, self.band[::-1], mode="valid")

    def __matmul__(self, values) -> np.ndarray:
        return self.apply(values)


def diff_matrix(n_points: int, s: int, params: KernelParams,
                m: int) -> BandedDerivativeOperator:
    """Banded derivative operator with symmetric window m1 = m2 = m.

    Row weights are the tau = 0 stencil; rows exist only for interior nodes,
    so the output of apply() is shorter than the input by 2m.  No padding or
    extrapolation: fabricating boundary data would void the error bounds.
    """
    s = _validate_order(s)
    window = Window.symmetric(m)
    if n_points <= 2 * m:
        raise WindowError(
            f"need n_points > 2m for any interior node, got n_points={n_points}, m={m}")
    st = build_stencil(s, 0.0, params, window)
    return BandedDerivativeOperator(s=s, m=m, n_points=int(n_points),
                                    params=params, band=st.weights)


def plain_shannon_approx(samples: UniformSamples, t: float, s: int, m: int):
    """Truncated plain cardinal-series approximation (no Gaussian window).

    Comparator for the regularized path: same symmetric window m1 = m2 = m,
    bare sinc kernel derivatives as weights.
    """
    s = _validate_order(s)
    window = Window.symmetric(m)
    c, tau = _locate(samples, t)
    _check_window(samples, c, window)
    w = _normalized_weights("sinc", s, tau / samples.delta, 0.0, m, m,
                            samples.values.dtype)
    dt = samples.values.dtype
    weights = w * dt.type(samples.delta) ** (-s)
    seg = samples.values[c - m: c + m + 1]
    return np.dot(weights, seg)
