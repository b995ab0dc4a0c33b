"""Verification harness: measured errors against the a-priori bounds.

The harness builds bandlimited test functions with closed-form derivatives,
samples them, runs the windowed approximation over a mesh, and compares the
discrete L^2 error against the theoretical total bound together with the
tail-hypothesis verdict.

Precision policy: approximation, samples, and reference values are computed
in extended precision (x86 80-bit long double) when available, because at
the strongest parameter settings the true method error sits below double‑
precision roundoff (~1e-16 * sum|f K|) and a double-precision measurement
would report arithmetic noise instead of method error.  In the rare cells
where even long-double noise exceeds the bound, a gated case with measured
ratio > 1 is re-measured with 50-digit mpmath arithmetic before being
reported.  Reference derivatives always come from the analytic closed forms
of the suite functions (never from the kernels being tested).

Norm surrogates: the bounds take finite-interval discrete L^2 norms computed
over the widened interval [a - m2 delta, b + m1 delta], which majorizes both
window-shifted intervals that the finite-domain reading of the truncation
bounds prescribes.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from . import bounds as bnd
from .bounds import FunctionNorms, Window
from .errors import FdConvergenceError, ParameterError
from .kernel import KernelParams
from .params import check_hypotheses
from .sampling import UniformSamples, build_stencil, plain_shannon_approx

__all__ = [
    "EXTENDED_PRECISION",
    "WORK_DTYPE",
    "TestFunction",
    "ErrorReport",
    "TruncationComparison",
    "builtin_suite",
    "DEFAULT_SUITE_SEED",
    "discrete_l2",
    "fd_oracle",
    "run_case",
    "sweep",
    "truncation_comparison",
    "band_energy_outside",
    "write_reports",
]

#: True when numpy's longdouble is genuinely wider than float64 here.
EXTENDED_PRECISION = np.finfo(np.longdouble).eps < 1e-18

WORK_DTYPE = np.longdouble if EXTENDED_PRECISION else np.float64

DEFAULT_SUITE_SEED = 12345

_MESH_JITTER = 0.137  # cell-fraction offset keeping mesh points off the nodes


@dataclass(frozen=True)
class TestFunction:
    """Bandlimited test function with analytic derivatives up to order 2."""

    name: str
    bandlimit: float
    eval: Callable
    d1: Callable
    d2: Callable
    eval_mp: Callable | None = None
    description: str = ""

    def eval_deriv(self, t, s: int):
        if s == 0:
            return self.eval(t)
        if s == 1:
            return self.d1(t)
        if s == 2:
            return self.d2(t)
        raise ParameterError(
            f"analytic derivatives available for s <= 2 only, got s={s}")


@dataclass(frozen=True)
class ErrorReport:
    """One verification case: measured error, bound, and hypothesis verdict.

    ratio is recorded even when above 1; a dominance failure is data.
    """

    case_id: str
    function: str
    s: int
    delta: float
    sigma: float
    m1: int
    m2: int
    domain_lo: float
    domain_hi: float
    bandlimit: float
    norm_f: float
    norm_fs: float
    empirical_l2: float
    empirical_max: float
    e1: float
    e2: float
    e3: float
    bound: float
    ratio: float
    hyp_passed: bool
    hyp_detail: str
    mesh: int
    precision: str


@dataclass(frozen=True)
class TruncationComparison:
    """Plain vs regularized truncation at equal window size."""

    function: str
    delta: float
    m: int
    r: float
    plain_l2: float
    reg_l2: float
    lemma4_bound: float
    s0_bound: float
    plain_within_lemma4: bool
    reg_below_plain: bool


# ---------------------------------------------------------------------------
# suite construction
# ---------------------------------------------------------------------------

def _sinc_shape(u, order: int):
    """sin(u)/u and its first two u-derivatives, series-guarded near 0."""
    dt = u.dtype
    small = np.abs(u) < 1e-2
    us = u[small]
    ub = u[~small]
    out = np.empty_like(u)
    u2 = us * us
    if order == 0:
        out[small] = 1 - u2 / 6 + u2 * u2 / 120 - u2 * u2 * u2 / 5040 \
            + u2 * u2 * u2 * u2 / dt.type(362880)
        out[~small] = np.sin(ub) / ub
    elif order == 1:
        out[small] = us * (-dt.type(1) / 3 + u2 / 30 - u2 * u2 / 840
                           + u2 * u2 * u2 / dt.type(45360))
        out[~small] = (ub * np.cos(ub) - np.sin(ub)) / (ub * ub)
    else:
        out[small] = (-dt.type(1) / 3 + u2 / 10 - u2 * u2 / 168
                      + u2 * u2 * u2 / dt.type(6480))
        out[~small] = (-np.sin(ub) / ub - 2 * np.cos(ub) / (ub * ub)
                       + 2 * np.sin(ub) / (ub * ub * ub))
    return out


def _sinc_combo(bandlimit: float, shifts, coeffs):
    """Callables for f(t) = sum_k c_k sin(B(t-a_k)) / (B(t-a_k))."""
    shifts = [float(a) for a in shifts]
    coeffs = [float(c) for c in coeffs]

    def make(order):
        def fn(t):
            arr = np.asarray(t)
            if arr.dtype.kind != "f":
                arr = arr.astype(np.float64)
            scalar = arr.ndim == 0
            tv = np.atleast_1d(arr)
            dt = tv.dtype
            B = dt.type(bandlimit)
            acc = np.zeros_like(tv)
            for a, c in zip(shifts, coeffs):
                u = B * (tv - dt.type(a))
                acc += dt.type(c) * _sinc_shape(u, order)
            acc *= B ** order
            return acc[0] if scalar else acc
        return fn

    def fn_mp(t):
        import mpmath as mp
        acc = mp.mpf(0)
        B = mp.mpf(bandlimit)
        for a, c in zip(shifts, coeffs):
            u = B * (t - mp.mpf(a))
            acc += mp.mpf(c) * (mp.sin(u) / u if u != 0 else mp.mpf(1))
        return acc

    return make(0), make(1), make(2), fn_mp


def _positive_window(alpha: float, bandlimit: float):
    """Bandlimited function with strictly positive, eventually monotone tails.

    f(t) = (1 + q^2 - 2 q cos(B t)) / (t^2 + alpha^2),  q = exp(-alpha B).
    It is |h|^2 for h the transform of an exponential window on [0, B], so
    its spectrum is exactly supported in [-B, B]; unlike sinc-type functions
    its tails never change sign, which lets the tail monotonicity hypotheses
    hold over practical window sizes.
    """
    q0 = math.exp(-alpha * bandlimit)

    def parts(tv):
        dt = tv.dtype
        q, B, al = dt.type(q0), dt.type(bandlimit), dt.type(alpha)
        N = 1 + q * q - 2 * q * np.cos(B * tv)
        Np = 2 * q * B * np.sin(B * tv)
        Npp = 2 * q * B * B * np.cos(B * tv)
        D = tv * tv + al * al
        return N, Np, Npp, D, 2 * tv

    def wrap(fn):
        def call(t):
            arr = np.asarray(t)
            if arr.dtype.kind != "f":
                arr = arr.astype(np.float64)
            scalar = arr.ndim == 0
            tv = np.atleast_1d(arr)
            out = fn(tv)
            return out[0] if scalar else out
        return call

    @wrap
    def f0(tv):
        N, _, _, D, _ = parts(tv)
        return N / D

    @wrap
    def f1(tv):
        N, Np, _, D, Dp = parts(tv)
        return (Np * D - N * Dp) / (D * D)

    @wrap
    def f2(tv):
        N, Np, Npp, D, Dp = parts(tv)
        return Npp / D - 2 * Np * Dp / (D * D) - 2 * N / (D * D) \
            + 2 * N * Dp * Dp / (D * D * D)

    def f_mp(t):
        import mpmath as mp
        q = mp.exp(-mp.mpf(alpha) * mp.mpf(bandlimit))
        N = 1 + q * q - 2 * q * mp.cos(mp.mpf(bandlimit) * t)
        return N / (t * t + mp.mpf(alpha) ** 2)

    return f0, f1, f2, f_mp


def builtin_suite(seed: int = DEFAULT_SUITE_SEED) -> list[TestFunction]:
    """The standard bandlimited test set.

    Three single sincs at B in {0.5, 1.0, 0.9 pi}, one seeded 5-term shifted
    sinc combination, a near-constant low-band sinc (the B -> 0 proxy), and
    the positive-tail member whose tail hypotheses are checkable.
    """
    suite = []
    for bl, tag in ((0.5, "sinc_b0.5"), (1.0, "sinc_b1.0"),
                    (0.9 * math.pi, "sinc_b0.9pi")):
        f0, f1, f2, fmp = _sinc_combo(bl, [0.0], [1.0])
        suite.append(TestFunction(
            name=tag, bandlimit=bl, eval=f0, d1=f1, d2=f2, eval_mp=fmp,
            description=f"sin({bl}t)/({bl}t)"))

    rng = np.random.default_rng(seed)
    shifts = rng.uniform(-5.0, 5.0, size=5)
    coeffs = rng.uniform(-1.0, 1.0, size=5)
    f0, f1, f2, fmp = _sinc_combo(1.0, shifts, coeffs)
    suite.append(TestFunction(
        name="combo_b1.0", bandlimit=1.0, eval=f0, d1=f1, d2=f2, eval_mp=fmp,
        description=f"5-term shifted sinc combination, seed={seed}"))

    f0, f1, f2, fmp = _sinc_combo(0.02, [0.0], [1.0])
    suite.append(TestFunction(
        name="lowband_b0.02", bandlimit=0.02, eval=f0, d1=f1, d2=f2, eval_mp=fmp,
        description="near-constant low-band sinc (B->0 proxy)"))

    f0, f1, f2, fmp = _positive_window(2.5, 1.0)
    suite.append(TestFunction(
        name="poswindow_b1.0", bandlimit=1.0, eval=f0, d1=f1, d2=f2, eval_mp=fmp,
        description="positive-tail |h|^2 member, alpha=2.5"))
    return suite


# ---------------------------------------------------------------------------
# generic measurement pieces
# ---------------------------------------------------------------------------

def discrete_l2(values_a, values_b, delta: float) -> float:
    """Riemann-sum L^2 distance sqrt(delta * sum (a_i - b_i)^2)."""
    a = np.asarray(values_a)
    b = np.asarray(values_b)
    if a.shape != b.shape:
        raise ParameterError(f"length mismatch: {a.shape} vs {b.shape}")
    d = a - b
    return float(np.sqrt(delta * np.sum(d * d)))


def _fd_weights(s: int) -> tuple[np.ndarray, np.ndarray]:
    """Central finite-difference weights of order >= 2 for the s-th derivative."""
    q = s // 2 + 1
    offs = np.arange(-q, q + 1, dtype=float)
    npts = offs.size
    A = np.vander(offs, npts, increasing=True).T       # A[p, j] = offs[j]^p
    rhs = np.zeros(npts)
    rhs[s] = math.factorial(s)
    return offs, np.linalg.solve(A, rhs)


def fd_oracle(f, s: int, t: float, h0: float = 0.25, rtol: float = 1e-8,
              max_levels: int = 12) -> float:
    """s-th derivative of f at t: central differences, Richardson-refined.

    Halves the step until successive extrapolated values agree to rtol or
    roundoff takes over; raises FdConvergenceError (carrying the best
    estimate and achieved tolerance) if neither happens.
    """
    if s == 0:
        return float(f(t))
    offs, w = _fd_weights(s)
    tiny = 1e-300

    def d(h):
        vals = np.array([float(f(t + o * h)) for o in offs])
        return float(np.dot(w, vals) / h ** s)

    rows = [[d(h0)]]
    best = rows[0][0]
    best_err = math.inf
    prev_diag = rows[0][0]
    worsened = 0
    for k in range(1, max_levels):
        h = h0 / 2 ** k
        row = [d(h)]
        for j in range(1, k + 1):
            fac = 4.0 ** j
            row.append((fac * row[j - 1] - rows[k - 1][j - 1]) / (fac - 1.0))
        rows.append(row)
        diag = row[-1]
        scale = max(abs(diag), abs(prev_diag), tiny)
        rel = abs(diag - prev_diag) / scale
        if rel < best_err:
            best_err = rel
            best = diag
            worsened = 0
        else:
            worsened += 1
        if rel <= rtol:
            return diag
        if worsened >= 2 and k >= 4:
            break  # roundoff floor reached; best is the converged estimate
        prev_diag = diag
    if best_err <= max(1e-4, 100 * rtol):
        return best
    raise FdConvergenceError(best, best_err)


def band_energy_outside(tf: TestFunction, guard: float = 0.25,
                        window_sigma: float = 40.0, dx: float = 0.25) -> float:
    """Relative spectral energy of tf outside [-(B + guard), B + guard].

    Estimated by a discrete transform of the Gaussian-windowed function; the
    guard must exceed the window's own spectral width (~0.2 for the default
    window) since windowing smears the band edge.  Slowly decaying members
    rule out raw long-grid transforms: the truncation leakage alone would
    sit orders of magnitude above any useful threshold.
    """
    if guard <= math.sqrt(2 * 30 * math.log(10)) / window_sigma:
        raise ParameterError("guard below the window's spectral concentration width")
    half = 9.0 * window_sigma
    n = int(2 * half / dx)
    t = -half + dx * np.arange(n)
    g = np.asarray(tf.eval(t), dtype=float) * np.exp(-t * t / (2 * window_sigma ** 2))
    spec = np.fft.rfft(g)
    freq = 2 * math.pi * np.fft.rfftfreq(n, d=dx)
    power = np.abs(spec) ** 2
    total = power.sum()
    outside = power[freq > tf.bandlimit + guard].sum()
    return float(outside / total)


# ---------------------------------------------------------------------------
# cases
# ---------------------------------------------------------------------------

def _mesh_offsets(mesh: int, delta: float) -> np.ndarray:
    return (np.arange(mesh) + _MESH_JITTER) / mesh * delta


def _grid_samples(tf: TestFunction, delta: float, k_lo: int, k_hi: int,
                  dtype) -> UniformSamples:
    ks = np.arange(k_lo, k_hi + 1)
    nodes = ks.astype(dtype) * np.dtype(dtype).type(delta)
    return UniformSamples(values=np.asarray(tf.eval(nodes), dtype=dtype),
                          delta=delta, origin=k_lo * delta)


def _eval_mesh(tf: TestFunction, s: int, delta: float, cells: np.ndarray,
               offsets: np.ndarray, dtype):
    """Abscissas cell*delta + offset (exact in the work dtype) and f^(s) there."""
    dt = np.dtype(dtype).type
    t = (cells.astype(dtype)[:, None] * dt(delta)
         + offsets.astype(dtype)[None, :])
    return t, np.asarray(tf.eval_deriv(t.ravel(), s), dtype=dtype).reshape(t.shape)


def _surrogate_norm(tf: TestFunction, s: int, delta: float, lo: float, hi: float,
                    mesh: int, dtype) -> float:
    offsets = _mesh_offsets(mesh, delta)
    cells = np.arange(math.floor(lo / delta), math.ceil(hi / delta))
    _, vals = _eval_mesh(tf, s, delta, cells, offsets, dtype)
    v = vals.ravel()
    return float(np.sqrt((np.dtype(dtype).type(delta) / mesh) * np.sum(v * v)))


def _empirical_mp(tf: TestFunction, params: KernelParams, window: Window,
                  cells: np.ndarray, offsets: np.ndarray, dps: int = 50):
    """Re-measure the s=0 error of the gated case in mpmath arithmetic."""
    import mpmath as mp
    with mp.workdps(dps):
        delta = mp.mpf(params.delta)
        r = mp.mpf(params.r)
        m1, m2 = window.m1, window.m2
        k_lo = int(cells.min()) - m2
        k_hi = int(cells.max()) + m1
        samples = {k: tf.eval_mp(k * delta) for k in range(k_lo, k_hi + 1)}
        offs = list(range(-m2, m1 + 1))
        weights = {}
        for off in offsets:
            tau_u = mp.mpf(float(off) / params.delta)
            ws = []
            for m in offs:
                u = tau_u - m
                w = mp.sin(mp.pi * u) / (mp.pi * u) if u != 0 else mp.mpf(1)
                ws.append(w * mp.exp(-u * u / (2 * r * r)))
            weights[float(off)] = ws
        sq = mp.mpf(0)
        emax = mp.mpf(0)
        for c in cells:
            for off in offsets:
                acc = mp.fsum(samples[int(c) + m] * w
                              for m, w in zip(offs, weights[float(off)]))
                t = int(c) * delta + mp.mpf(float(off))
                err = acc - tf.eval_mp(t)
                sq += err * err
                emax = max(emax, abs(err))
        h = delta / len(offsets)
        return float(mp.sqrt(h * sq)), float(emax)


def run_case(tf: TestFunction, s: int, params: KernelParams, window: Window,
             domain: tuple[float, float] = (-20.0, 20.0), mesh: int = 10,
             case_id: str | None = None, hyp_mesh: int = 12,
             hyp_tail: float = 20.0, dtype=None,
             mp_recheck: bool = True) -> ErrorReport:
    """Measure one (function, order, parameters, window) verification case.

    Samples tf on the window-widened grid, approximates f^(s) on a mesh of
    `mesh` off-node points per cell across the domain, and reports the
    discrete L^2 and max errors against the total bound with finite-domain
    surrogate norms.  The hypothesis verdict is the AND over the Hermite
    orders k <= s that actually enter the expansion, checked at three
    representative t across the domain.
    """
    dtype = WORK_DTYPE if dtype is None else np.dtype(dtype)
    a, b = float(domain[0]), float(domain[1])
    if not a < b:
        raise ParameterError(f"empty domain {domain}")
    delta = params.delta

    k_lo = math.floor(a / delta) - window.m2 - 1
    k_hi = math.ceil(b / delta) + window.m1 + 1
    samples = _grid_samples(tf, delta, k_lo, k_hi, dtype)

    offsets = _mesh_offsets(mesh, delta)
    cells = np.arange(math.floor(a / delta), math.ceil(b / delta))
    keep = [c for c in cells
            if a - 1e-9 <= c * delta + offsets[0] and
            c * delta + offsets[-1] <= b + 1e-9]
    cells = np.asarray(keep, dtype=int)

    # approximation, vectorized per offset class (tau identical across cells)
    node_offs = np.arange(-window.m2, window.m1 + 1)
    approx = np.empty((cells.size, offsets.size), dtype=dtype)
    rel_centers = cells - k_lo
    gather = rel_centers[:, None] + node_offs[None, :]
    seg = samples.values[gather]
    for j, off in enumerate(offsets):
        st = build_stencil(s, float(off), params, window, dtype=dtype)
        approx[:, j] = seg @ st.weights

    _, ref = _eval_mesh(tf, s, delta, cells, offsets, dtype)
    err = approx - ref
    h = np.dtype(dtype).type(delta) / mesh
    empirical_l2 = float(np.sqrt(h * np.sum(err * err)))
    empirical_max = float(np.max(np.abs(err)))
    precision = "longdouble" if dtype == np.longdouble and EXTENDED_PRECISION \
        else str(np.dtype(dtype).name)

    norm_f = _surrogate_norm(tf, 0, delta, a - window.m2 * delta,
                             b + window.m1 * delta, mesh, dtype)
    norm_fs = norm_f if s == 0 else _surrogate_norm(
        tf, s, delta, a - window.m2 * delta, b + window.m1 * delta, mesh, dtype)
    norms = FunctionNorms(norm_f=norm_f, norm_fs=norm_fs, bandlimit=tf.bandlimit)
    bb = bnd.total_bound(s, norms, params, window)

    t_checks = [a + frac * (b - a) for frac in (0.17, 0.52, 0.83)]
    hyp_passed = True
    hyp_detail = ""
    for t0 in t_checks:
        rep = check_hypotheses(tf.eval, tf.d1, t0, params, window,
                               k_max=s, mesh=hyp_mesh, tail_extent=hyp_tail)
        if not rep.passed():
            fail = rep.first_failure()
            hyp_passed = False
            hyp_detail = (f"k={fail.k} fails on {fail.side} tail at "
                          f"x={fail.first_violation_x:.6g} (t={t0:.6g})")
            break

    if bb.total > 0:
        ratio = empirical_l2 / bb.total
    else:
        ratio = 0.0 if empirical_l2 == 0.0 else math.inf

    # A gated failure may still be arithmetic noise: re-measure exactly.
    if (mp_recheck and hyp_passed and ratio > 1.0 and s == 0
            and tf.eval_mp is not None):
        empirical_l2, empirical_max = _empirical_mp(tf, params, window,
                                                    cells, offsets)
        ratio = empirical_l2 / bb.total if bb.total > 0 else (
            0.0 if empirical_l2 == 0.0 else math.inf)
        precision = "mpmath-50"

    if case_id is None:
        case_id = f"{tf.name}/s{s}/m{window.m1}-{window.m2}/r{params.r:g}"

    return ErrorReport(
        case_id=case_id, function=tf.name, s=s, delta=delta,
        sigma=params.sigma, m1=window.m1, m2=window.m2,
        domain_lo=a, domain_hi=b, bandlimit=tf.bandlimit,
        norm_f=norm_f, norm_fs=norm_fs,
        empirical_l2=empirical_l2, empirical_max=empirical_max,
        e1=bb.e1, e2=bb.e2, e3=bb.e3, bound=bb.total, ratio=ratio,
        hyp_passed=hyp_passed, hyp_detail=hyp_detail,
        mesh=mesh, precision=precision)


def sweep(tf: TestFunction, s: int, delta: float, r_values, m_values,
          domain: tuple[float, float] = (-20.0, 20.0),
          mesh: int = 10) -> list[ErrorReport]:
    """Grid of run_case reports over (r, m); deterministic case order."""
    reports = []
    for r in r_values:
        for m in m_values:
            params = KernelParams.from_ratio(delta, r)
            reports.append(run_case(tf, s, params, Window.symmetric(m),
                                    domain=domain, mesh=mesh))
    return reports


def truncation_comparison(tf: TestFunction, delta: float, m: int, r: float,
                          domain: tuple[float, float] = (-20.0, 20.0),
                          mesh: int = 10) -> TruncationComparison:
    """Plain vs regularized interpolation error at the same window size."""
    params = KernelParams.from_ratio(delta, r)
    window = Window.symmetric(m)
    dtype = WORK_DTYPE
    a, b = float(domain[0]), float(domain[1])

    k_lo = math.floor(a / delta) - m - 1
    k_hi = math.ceil(b / delta) + m + 1
    samples = _grid_samples(tf, delta, k_lo, k_hi, dtype)
    offsets = _mesh_offsets(mesh, delta)
    cells = np.arange(math.floor(a / delta), math.ceil(b / delta))

    _, ref = _eval_mesh(tf, 0, delta, cells, offsets, dtype)
    plain = np.empty_like(ref)
    reg = np.empty_like(ref)
    node_offs = np.arange(-m, m + 1)
    gather = (cells - k_lo)[:, None] + node_offs[None, :]
    seg = samples.values[gather]
    from .sampling import _normalized_weights
    for j, off in enumerate(offsets):
        st = build_stencil(0, float(off), params, window, dtype=dtype)
        reg[:, j] = seg @ st.weights
        wp = _normalized_weights("sinc", 0, float(off) / delta, 0.0, m, m, dtype)
        plain[:, j] = seg @ wp

    h = np.dtype(dtype).type(delta) / mesh
    plain_l2 = float(np.sqrt(h * np.sum((plain - ref) ** 2)))
    reg_l2 = float(np.sqrt(h * np.sum((reg - ref) ** 2)))

    norm_f = _surrogate_norm(tf, 0, delta, a - m * delta, b + m * delta,
                             mesh, dtype)
    lemma4 = bnd.lemma4_truncation_bound(norm_f, m, delta)
    s0 = bnd.interp_bound_s0(
        FunctionNorms(norm_f, norm_f, tf.bandlimit), params, window)
    return TruncationComparison(
        function=tf.name, delta=delta, m=m, r=r,
        plain_l2=plain_l2, reg_l2=reg_l2,
        lemma4_bound=lemma4, s0_bound=s0,
        plain_within_lemma4=plain_l2 <= lemma4,
        reg_below_plain=reg_l2 < plain_l2)


# ---------------------------------------------------------------------------
# report output
# ---------------------------------------------------------------------------

def write_reports(case_reports: list[ErrorReport],
                  truncation_reports: list[TruncationComparison],
                  out_dir: str, seed: int | None = None) -> dict[str, str]:
    """Write cases.csv, truncation.csv, and report.json under out_dir.

    Returns the paths written.  Output is byte-stable for identical inputs:
    floats are serialized by repr.
    """
    os.makedirs(out_dir, exist_ok=True)
    paths = {}

    def fmt(v):
        if isinstance(v, float):
            return repr(v)
        return str(v)

    cases_path = os.path.join(out_dir, "cases.csv")
    with open(cases_path, "w") as fh:
        cols = list(ErrorReport.__dataclass_fields__)
        fh.write(",".join(cols) + "\n")
        for rep in case_reports:
            d = asdict(rep)
            fh.write(",".join(fmt(d[c]) for c in cols) + "\n")
    paths["cases_csv"] = cases_path

    trunc_path = os.path.join(out_dir, "truncation.csv")
    with open(trunc_path, "w") as fh:
        cols = list(TruncationComparison.__dataclass_fields__)
        fh.write(",".join(cols) + "\n")
        for rep in truncation_reports:
            d = asdict(rep)
            fh.write(",".join(fmt(d[c]) for c in cols) + "\n")
    paths["truncation_csv"] = trunc_path

    json_path = os.path.join(out_dir, "report.json")
    doc = {
        "schema_version": 1,
        "seed": seed,
        "extended_precision": EXTENDED_PRECISION,
        "cases": [asdict(r) for r in case_reports],
        "truncation": [asdict(r) for r in truncation_reports],
    }
    with open(json_path, "w") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")
    paths["report_json"] = json_path
    return paths
