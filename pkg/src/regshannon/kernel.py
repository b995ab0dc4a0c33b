"""Regularized Shannon kernel and its closed-form derivatives.

The interpolation kernel attached to grid node ``n`` of a uniform grid with
spacing ``delta`` is the sinc kernel damped by a Gaussian window::

    K(t) = sinc_pi((t - n*delta)/delta) * exp(-(t - n*delta)^2 / (2 sigma^2))

with ``sinc_pi(x) = sin(pi x)/(pi x)``.  The Gaussian trades exact
bandlimitation for rapid spatial decay, which is what makes short truncation
windows usable.  This module evaluates ``K`` and its s-th derivatives in
closed form, plus the bare (unregularized) sinc kernel for comparison.

Derivatives are assembled from the two factors by the Leibniz rule:

    K^(s)(x) = sum_{a+b=s} C(s,a) * delta^-a * sinc_pi^(a)(x/delta) * G^(b)(x)

where the Gaussian derivatives come from the physicists' Hermite polynomials,

    G^(b)(x) = (-1/(sqrt2 sigma))^b * H_b(x/(sqrt2 sigma)) * exp(-x^2/(2 sigma^2)),

and the sinc derivatives use either the pair expansion

    sinc_pi^(a)(u) = sum_{i+j=a} (a!/i!) pi^(i-1) sin(pi u + i pi/2) (-1)^j u^-(j+1)

or, below ``|u| = 0.5``, the differentiated power series of sinc_pi.  The
pair expansion alone loses all precision near the node (the u^-(j+1) poles
cancel analytically but not in floating point), so the series takes over
there; within ``|u| < 1e-4`` of the node the whole product switches to its
differentiated Taylor series.

Everything here is a pure function; safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, UnsupportedOrderError

__all__ = [
    "KernelParams",
    "MAX_DERIV_ORDER",
    "NODE_TAYLOR_THRESHOLD",
    "sinc_pi",
    "gauss_reg",
    "hermite_phys",
    "reg_kernel",
    "reg_kernel_deriv",
    "sinc_kernel_deriv",
]

#: Highest supported derivative order.  Factorial growth in the expansion and
#: Hermite magnitudes degrade conditioning beyond this.
MAX_DERIV_ORDER = 8

#: |t - n*delta|/delta below which the full product is evaluated by its
#: differentiated Taylor series instead of the factored closed form.
NODE_TAYLOR_THRESHOLD = 1e-4

# Series half of the hybrid sinc-derivative evaluation takes over below this
# |u|; tuned so both branches agree to ~5e-12 relative at the crossover for
# every order up to MAX_DERIV_ORDER.
_SERIES_SWITCH = 0.5

_TAYLOR_EXTRA_TERMS = 12

# pi to long-double precision; converting down to float64 reproduces np.pi.
_PI_LONG = np.longdouble("3.14159265358979323846264338327950288419716939937510")


@dataclass(frozen=True)
class KernelParams:
    """Grid spacing and Gaussian width; fixes every kernel and bound.

    Both lengths must be positive and finite.  The dimensionless ratio
    ``r = sigma/delta`` is the tuning parameter all accuracy rules speak in.
    """

    delta: float
    sigma: float

    def __post_init__(self):
        d, s = float(self.delta), float(self.sigma)
        if not (math.isfinite(d) and d > 0):
            raise ParameterError(f"delta must be positive and finite, got {self.delta}")
        if not (math.isfinite(s) and s > 0):
            raise ParameterError(f"sigma must be positive and finite, got {self.sigma}")
        object.__setattr__(self, "delta", d)
        object.__setattr__(self, "sigma", s)

    @property
    def r(self) -> float:
        return self.sigma / self.delta

    @classmethod
    def from_ratio(cls, delta: float, r: float) -> "KernelParams":
        return cls(delta=delta, sigma=r * delta)


def _validate_order(s: int) -> int:
    if s != int(s) or s < 0:
        raise UnsupportedOrderError(f"derivative order must be a non-negative integer, got {s}")
    if s > MAX_DERIV_ORDER:
        raise UnsupportedOrderError(
            f"derivative order {s} exceeds the supported cap {MAX_DERIV_ORDER}")
    return int(s)


def _as_float_array(x):
    arr = np.asarray(x)
    if arr.dtype.kind != "f":
        arr = arr.astype(np.float64)
    return arr


def _pi(dtype) -> np.floating:
    return dtype.type(_PI_LONG)


def sinc_pi(x):
    """sin(pi x)/(pi x) with the removable singularity filled.

    Returns 1 at x = 0 and exactly 0 at every other integer: the sine is
    taken at pi*(x - rint(x)), so node zeros do not inherit the rounding of
    pi*x.  Accepts scalars or arrays, float64 or longdouble.
    """
    arr = _as_float_array(x)
    scalar = arr.ndim == 0
    u = np.atleast_1d(arr)
    pi = _pi(u.dtype)

    m = np.rint(u)
    fr = u - m
    sign = np.where((m.astype(np.int64) & 1) == 0, u.dtype.type(1), u.dtype.type(-1))
    out = np.empty_like(u)
    zero = u == 0
    out[zero] = 1
    nz = ~zero
    out[nz] = sign[nz] * np.sin(pi * fr[nz]) / (pi * u[nz])
    return out[0] if scalar else out


def gauss_reg(x, sigma: float):
    """Gaussian regularizer exp(-x^2 / (2 sigma^2)); value in (0, 1]."""
    if not (sigma > 0):
        raise ParameterError(f"sigma must be positive, got {sigma}")
    arr = _as_float_array(x)
    s = arr.dtype.type(sigma)
    return np.exp(-(arr * arr) / (2 * s * s))


def hermite_phys(k: int, x):
    """Physicists' Hermite polynomial H_k by the three-term recurrence.

    H_{k+1}(x) = 2x H_k(x) - 2k H_{k-1}(x), H_0 = 1, H_1 = 2x.  Equivalent to
    the derivative definition exp(-x^2) H_k(x) = (-1)^k (d/dx)^k exp(-x^2).
    """
    if k != int(k) or k < 0:
        raise ParameterError(f"Hermite order must be a non-negative integer, got {k}")
    k = int(k)
    arr = _as_float_array(x)
    scalar = arr.ndim == 0
    y = np.atleast_1d(arr)
    h_prev = np.ones_like(y)
    if k == 0:
        return h_prev[0] if scalar else h_prev
    h = 2 * y
    for j in range(1, k):
        h_prev, h = h, 2 * y * h - 2 * j * h_prev
    return h[0] if scalar else h


def _sinc_deriv(a: int, u: np.ndarray) -> np.ndarray:
    """a-th derivative of sinc_pi at u (array), stable for all u != 0 scales.

    Series for |u| < 0.5; pair expansion with the node-folded sine phase
    otherwise.  Callers keep |u| above NODE_TAYLOR_THRESHOLD.
    """
    dt = u.dtype
    pi = _pi(dt)
    out = np.empty_like(u)

    small = np.abs(u) < _SERIES_SWITCH
    if small.any():
        us = u[small]
        acc = np.zeros_like(us)
        m0 = (a + 1) // 2
        for m in range(m0, m0 + a // 2 + 20):
            coeff = dt.type((-1) ** m) * pi ** (2 * m) / (
                (2 * m + 1) * dt.type(math.factorial(2 * m - a)))
            acc += coeff * us ** (2 * m - a)
        out[small] = acc

    big = ~small
    if big.any():
        ub = u[big]
        m = np.rint(ub)
        fr = ub - m
        sign = np.where((m.astype(np.int64) & 1) == 0, dt.type(1), dt.type(-1))
        s0 = np.sin(pi * fr)
        c0 = np.cos(pi * fr)
        cycle = (s0, c0, -s0, -c0)  # sin(pi u + i pi/2) = (-1)^m * cycle[i % 4]
        acc = np.zeros_like(ub)
        fact_a = math.factorial(a)
        for i in range(a + 1):
            j = a - i
            term = (dt.type(fact_a // math.factorial(i))
                    * pi ** (i - 1)
                    * sign * cycle[i % 4]
                    * dt.type((-1) ** j)
                    * ub ** (-(j + 1)))
            acc += term
        out[big] = acc
    return out


def _gauss_deriv_factor(b: int, x: np.ndarray, sigma) -> np.ndarray:
    """b-th derivative of exp(-x^2/(2 sigma^2)) via Hermite polynomials."""
    dt = x.dtype
    sig = dt.type(sigma)
    y = x / (np.sqrt(dt.type(2)) * sig)
    g = np.exp(-(x * x) / (2 * sig * sig))
    if b == 0:
        return g
    return (-1 / (np.sqrt(dt.type(2)) * sig)) ** b * hermite_phys(b, y) * g


def _taylor_product_deriv(s: int, x: np.ndarray, delta, sigma) -> np.ndarray:
    """s-th derivative of the (regularized) kernel by its Taylor series.

    The product sinc_pi(x/delta) * exp(-x^2/(2 sigma^2)) is even, so
    W(x) = sum_m c_m x^(2m) with c_m the Cauchy product of the two factor
    series; differentiate term by term.  Only used for |x/delta| below
    NODE_TAYLOR_THRESHOLD where a handful of terms is already exact to
    working precision.  sigma=None drops the Gaussian factor.
    """
    dt = x.dtype
    pi = _pi(dt)
    d = dt.type(delta)
    m_lo = (s + 1) // 2
    m_hi = m_lo + _TAYLOR_EXTRA_TERMS
    # factor series coefficients a_p (sinc) and b_q (Gaussian) up to m_hi
    a_c = [dt.type((-1) ** p) * pi ** (2 * p)
           / (dt.type(math.factorial(2 * p + 1)) * d ** (2 * p))
           for p in range(m_hi + 1)]
    if sigma is None:
        c = a_c
    else:
        sig = dt.type(sigma)
        b_c = [dt.type((-1) ** q) / (dt.type(math.factorial(q)) * (2 * sig * sig) ** q)
               for q in range(m_hi + 1)]
        c = [sum(a_c[p] * b_c[m - p] for p in range(m + 1)) for m in range(m_hi + 1)]
    out = np.zeros_like(x)
    for m in range(m_lo, m_hi + 1):
        fall = math.factorial(2 * m) // math.factorial(2 * m - s)
        out += c[m] * dt.type(fall) * x ** (2 * m - s)
    return out


def _kernel_deriv_core(s: int, x, delta: float, sigma) -> np.ndarray:
    """Dispatch between the factored closed form and the node Taylor path."""
    arr = _as_float_array(x)
    scalar = arr.ndim == 0
    xv = np.atleast_1d(arr)
    dt = xv.dtype
    u = xv / dt.type(delta)
    out = np.empty_like(xv)

    near = np.abs(u) < NODE_TAYLOR_THRESHOLD
    if near.any():
        out[near] = _taylor_product_deriv(s, xv[near], delta, sigma)
    far = ~near
    if far.any():
        xf = xv[far]
        uf = u[far]
        acc = np.zeros_like(xf)
        if sigma is None:
            acc = _sinc_deriv(s, uf) * dt.type(delta) ** (-s)
        else:
            for a in range(s + 1):
                b = s - a
                acc += (dt.type(math.comb(s, a)) * dt.type(delta) ** (-a)
                        * _sinc_deriv(a, uf)
                        * _gauss_deriv_factor(b, xf, sigma))
        out[far] = acc
    return out[0] if scalar else out


def reg_kernel(t, n: int, params: KernelParams):
    """Regularized Shannon kernel of node n at t: cardinal at its own node.

    Equals 1 when t = n*delta and 0 at every other node.
    """
    arr = _as_float_array(t)
    x = arr - arr.dtype.type(n) * arr.dtype.type(params.delta)
    return sinc_pi(x / arr.dtype.type(params.delta)) * gauss_reg(x, params.sigma)


def reg_kernel_deriv(s: int, t, n: int, params: KernelParams):
    """s-th t-derivative of the regularized kernel of node n."""
    s = _validate_order(s)
    arr = _as_float_array(t)
    x = arr - arr.dtype.type(n) * arr.dtype.type(params.delta)
    return _kernel_deriv_core(s, x, params.delta, params.sigma)


def sinc_kernel_deriv(s: int, t, n: int, delta: float):
    """s-th t-derivative of the bare sinc kernel (no Gaussian window)."""
    s = _validate_order(s)
    if not (delta > 0):
        raise ParameterError(f"delta must be positive, got {delta}")
    arr = _as_float_array(t)
    x = arr - arr.dtype.type(n) * arr.dtype.type(delta)
    return _kernel_deriv_core(s, x, delta, None)
