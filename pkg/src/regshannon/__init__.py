"""Gaussian-regularized Shannon sampling: interpolation and numerical
differentiation of uniformly sampled bandlimited functions, with the full
a-priori error-bound machinery, parameter-selection rules, and a
verification harness checking measured errors against the bounds."""

from .bounds import (AccuracyTarget, BoundBreakdown, FunctionNorms, Window,
                     e1_bound, e2_bound, e3_bound, eps_omega_bound,
                     erfc_sandwich, interp_bound_s0, lemma4_truncation_bound,
                     marks_truncation_bound, simplified_eta_bound, total_bound)
from .errors import (FdConvergenceError, NonUniformGridError, NyquistError,
                     ParameterError, RegShannonError, UnsupportedOrderError,
                     WindowError, WindowExceedsDataError)
from .kernel import (MAX_DERIV_ORDER, KernelParams, gauss_reg, hermite_phys,
                     reg_kernel, reg_kernel_deriv, sinc_kernel_deriv, sinc_pi)
from .params import (HypothesisReport, ParamChoice, check_hypotheses, choose,
                     min_m, min_r)
from .sampling import (BandedDerivativeOperator, Stencil, UniformSamples,
                       approximate, build_stencil, diff_matrix,
                       plain_shannon_approx)
from .verify import (ErrorReport, TestFunction, TruncationComparison,
                     band_energy_outside, builtin_suite, discrete_l2,
                     fd_oracle, run_case, sweep, truncation_comparison)

__version__ = "0.1.0"
