"""Exception types shared across the package."""


class RegShannonError(Exception):
    """Base class for all package errors."""


class ParameterError(RegShannonError, ValueError):
    """A parameter is outside its mathematical domain (sigma <= 0, eta <= 0, ...)."""


class UnsupportedOrderError(ParameterError):
    """Derivative order is negative or above the supported cap."""


class NyquistError(ParameterError):
    """Band limit B is not strictly below the Nyquist frequency pi/delta."""


class WindowError(ParameterError):
    """Truncation window too small (m1 < 2, m2 < 1) or grid too short for it."""


class WindowExceedsDataError(RegShannonError):
    """The requested evaluation window extends past the available samples.

    Attributes record how many samples are missing on each side so callers
    can report or pad precisely.
    """

    def __init__(self, missing_left: int = 0, missing_right: int = 0):
        self.missing_left = int(missing_left)
        self.missing_right = int(missing_right)
        if missing_left and missing_right:
            side = "both sides"
        elif missing_left:
            side = "the left"
        else:
            side = "the right"
        self.side = ("both" if missing_left and missing_right
                     else "left" if missing_left else "right")
        parts = []
        if missing_left:
            parts.append(f"{missing_left} sample(s) before the first")
        if missing_right:
            parts.append(f"{missing_right} sample(s) after the last")
        super().__init__(
            f"window exceeds data on {side}: needs {' and '.join(parts)}")


class NonUniformGridError(RegShannonError):
    """Input sample abscissas are not uniformly spaced."""


class FdConvergenceError(RegShannonError):
    """Finite-difference oracle failed to converge; best estimate attached."""

    def __init__(self, best: float, achieved_rtol: float):
        self.best = best
        self.achieved_rtol = achieved_rtol
        super().__init__(
            f"finite-difference oracle did not converge "
            f"(best estimate {best!r}, achieved rtol {achieved_rtol:.3e})")
