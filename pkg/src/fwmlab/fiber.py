"""Fiber dispersion model and four-wave-mixing wavelength/phase arithmetic.

The dispersion parameter is linear in wavelength, ``D(lambda) = S (lambda - lambda_zdw)``,
which is the customary description of a highly nonlinear fiber near its zero
dispersion wavelength. The propagation constant used for phase-mismatch
calculations is obtained by integrating ``beta2(omega)`` twice from the ZDW
reference; the two integration constants cancel in every energy-conserving
four-wave combination, so they are set to zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import SPEED_OF_LIGHT as C
from .errors import DomainError

_LAMBDA_MIN = 1.4e-6
_LAMBDA_MAX = 1.7e-6

TWO_PI_C = 2.0 * np.pi * C


@dataclass(frozen=True)
class FiberSpec:
    """Fiber parameters in the customary mixed units of the trade.

    Attributes
    ----------
    length : float
        Fiber length in m.
    zdw : float
        Zero dispersion wavelength in m.
    dispersion_slope : float
        Dispersion slope in ps/(km nm^2).
    gamma : float
        Nonlinear coefficient in 1/(W km).
    loss : float
        Attenuation in dB/km (0 by default; the value is not published for
        the reference fiber).
    raman_fraction : float
        Fraction of the nonlinearity with delayed (Raman) response.
    """

    length: float = 450.0
    zdw: float = 1545e-9
    dispersion_slope: float = 0.018
    gamma: float = 10.0
    loss: float = 0.0
    raman_fraction: float = 0.245

    def __post_init__(self):
        if self.length <= 0:
            raise DomainError("fiber length must be positive")
        if self.gamma < 0:
            raise DomainError("gamma must be >= 0")
        if not 0.0 <= self.raman_fraction < 1.0:
            raise DomainError("raman_fraction must be in [0, 1)")
        if self.loss < 0:
            raise DomainError("loss must be >= 0")
        if not _LAMBDA_MIN < self.zdw < _LAMBDA_MAX:
            raise DomainError("zdw outside the supported band")

    @property
    def slope_si(self) -> float:
        """Dispersion slope in s/m^3."""
        return self.dispersion_slope * 1e3

    @property
    def gamma_si(self) -> float:
        """Nonlinear coefficient in 1/(W m)."""
        return self.gamma * 1e-3

    @property
    def alpha_si(self) -> float:
        """Power attenuation coefficient in 1/m."""
        return self.loss * (np.log(10.0) / 10.0) / 1e3

    @property
    def effective_length(self) -> float:
        """(1 - exp(-alpha L)) / alpha, reducing to L for a lossless fiber."""
        a = self.alpha_si
        if a == 0.0:
            return self.length
        return -float(np.expm1(-a * self.length)) / a


def _check_wavelength(wavelength: float) -> None:
    if not _LAMBDA_MIN < wavelength < _LAMBDA_MAX:
        raise DomainError(
            f"wavelength {wavelength:.4e} m outside validity window "
            f"({_LAMBDA_MIN:.2e}, {_LAMBDA_MAX:.2e})"
        )


def dispersion_at(wavelength: float, fiber: FiberSpec) -> tuple[float, float]:
    """Dispersion parameter and GVD at a wavelength.

    Returns
    -------
    (D, beta2) : tuple of float
        D in s/m^2 and beta2 in s^2/m. ``beta2 = -lambda^2 D / (2 pi c)``.
    """
    _check_wavelength(wavelength)
    d = fiber.slope_si * (wavelength - fiber.zdw)
    beta2 = -(wavelength**2) * d / TWO_PI_C
    return d, beta2


def beta2_beta3_at(wavelength: float, fiber: FiberSpec) -> tuple[float, float]:
    """GVD and its frequency derivative at a wavelength (s^2/m, s^3/m)."""
    _check_wavelength(wavelength)
    s = fiber.slope_si
    w = TWO_PI_C / wavelength
    beta2 = -s * TWO_PI_C**2 / w**3 + s * fiber.zdw * TWO_PI_C / w**2
    beta3 = 3.0 * s * TWO_PI_C**2 / w**4 - 2.0 * s * fiber.zdw * TWO_PI_C / w**3
    return beta2, beta3


def beta_curvature(omega, fiber: FiberSpec):
    """Twice-integrated GVD from the ZDW reference (the curvature part of beta).

    ``beta_curvature'' = beta2(omega)`` with value and slope zero at the ZDW
    frequency; linear terms are irrelevant for FWM phase mismatch.
    Accepts scalars or arrays of angular frequency (rad/s).
    """
    s = fiber.slope_si
    w0 = TWO_PI_C / fiber.zdw
    w = np.asarray(omega, dtype=float)
    x = (w - w0) / w0
    t1 = 0.5 * s * TWO_PI_C**2 * ((1.0 / w0 - 1.0 / w) - (w - w0) / w0**2)
    t2 = s * fiber.zdw * TWO_PI_C * (x - np.log1p(x))
    out = t1 + t2
    return float(out) if np.isscalar(omega) else out


def _frequency(wavelength: float) -> float:
    if wavelength <= 0:
        raise DomainError("wavelength must be positive")
    return C / wavelength


def bs_idler_wavelength(lambda_s: float, lambda_p1: float, lambda_p2: float) -> float:
    """Idler wavelength of the frequency-exchange process.

    The idler frequency is the signal frequency plus the difference of the
    two pump frequencies: ``nu_i = nu_s + nu_p1 - nu_p2``.
    """
    nu_i = _frequency(lambda_s) + _frequency(lambda_p1) - _frequency(lambda_p2)
    if nu_i <= 0:
        raise DomainError("idler frequency is not positive")
    return C / nu_i


def dfwm_idler_wavelength(lambda_s: float, lambda_p: float) -> float:
    """Idler wavelength of single-pump degenerate FWM, ``nu_i = 2 nu_p - nu_s``."""
    nu_i = 2.0 * _frequency(lambda_p) - _frequency(lambda_s)
    if nu_i <= 0:
        raise DomainError("idler frequency is not positive")
    return C / nu_i


def delta_beta_bs(lambda_s: float, lambda_p1: float, lambda_p2: float,
                  fiber: FiberSpec) -> float:
    """Linear phase mismatch of the frequency-exchange quartet, 1/m.

    ``delta_beta = beta(w_i) + beta(w_p2) - beta(w_s) - beta(w_p1)`` using the
    curvature part of beta; it is antisymmetric under exchanging the roles of
    (signal, idler) together with (pump1, pump2).
    """
    lam_i = bs_idler_wavelength(lambda_s, lambda_p1, lambda_p2)
    for lam in (lambda_s, lambda_p1, lambda_p2, lam_i):
        _check_wavelength(lam)
    w = [2.0 * np.pi * _frequency(lam) for lam in (lam_i, lambda_p2, lambda_s, lambda_p1)]
    b = [beta_curvature(wi, fiber) for wi in w]
    return b[0] + b[1] - b[2] - b[3]


def delta_beta_dfwm(lambda_s: float, lambda_p: float, fiber: FiberSpec) -> float:
    """Linear phase mismatch of degenerate FWM, ``beta_i + beta_s - 2 beta_p``."""
    lam_i = dfwm_idler_wavelength(lambda_s, lambda_p)
    for lam in (lambda_s, lambda_p, lam_i):
        _check_wavelength(lam)
    b_i = beta_curvature(2.0 * np.pi * _frequency(lam_i), fiber)
    b_s = beta_curvature(2.0 * np.pi * _frequency(lambda_s), fiber)
    b_p = beta_curvature(2.0 * np.pi * _frequency(lambda_p), fiber)
    return b_i + b_s - 2.0 * b_p
