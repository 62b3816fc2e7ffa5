"""Anisotropic Raman response of silica fiber: parallel/perpendicular gain
spectra, thermal phonon occupancy, stimulated exchange, and spontaneous
scattering photon-flux budgets.

Model
-----
The delayed nonlinear response is split into an isotropic part built from a
damped-oscillator kernel ``h_osc`` and an anisotropic part built from
low-frequency boson-peak kernels ``h_bos`` plus a small admixture of
``h_osc``:

    isotropic(t)   = w_iso * h_osc(t)
    anisotropic(t) = w_aniso * h_bos_mix(t) + w_mix * h_osc(t)

Each kernel is normalized to unit area. The co- and cross-polarized gain
coefficients follow as

    g_iso(W)  = 2 gamma f_R w_iso Im H_osc(W)
    g_aniso(W)= 2 gamma f_R Im[w_aniso H_bos_mix(W) + w_mix H_osc(W)]
    g_par     = g_iso + g_aniso,      g_perp = g_aniso / 2

with detuning W > 0 on the Stokes (downshifted) side. The anisotropic kernel
uses two boson time constants: the fast one carries the conventional ~3 THz
depolarized peak, the slow one the sub-THz depolarized scattering that keeps
g_perp/g_par near 0.3 for detunings below a few THz. All parameters are
overridable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .constants import BOLTZMANN, HBAR
from .errors import DomainError

PARALLEL = "parallel"
PERPENDICULAR = "perpendicular"


@dataclass(frozen=True)
class RamanParameters:
    """Weights and time constants of the delayed-response model."""

    fraction: float = 0.245            # delayed share of the nonlinearity
    iso_weight: float = 0.74           # oscillator kernel, isotropic channel
    aniso_weight: float = 0.223        # boson kernels, anisotropic channel
    mixed_weight: float = 0.037        # oscillator kernel leaking into anisotropic
    tau_oscillation: float = 12.2e-15  # oscillator period / 2 pi
    tau_damping: float = 32e-15        # oscillator damping time
    tau_boson_fast: float = 80e-15
    tau_boson_slow: float = 500e-15
    boson_slow_fraction: float = 0.139

    def __post_init__(self):
        if not 0.0 <= self.fraction < 1.0:
            raise DomainError("fraction must be in [0, 1)")
        for name in ("tau_oscillation", "tau_damping", "tau_boson_fast",
                     "tau_boson_slow"):
            if getattr(self, name) <= 0:
                raise DomainError(f"{name} must be positive")
        if min(self.iso_weight, self.aniso_weight, self.mixed_weight) < 0:
            raise DomainError("channel weights must be >= 0")
        total = self.iso_weight + self.aniso_weight + self.mixed_weight
        if abs(total - 1.0) > 1e-9:
            raise DomainError(f"channel weights must sum to 1, got {total!r}")
        if not 0.0 <= self.boson_slow_fraction <= 1.0:
            raise DomainError("boson_slow_fraction must be in [0, 1]")


@dataclass(frozen=True)
class RamanResponse:
    """Normalized response kernels with analytic Fourier transforms.

    Transforms use the convention ``H(W) = integral h(t) exp(+i W t) dt`` so
    ``Im H(W) > 0`` on the Stokes side (W > 0) and ``H(0) = 1``.
    """

    params: RamanParameters = RamanParameters()

    @cached_property
    def _osc_freq_sq(self) -> float:
        p = self.params
        return 1.0 / p.tau_oscillation**2 + 1.0 / p.tau_damping**2

    def oscillator_transform(self, omega):
        """Transform of the unit-area damped oscillator kernel."""
        gam = 2.0 / self.params.tau_damping
        w2 = self._osc_freq_sq
        omega = np.asarray(omega, dtype=float)
        return w2 / (w2 - omega**2 - 1j * gam * omega)

    @staticmethod
    def _boson_transform(omega, tau):
        s = 1.0 / tau - 1j * np.asarray(omega, dtype=float)
        return 2.0 / (tau * s) - 1.0 / (tau**2 * s**2)

    def boson_transform(self, omega):
        """Transform of the two-component unit-area boson kernel."""
        p = self.params
        fast = self._boson_transform(omega, p.tau_boson_fast)
        slow = self._boson_transform(omega, p.tau_boson_slow)
        return (1.0 - p.boson_slow_fraction) * fast + p.boson_slow_fraction * slow

    def memory_transform(self, omega):
        """Scalar delayed-response transform used inside the propagation loop."""
        p = self.params
        return ((p.iso_weight + p.mixed_weight) * self.oscillator_transform(omega)
                + p.aniso_weight * self.boson_transform(omega))

    def gain_components(self, omega):
        """Imaginary-part gain shapes (iso, aniso) before the 2*gamma*f_R scale."""
        p = self.params
        im_osc = np.imag(self.oscillator_transform(omega))
        im_bos = np.imag(self.boson_transform(omega))
        iso = p.iso_weight * im_osc
        aniso = p.aniso_weight * im_bos + p.mixed_weight * im_osc
        return iso, aniso

    def sampled_kernels(self, dt: float, n: int):
        """Time-domain kernels on a fine grid, for numerical cross-checks."""
        p = self.params
        t = np.arange(n) * dt
        pre = (p.tau_oscillation**2 + p.tau_damping**2) / (
            p.tau_oscillation * p.tau_damping**2)
        h_osc = pre * np.exp(-t / p.tau_damping) * np.sin(t / p.tau_oscillation)

        def bos(tau):
            return (2.0 * tau - t) / tau**2 * np.exp(-t / tau)

        h_bos = ((1.0 - p.boson_slow_fraction) * bos(p.tau_boson_fast)
                 + p.boson_slow_fraction * bos(p.tau_boson_slow))
        return t, h_osc, h_bos


def build_response(params: RamanParameters | None = None) -> RamanResponse:
    """Validated response object (parameters default to the silica model)."""
    return RamanResponse(params or RamanParameters())


@dataclass(frozen=True)
class RamanGainCurve:
    """Gain coefficients on a detuning grid, scaled by the stated pump power.

    Detuning is the downshift from the pump: positive on the Stokes side.
    With ``pump_power = 1`` the arrays are per-watt gains in 1/(W m);
    otherwise they are net gains in 1/m. ``r_parallel = r_iso + r_aniso`` and
    ``r_perpendicular = r_aniso / 2`` hold pointwise by construction.
    """

    detunings: np.ndarray          # Hz, signed
    r_iso: np.ndarray
    r_aniso: np.ndarray
    r_parallel: np.ndarray
    r_perpendicular: np.ndarray
    pump_power: float


def raman_gain(response: RamanResponse, gamma_si: float, detuning,
               pol: str = PARALLEL, pump_power: float = 1.0):
    """Gain coefficient at a signed detuning (Hz, Stokes positive).

    Odd in detuning: positive values mean gain for the downshifted wave,
    negative mean loss for the upshifted one.
    """
    omega = 2.0 * np.pi * np.asarray(detuning, dtype=float)
    iso, aniso = response.gain_components(omega)
    scale = 2.0 * gamma_si * response.params.fraction * pump_power
    if pol == PARALLEL:
        out = scale * (iso + aniso)
    elif pol == PERPENDICULAR:
        out = scale * aniso / 2.0
    else:
        raise DomainError(f"unknown polarization relation {pol!r}")
    return float(out) if np.isscalar(detuning) else out


def gain_curves(response: RamanResponse, gamma_si: float,
                pump_power: float = 1.0,
                detunings=None) -> RamanGainCurve:
    """Tabulated parallel/perpendicular gain spectra.

    ``gamma_si`` is the nonlinear coefficient in 1/(W m); gains scale
    linearly with it and with ``pump_power``.
    """
    if pump_power < 0:
        raise DomainError("pump_power must be >= 0")
    if detunings is None:
        detunings = np.linspace(-20e12, 20e12, 4001)
    detunings = np.asarray(detunings, dtype=float)
    omega = 2.0 * np.pi * detunings
    iso, aniso = response.gain_components(omega)
    scale = 2.0 * gamma_si * response.params.fraction * pump_power
    r_iso = scale * iso
    r_aniso = scale * aniso
    return RamanGainCurve(
        detunings=detunings,
        r_iso=r_iso,
        r_aniso=r_aniso,
        r_parallel=r_iso + r_aniso,
        r_perpendicular=r_aniso / 2.0,
        pump_power=pump_power,
    )


def thermal_occupancy(omega_detuning: float, temperature: float) -> float:
    """Bose-Einstein phonon occupancy at angular detuning (rad/s)."""
    if omega_detuning <= 0:
        raise DomainError("thermal occupancy needs omega_detuning > 0")
    if temperature <= 0:
        raise DomainError("temperature must be positive")
    x = HBAR * omega_detuning / (BOLTZMANN * temperature)
    return 1.0 / np.expm1(x)


def stimulated_exchange(signal_power: float, pump_power: float, detuning: float,
                        pol: str, l_eff: float, response: RamanResponse,
                        gamma_si: float) -> float:
    """Signal power after stimulated scattering off one pump.

    ``detuning`` is pump frequency minus signal frequency (Hz): positive puts
    the signal on the Stokes side (gain), negative on the anti-Stokes side
    (loss). ``pump_power = 0`` is the identity.
    """
    if signal_power < 0 or pump_power < 0:
        raise DomainError("powers must be >= 0")
    g = raman_gain(response, gamma_si, detuning, pol, pump_power)
    return signal_power * float(np.exp(g * l_eff))


def spontaneous_flux(pump_power: float, l_eff: float, detuning: float,
                     bandwidth: float, pol: str, temperature: float,
                     response: RamanResponse, gamma_si: float) -> float:
    """Spontaneously scattered photon flux (photons/s) into a bandwidth.

    Low-gain linearization, valid while ``gain * L << 1``: the Stokes side
    (detuning > 0, emission below the pump) scales with ``n_th + 1``, the
    anti-Stokes side with ``n_th``.
    """
    if detuning == 0:
        raise DomainError("spontaneous flux undefined at zero detuning")
    if bandwidth <= 0:
        raise DomainError("bandwidth must be positive")
    if pump_power < 0:
        raise DomainError("pump_power must be >= 0")
    omega = 2.0 * np.pi * abs(detuning)
    n_th = thermal_occupancy(omega, temperature)
    occupancy = n_th + 1.0 if detuning > 0 else n_th
    g = raman_gain(response, gamma_si, abs(detuning), pol, pump_power)
    return g * l_eff * bandwidth * occupancy
