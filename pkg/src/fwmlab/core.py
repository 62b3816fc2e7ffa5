"""Shared simulation primitives: time/frequency grid, polarization states,
and the two-component complex field envelope all other modules operate on.

Conventions
-----------
* Frequencies are stored as offsets from the grid reference ``nu0 = c / lambda_ref``.
  A spectral component at offset ``f`` appears in the envelope as ``exp(+2j*pi*f*t)``,
  so numpy FFT bins map directly onto physical frequency offsets.
* Envelope amplitudes are in sqrt(W); ``|ax|^2 + |ay|^2`` is instantaneous power.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import numpy as np

from .constants import SPEED_OF_LIGHT as C
from .errors import DomainError

MIN_HALF_SPAN_HZ = 4.0e12  # all telecom-band carriers plus mixing products must fit


@dataclass(frozen=True)
class TimeFrequencyGrid:
    """Uniform time grid and its FFT frequency grid.

    Parameters
    ----------
    n_points : int
        Number of samples, a power of two.
    time_window : float
        Total window in seconds; ``dt = time_window / n_points``.
    reference_wavelength : float
        Wavelength (m) of the grid center frequency.
    """

    n_points: int = 2**17
    time_window: float = 16e-9
    reference_wavelength: float = 1545e-9

    def __post_init__(self):
        n = self.n_points
        if n <= 0 or (n & (n - 1)) != 0:
            raise DomainError(f"n_points must be a power of two, got {n}")
        if self.time_window <= 0:
            raise DomainError("time_window must be positive")
        if not 1.0e-6 < self.reference_wavelength < 2.0e-6:
            raise DomainError("reference_wavelength outside the supported band")
        if self.half_span < MIN_HALF_SPAN_HZ * (1 - 1e-12):
            raise DomainError(
                f"grid half-span {self.half_span:.3e} Hz is below the required "
                f"{MIN_HALF_SPAN_HZ:.0e} Hz; increase n_points or shrink time_window"
            )

    @property
    def dt(self) -> float:
        return self.time_window / self.n_points

    @property
    def df(self) -> float:
        return 1.0 / self.time_window

    @property
    def reference_frequency(self) -> float:
        return C / self.reference_wavelength

    @property
    def half_span(self) -> float:
        """Nyquist half-span in Hz."""
        return 0.5 * self.n_points * self.df

    @cached_property
    def times(self) -> np.ndarray:
        t = np.arange(self.n_points) * self.dt
        t.flags.writeable = False
        return t

    @cached_property
    def frequency_offsets(self) -> np.ndarray:
        """Frequency offsets from the reference, in FFT bin order (Hz)."""
        f = np.fft.fftfreq(self.n_points, d=self.dt)
        f.flags.writeable = False
        return f

    def offset_of_wavelength(self, wavelength: float) -> float:
        """Frequency offset (Hz) of an absolute wavelength (m)."""
        return C / wavelength - self.reference_frequency

    def wavelength_of_offset(self, offset: float) -> float:
        nu = self.reference_frequency + offset
        if nu <= 0:
            raise DomainError("frequency offset maps below zero absolute frequency")
        return C / nu

    def bin_of_offset(self, offset: float) -> int:
        """Index of the FFT bin nearest to a frequency offset."""
        if abs(offset) > self.half_span:
            raise DomainError(
                f"offset {offset:.3e} Hz outside grid half-span {self.half_span:.3e} Hz"
            )
        return int(round(offset / self.df)) % self.n_points


_JONES_TOL = 1e-12


@dataclass(frozen=True)
class JonesVector:
    """Normalized two-component polarization state."""

    cx: complex
    cy: complex

    def __post_init__(self):
        norm = abs(self.cx) ** 2 + abs(self.cy) ** 2
        if abs(norm - 1.0) > _JONES_TOL:
            raise DomainError(f"Jones vector not normalized: |c|^2 = {norm!r}")

    def inner(self, other: "JonesVector") -> complex:
        """Hermitian inner product <self|other>."""
        return np.conj(self.cx) * other.cx + np.conj(self.cy) * other.cy

    def is_parallel_to(self, other: "JonesVector", tol: float = 1e-9) -> bool:
        return abs(abs(self.inner(other)) - 1.0) <= tol

    def is_orthogonal_to(self, other: "JonesVector", tol: float = 1e-9) -> bool:
        return abs(self.inner(other)) <= tol


JONES_X = JonesVector(1.0 + 0.0j, 0.0j)
JONES_Y = JonesVector(0.0j, 1.0 + 0.0j)


class PolarizationCase(Enum):
    """Input polarization arrangements for (pump1, pump2, signal).

    A: all three co-polarized.
    B: pumps cross-polarized, signal co-polarized with pump2.
    C: pumps co-polarized, signal orthogonal to both.
    D: pumps cross-polarized, signal co-polarized with pump1.
    """

    A = "A"
    B = "B"
    C = "C"
    D = "D"

    @property
    def jones_triple(self) -> tuple[JonesVector, JonesVector, JonesVector]:
        return _CASE_JONES[self]

    @property
    def pump1_jones(self) -> JonesVector:
        return self.jones_triple[0]

    @property
    def pump2_jones(self) -> JonesVector:
        return self.jones_triple[1]

    @property
    def signal_jones(self) -> JonesVector:
        return self.jones_triple[2]

    @property
    def idler_jones(self) -> JonesVector:
        """Polarization of the frequency-exchange idler (signal axis when inactive)."""
        return _CASE_IDLER_JONES[self]


_CASE_JONES = {
    PolarizationCase.A: (JONES_X, JONES_X, JONES_X),
    PolarizationCase.B: (JONES_X, JONES_Y, JONES_Y),
    PolarizationCase.C: (JONES_X, JONES_X, JONES_Y),
    PolarizationCase.D: (JONES_X, JONES_Y, JONES_X),
}

# The generated idler is co-polarized with pump1 in B and with the signal otherwise.
_CASE_IDLER_JONES = {
    PolarizationCase.A: JONES_X,
    PolarizationCase.B: JONES_X,
    PolarizationCase.C: JONES_Y,
    PolarizationCase.D: JONES_X,
}


@dataclass(frozen=True)
class PolarizedField:
    """Two complex envelopes on a shared grid, units sqrt(W).

    Arrays are copied on construction and frozen; operations return new fields.
    """

    grid: TimeFrequencyGrid
    ax: np.ndarray = field(repr=False)
    ay: np.ndarray = field(repr=False)

    def __post_init__(self):
        for name in ("ax", "ay"):
            arr = np.array(getattr(self, name), dtype=np.complex128)
            if arr.shape != (self.grid.n_points,):
                raise DomainError(
                    f"{name} has shape {arr.shape}, expected ({self.grid.n_points},)"
                )
            if not np.isfinite(arr).all():
                raise DomainError(f"{name} contains non-finite samples")
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    @property
    def average_power(self) -> float:
        """Mean of the instantaneous power envelope, in W."""
        return float(np.mean(self.power_envelope()))

    def power_envelope(self) -> np.ndarray:
        return np.abs(self.ax) ** 2 + np.abs(self.ay) ** 2

    def rotated(self, angle: float) -> "PolarizedField":
        """Apply a global Jones rotation by `angle` radians."""
        c, s = np.cos(angle), np.sin(angle)
        return PolarizedField(self.grid, c * self.ax - s * self.ay,
                              s * self.ax + c * self.ay)

    @classmethod
    def zero(cls, grid: TimeFrequencyGrid) -> "PolarizedField":
        z = np.zeros(grid.n_points, dtype=np.complex128)
        return cls(grid, z, z)
