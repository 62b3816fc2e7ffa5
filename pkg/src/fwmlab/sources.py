"""Input field construction: monochromatic carriers and broadband
frequency-shifted-feedback pump realizations with random spectral phase.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import JonesVector, JONES_X, PolarizedField, TimeFrequencyGrid
from .errors import DomainError

CW = "cw"
IFSFL = "ifsfl"

GAUSSIAN = "gaussian"
FLATTOP = "flattop"

_FWHM_TO_SIGMA = 1.0 / (2.0 * np.sqrt(2.0 * np.log(2.0)))


@dataclass(frozen=True)
class SourceSpec:
    """One optical source.

    ``power`` is the average power in W, ``wavelength`` the absolute carrier
    wavelength in m, ``bandwidth`` the FWHM in Hz (0 for an ideal
    single-frequency laser). ``seed`` selects the random spectral-phase
    realization of a broadband source; ``shape`` is its power spectral shape.
    """

    kind: str
    power: float
    wavelength: float
    bandwidth: float = 0.0
    jones: JonesVector = JONES_X
    seed: int = 0
    shape: str = GAUSSIAN

    def __post_init__(self):
        if self.kind not in (CW, IFSFL):
            raise DomainError(f"unknown source kind {self.kind!r}")
        if self.power < 0:
            raise DomainError("power must be >= 0")
        if self.bandwidth < 0:
            raise DomainError("bandwidth must be >= 0")
        if self.shape not in (GAUSSIAN, FLATTOP):
            raise DomainError(f"unknown spectral shape {self.shape!r}")


def derive_seed(base_seed: int, run_index: int, role: int) -> int:
    """Deterministic per-run, per-source seed.

    Mixes (base_seed, role, run_index) through a SeedSequence so distinct
    sources never collide across runs, unlike a plain XOR.
    """
    ss = np.random.SeedSequence((int(base_seed), int(role), int(run_index)))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def make_cw(spec: SourceSpec, grid: TimeFrequencyGrid) -> PolarizedField:
    """Monochromatic carrier with |a|^2 equal to the source power.

    The carrier is snapped to the nearest FFT bin (at most df/2 away) so the
    unwindowed periodogram shows a single line with no leakage skirt.
    """
    offset = grid.offset_of_wavelength(spec.wavelength)
    if abs(offset) >= grid.half_span:
        raise DomainError(
            f"carrier offset {offset:.3e} Hz outside grid half-span "
            f"{grid.half_span:.3e} Hz"
        )
    k = grid.bin_of_offset(offset)
    f_bin = grid.frequency_offsets[k]
    tone = np.sqrt(spec.power) * np.exp(2j * np.pi * f_bin * grid.times)
    return PolarizedField(grid, tone * spec.jones.cx, tone * spec.jones.cy)


def make_ifsfl(spec: SourceSpec, grid: TimeFrequencyGrid) -> PolarizedField:
    """One random realization of a broadband CW pump.

    Spectral bins carry independent circular complex Gaussian amplitudes under
    a Gaussian (or flat-top) power profile of the requested FWHM, so the
    realization-averaged power equals ``spec.power`` and every seed is
    reproducible bit for bit.
    """
    if spec.bandwidth <= 0:
        raise DomainError("IFSFL source needs bandwidth > 0")
    center = grid.offset_of_wavelength(spec.wavelength)
    if abs(center) + 3.0 * spec.bandwidth > grid.half_span:
        raise DomainError(
            "carrier plus 3x FWHM does not fit inside the grid half-span"
        )
    f = grid.frequency_offsets
    if spec.shape == GAUSSIAN:
        sigma = spec.bandwidth * _FWHM_TO_SIGMA
        weights = np.exp(-0.5 * ((f - center) / sigma) ** 2)
        weights[weights < 1e-14] = 0.0
    else:
        weights = (np.abs(f - center) <= 0.5 * spec.bandwidth).astype(float)
    total = weights.sum()
    if total <= 0:
        raise DomainError("spectral shape vanished on this grid")
    n = grid.n_points
    scale = np.sqrt(weights * (n**2 * spec.power / total))
    rng = np.random.default_rng(spec.seed)
    g = rng.standard_normal(2 * n)
    amps = scale * (g[:n] + 1j * g[n:]) / np.sqrt(2.0)
    envelope = np.fft.ifft(amps)
    return PolarizedField(grid, envelope * spec.jones.cx, envelope * spec.jones.cy)


def make_source(spec: SourceSpec, grid: TimeFrequencyGrid) -> PolarizedField:
    if spec.kind == CW or spec.bandwidth == 0.0:
        return make_cw(spec, grid)
    return make_ifsfl(spec, grid)


def superpose(fields) -> PolarizedField:
    """Lossless element-wise sum of fields sharing one grid."""
    fields = list(fields)
    if not fields:
        raise DomainError("superpose needs at least one field")
    grid = fields[0].grid
    for fld in fields[1:]:
        if fld.grid != grid:
            raise DomainError("superpose requires fields on the same grid")
    ax = np.sum([fld.ax for fld in fields], axis=0)
    ay = np.sum([fld.ay for fld in fields], axis=0)
    return PolarizedField(grid, ax, ay)
