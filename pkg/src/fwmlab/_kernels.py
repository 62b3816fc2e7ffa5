"""Hot inner-loop kernels for the split-step integrator.

numba is used when importable; the numpy fallbacks are mathematically
identical. Each kernel applies the instantaneous Kerr phase in place and
reports whether every sample stayed finite.
"""

from __future__ import annotations

import numpy as np

try:
    import numba

    @numba.njit(cache=True, fastmath=True)
    def kerr_phase_two(ax, ay, coef):
        ok = True
        for i in range(ax.size):
            inten = (ax[i].real * ax[i].real + ax[i].imag * ax[i].imag
                     + ay[i].real * ay[i].real + ay[i].imag * ay[i].imag)
            ph = coef * inten
            if not np.isfinite(ph):
                ok = False
            m = complex(np.cos(ph), -np.sin(ph))
            ax[i] = ax[i] * m
            ay[i] = ay[i] * m
        return ok

    @numba.njit(cache=True, fastmath=True)
    def kerr_phase_one(ax, coef):
        ok = True
        for i in range(ax.size):
            inten = ax[i].real * ax[i].real + ax[i].imag * ax[i].imag
            ph = coef * inten
            if not np.isfinite(ph):
                ok = False
            ax[i] = ax[i] * np.complex128(complex(np.cos(ph), -np.sin(ph)))
        return ok

    HAVE_NUMBA = True

except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def kerr_phase_two(ax, ay, coef):
        inten = ax.real**2 + ax.imag**2 + ay.real**2 + ay.imag**2
        ph = coef * inten
        m = np.exp(-1j * ph)
        ax *= m
        ay *= m
        return bool(np.isfinite(ph).all())

    def kerr_phase_one(ax, coef):
        inten = ax.real**2 + ax.imag**2
        ph = coef * inten
        ax *= np.exp(-1j * ph)
        return bool(np.isfinite(ph).all())
