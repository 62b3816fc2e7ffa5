"""Physical constants (SI, CODATA via scipy)."""

from scipy.constants import c as SPEED_OF_LIGHT          # 299792458.0 m/s, exact
from scipy.constants import h as PLANCK                  # J s
from scipy.constants import hbar as HBAR                 # J s
from scipy.constants import k as BOLTZMANN               # J/K

__all__ = ["SPEED_OF_LIGHT", "PLANCK", "HBAR", "BOLTZMANN"]
