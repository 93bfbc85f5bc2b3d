"""Spin arithmetic, spectra, density matrices and Hilbert-Schmidt geometry."""

from spinwig.core.spin import HalfInteger, PhasePoint
from spinwig.core.states import (
    DensityMatrix,
    Spectrum,
    bloch_length,
    hs_distance,
    purity,
    spectrum_of,
)

__all__ = [
    "DensityMatrix",
    "HalfInteger",
    "PhasePoint",
    "Spectrum",
    "bloch_length",
    "hs_distance",
    "purity",
    "spectrum_of",
]
