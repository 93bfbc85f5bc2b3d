"""spinwig: SU(2) Wigner-kernel spectra and absolutely Wigner-bounded spin states."""

__version__ = "0.1.0"
