"""Absolute Wigner-boundedness: the orbit minimum and the membership test."""

import math
from dataclasses import dataclass
from typing import Any

from spinwig.core.spin import HalfInteger
from spinwig.core.states import DensityMatrix, Spectrum
from spinwig.errors import DimensionMismatchError, OutOfRangeError
from spinwig.kernel.spectrum import KernelSpectrum, kernel_spectrum
from spinwig.tolerances import get_tolerances


@dataclass
class MembershipReport:
    orbit_min: float
    w_min: float
    margin: float
    is_awb: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "orbit_min": self.orbit_min,
            "w_min": self.w_min,
            "margin": self.margin,
            "is_awb": self.is_awb,
        }


def _check_dimensions(spectrum: Spectrum, delta: KernelSpectrum) -> None:
    if spectrum.dimension != delta.dimension:
        raise DimensionMismatchError(
            f"Spectrum has dimension {spectrum.dimension}, kernel has {delta.dimension}"
        )


def orbit_min(spectrum: Spectrum, delta: KernelSpectrum) -> float:
    """Minimum of W over the whole unitary orbit of the state: sum_p lambda_p(desc) Delta_p(asc)."""
    _check_dimensions(spectrum, delta)
    return math.fsum(lam * d for lam, d in zip(spectrum.descending().values, delta.ascending))


def admissible_range(j: HalfInteger, s: float = 0.0) -> tuple[float, float]:
    """Interval [min Delta, 1/(2j+1)] of meaningful lower bounds W_min."""
    delta = kernel_spectrum(j, s)
    return delta.minimum, 1.0 / j.dimension()


def check_w_min(j: HalfInteger, w_min: float, delta: KernelSpectrum | None = None) -> None:
    """Raise OutOfRangeError unless min Delta <= w_min <= 1/(2j+1)."""
    lower = (delta or kernel_spectrum(j, 0.0)).minimum
    upper = 1.0 / j.dimension()
    slack = get_tolerances().structural
    if math.isnan(w_min) or w_min < lower - slack or w_min > upper + slack:
        raise OutOfRangeError(
            f"w_min={w_min} outside the admissible interval "
            f"[{lower:.12g}, {upper:.12g}] for j={j}; "
            "below min Delta every state qualifies, above 1/(2j+1) none does"
        )


def is_awb(spectrum: Spectrum, w_min: float, delta: KernelSpectrum) -> MembershipReport:
    """Decide whether every state with this spectrum has W >= w_min everywhere.

    Boundary states (margin within the membership tolerance of zero) count as members.
    """
    _check_dimensions(spectrum, delta)
    check_w_min(spectrum.j, w_min, delta)
    value = orbit_min(spectrum, delta)
    margin = value - w_min
    return MembershipReport(
        orbit_min=value,
        w_min=w_min,
        margin=margin,
        is_awb=margin >= -get_tolerances().membership,
    )


def orbit_minimizer(spectrum: Spectrum, delta: KernelSpectrum) -> DensityMatrix:
    """Diagonal state of the orbit whose Wigner function attains orbit_min at the north pole.

    The largest eigenvalue sits on the most negative kernel eigenvalue, the second
    largest on the next one, and so on.
    """
    _check_dimensions(spectrum, delta)
    populations = [0.0] * spectrum.dimension
    for index, lam in zip(delta.ascending_order, spectrum.descending().values):
        populations[index] = lam
    return DensityMatrix.diagonal(Spectrum(spectrum.j, tuple(populations)))


def spin_half_threshold(w_min: float = 0.0) -> float:
    """Largest admissible eigenvalue of a spin-1/2 state: 1/2 + (1 - 2 w_min)/(2 sqrt 3).

    At w_min = 0 this is the Bloch-length bound |n| <= 1/sqrt(3).
    """
    check_w_min(HalfInteger(1), w_min)
    return 0.5 + (1.0 - 2.0 * w_min) / (2.0 * math.sqrt(3.0))
