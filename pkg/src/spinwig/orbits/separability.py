"""Symmetric absolute separability (SAS) formulas used for comparison with the AWB polytopes."""

import math
from fractions import Fraction

from spinwig.core.spin import HalfInteger, sqrt_fraction
from spinwig.core.states import Spectrum
from spinwig.errors import DimensionMismatchError

# Exact radii of the largest SAS ball around the MMS, keyed by 2j.
KNOWN_SAS_RADII = {
    2: 1.0 / (2.0 * math.sqrt(6.0)),
    3: 1.0 / (2.0 * math.sqrt(19.0)),
}


def sas_max_negativity_spin1(spectrum: Spectrum) -> float:
    """Largest partial-transpose negativity over the unitary orbit of a spin-1 state.

    max(0, sqrt(l0^2 + (l1 - l2)^2) - l1 - l2) with l0 >= l1 >= l2; the input is
    sorted internally.
    """
    if spectrum.j.twice_value != 2:
        raise DimensionMismatchError(
            f"The closed-form negativity is for j=1 only, got j={spectrum.j}"
        )
    l0, l1, l2 = spectrum.descending().values
    return max(0.0, math.hypot(l0, l1 - l2) - l1 - l2)


def sas_ball_lower_bound(j: HalfInteger) -> float:
    """r = [(4j+1) binom(4j, 2j) - (j+1)]^(-1/2) / sqrt(4j+2), with an exact binomial."""
    tj = j.twice_value
    if tj < 1:
        raise DimensionMismatchError("The SAS ball bound needs j >= 1/2")
    inner = (2 * tj + 1) * math.comb(2 * tj, tj) - Fraction(tj + 2, 2)
    return sqrt_fraction(1 / (inner * (2 * tj + 2)))


def known_sas_inner_radius(j: HalfInteger) -> float | None:
    """Exact SAS inner-ball radius where it is known in closed form (j = 1, 3/2), else None."""
    return KNOWN_SAS_RADII.get(j.twice_value)
