"""Inner and outer Hilbert-Schmidt balls of the AWB polytope and the critical cutoff."""

import logging
import math
from dataclasses import dataclass, field
from itertools import permutations
from typing import Any

from spinwig.core.spin import HalfInteger
from spinwig.core.states import Spectrum
from spinwig.errors import DimensionMismatchError
from spinwig.kernel.spectrum import KernelSpectrum, kernel_eigenvalue, kernel_spectrum
from spinwig.polytope.membership import check_w_min
from spinwig.polytope.vertices import MAX_ENUMERATION_DIMENSION, enumerated_outer_radius
from spinwig.tolerances import get_tolerances

logger = logging.getLogger(__name__)


@dataclass
class BallReport:
    """Radii of the largest inscribed and smallest circumscribed balls around the MMS.

    ``r_out`` is the radius of the n = 1 vertex, conjectured to be the farthest
    vertex; ``r_out_enumerated`` is the maximum over enumerated vertices when the
    dimension allows it. ``r_in`` only describes physical states while
    ``w_min >= critical_w_min``.
    """

    j: HalfInteger
    w_min: float
    r_in: float
    r_out: float
    lambda_star: Spectrum
    critical_w_min: float
    r_in_valid: bool
    r_out_conjectured: bool = True
    r_out_enumerated: float | None = field(default=None)

    def to_dict(self) -> dict[str, Any]:
        return {
            "twice_j": self.j.twice_value,
            "j": str(self.j),
            "w_min": self.w_min,
            "r_in": self.r_in,
            "r_out": self.r_out,
            "r_out_conjectured": self.r_out_conjectured,
            "r_out_enumerated": self.r_out_enumerated,
            "lambda_star": list(self.lambda_star.values),
            "critical_w_min": self.critical_w_min,
            "r_in_valid": self.r_in_valid,
        }


def inner_radius(j: HalfInteger, w_min: float) -> float:
    """r_in = (1 - (2j+1) W) / (2 sqrt(j (2j+1) (j+1)))."""
    dim = j.dimension()
    jv = j.value
    return (1.0 - dim * w_min) / (2.0 * math.sqrt(jv * dim * (jv + 1.0)))


def outer_radius(j: HalfInteger, w_min: float, delta: KernelSpectrum | None = None) -> float:
    """r_out = sqrt(2j/(2j+1)) |((2j+1) W - 1) / ((2j+1) Delta_{j,j-1} - 1)|."""
    tj = j.twice_value
    second = delta.value(tj - 2) if delta is not None else kernel_eigenvalue(j, tj - 2)
    dim = j.dimension()
    return math.sqrt(tj / dim) * abs((dim * w_min - 1.0) / (dim * second - 1.0))


def critical_w_min(j: HalfInteger, delta: KernelSpectrum | None = None) -> float:
    """W_min below which the inscribed ball leaves the probability simplex."""
    if delta is None:
        delta = kernel_spectrum(j, 0.0)
    top = delta.values[0]
    dim = j.dimension()
    return (top - dim) / (top * dim - 1.0)


def lambda_star(j: HalfInteger, w_min: float, delta: KernelSpectrum | None = None) -> Spectrum:
    """Point where the polytope touches its inscribed ball, in Dicke order.

    lambda* = [((2j+1) - W) 1 - (1 - (2j+1) W) Delta] / (4j(j+1)), so that
    lambda* . Delta = W.
    """
    if delta is None:
        delta = kernel_spectrum(j, 0.0)
    dim = j.dimension()
    denominator = dim * dim - 1.0
    values = tuple(((dim - w_min) - (1.0 - dim * w_min) * d) / denominator for d in delta.values)
    return Spectrum(j, values)


def ball_report(j: HalfInteger, w_min: float) -> BallReport:
    delta = kernel_spectrum(j, 0.0)
    if j.twice_value < 1:
        raise DimensionMismatchError("Balls are defined for 2j >= 1")
    check_w_min(j, w_min, delta)
    cutoff = critical_w_min(j, delta)
    valid = w_min >= cutoff - get_tolerances().structural
    if not valid:
        logger.warning(
            "w_min=%g is below the critical cutoff %.6g for j=%s; "
            "the inner ball leaves the simplex",
            w_min,
            cutoff,
            j,
        )
    enumerated = (
        enumerated_outer_radius(j, w_min) if j.dimension() <= MAX_ENUMERATION_DIMENSION else None
    )
    return BallReport(
        j=j,
        w_min=w_min,
        r_in=inner_radius(j, w_min),
        r_out=outer_radius(j, w_min, delta),
        lambda_star=lambda_star(j, w_min, delta),
        critical_w_min=cutoff,
        r_in_valid=valid,
        r_out_enumerated=enumerated,
    )


def tangent_points(j: HalfInteger, w_min: float) -> list[Spectrum]:
    """All distinct permutations of lambda*, where the inscribed ball touches the polytope."""
    if j.dimension() > MAX_ENUMERATION_DIMENSION:
        raise DimensionMismatchError(
            f"Tangent points are enumerated for 2j+1 <= {MAX_ENUMERATION_DIMENSION}, "
            f"got {j.dimension()}"
        )
    check_w_min(j, w_min)
    star = lambda_star(j, w_min)
    decimals = get_tolerances().dedup_decimals
    seen: set[tuple[float, ...]] = set()
    points = []
    for values in permutations(star.values):
        key = tuple(round(v, decimals) + 0.0 for v in values)
        if key not in seen:
            seen.add(key)
            points.append(Spectrum(j, values))
    return points
