"""Large-spin scaling of the polytope radii and the SAS ball bound."""

import math
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from spinwig.core.spin import HalfInteger
from spinwig.orbits.separability import sas_ball_lower_bound
from spinwig.polytope.balls import inner_radius, outer_radius


@dataclass
class PowerLawFit:
    """y ~ prefactor * x^exponent; ``pinned`` marks an exponent fixed by the caller."""

    prefactor: float
    exponent: float
    rms_log_residual: float
    pinned: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "prefactor": self.prefactor,
            "exponent": self.exponent,
            "rms_log_residual": self.rms_log_residual,
            "pinned": self.pinned,
        }


def fit_power_law(
    xs: Sequence[float], ys: Sequence[float], exponent: float | None = None
) -> PowerLawFit:
    """Least-squares fit of log y = log a + b log x; with ``exponent`` given only a is fitted."""
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.shape != y.shape or x.size < 2:
        raise ValueError("Need at least two (x, y) pairs of equal length")
    if np.any(x <= 0) or np.any(y <= 0):
        raise ValueError("Power-law fits need positive data")
    lx, ly = np.log(x), np.log(y)
    if exponent is None:
        slope, intercept = np.polyfit(lx, ly, 1)
        pinned = False
    else:
        slope = exponent
        intercept = float(np.mean(ly - slope * lx))
        pinned = True
    residual = ly - (intercept + slope * lx)
    return PowerLawFit(
        prefactor=math.exp(intercept),
        exponent=float(slope),
        rms_log_residual=float(np.sqrt(np.mean(residual**2))),
        pinned=pinned,
    )


@dataclass
class ScalingReport:
    j_values: list[float]
    r_in: list[float]
    r_out: list[float]
    sas_bound: list[float]
    r_in_fit: PowerLawFit
    r_out_fit: PowerLawFit
    r_in_pinned: PowerLawFit
    r_out_pinned: PowerLawFit
    sas_decay_rate: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "j": self.j_values,
            "r_in": self.r_in,
            "r_out": self.r_out,
            "sas_bound": self.sas_bound,
            "r_in_fit": self.r_in_fit.to_dict(),
            "r_out_fit": self.r_out_fit.to_dict(),
            "r_in_pinned": self.r_in_pinned.to_dict(),
            "r_out_pinned": self.r_out_pinned.to_dict(),
            "sas_decay_rate": self.sas_decay_rate,
        }


def radius_scaling(twice_js: Sequence[int], w_min: float = 0.0) -> ScalingReport:
    """Radii over a range of spins with free and pinned (j^-3/2, j^-1) power-law fits.

    The SAS bound decays exponentially, so it gets a log-linear rate in j instead.
    """
    spins = [HalfInteger(tj) for tj in twice_js]
    if len(spins) < 2 or any(j.twice_value < 1 for j in spins):
        raise ValueError("Scaling needs at least two spins with 2j >= 1")
    js = [j.value for j in spins]
    r_in = [inner_radius(j, w_min) for j in spins]
    r_out = [outer_radius(j, w_min) for j in spins]
    sas = [sas_ball_lower_bound(j) for j in spins]
    rate, _ = np.polyfit(js, np.log(sas), 1)
    return ScalingReport(
        j_values=js,
        r_in=r_in,
        r_out=r_out,
        sas_bound=sas,
        r_in_fit=fit_power_law(js, r_in),
        r_out_fit=fit_power_law(js, r_out),
        r_in_pinned=fit_power_law(js, r_in, exponent=-1.5),
        r_out_pinned=fit_power_law(js, r_out, exponent=-1.0),
        sas_decay_rate=float(rate),
    )
