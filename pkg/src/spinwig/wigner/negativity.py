"""Wigner negative volume delta(rho) = (integral |W| d mu - 1) / 2, and spin coherent states.

At fixed polar angle W is a real trigonometric polynomial in phi of degree <= 2j,
so the phi integral of |W| is done exactly: locate its zeros as roots of the
associated algebraic polynomial on the unit circle, then sum |F(b) - F(a)| of
the antiderivative over consecutive zeros. The remaining integral over
x = cos(theta) is adaptive Gauss-Kronrod, with breakpoints where the row
minimum of W changes sign (kinks of the integrand).
"""

import logging
import math
import warnings
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np
from scipy.integrate import IntegrationWarning, quad
from scipy.optimize import brentq

from spinwig.core.operators import rotation_operator
from spinwig.core.spin import HalfInteger, PhasePoint
from spinwig.core.states import DensityMatrix
from spinwig.errors import ConvergenceError, DimensionMismatchError, InvalidStateError
from spinwig.wigner.function import azimuthal_coefficients, weighted_multipoles
from spinwig.wigner.grid import SphereGrid

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-10
DEFAULT_MAX_SUBDIVISIONS = 400
# roots this close to the unit circle are treated as zeros of W; extra breakpoints are harmless
_UNIT_CIRCLE_BAND = 1e-4
_TRIM = 1e-13


@dataclass
class NegativeVolume:
    value: float
    achieved_tolerance: float
    evaluations: int
    breakpoints: list[float] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "negative_volume": self.value,
            "achieved_tolerance": self.achieved_tolerance,
            "evaluations": self.evaluations,
            "breakpoints": list(self.breakpoints),
        }


class _AzimuthalExpansion:
    """c_M(x) with W(theta, phi) = sum_M c_M exp(i M phi) and x = cos(theta)."""

    def __init__(self, rho: DensityMatrix) -> None:
        self.rho = rho
        self.lmax = rho.j.twice_value
        self.coefficients = weighted_multipoles(rho, 0.0)

    def at(self, x: float) -> np.ndarray:
        theta = math.acos(min(1.0, max(-1.0, x)))
        return azimuthal_coefficients(self.rho, theta, coefficients=self.coefficients)


def _trimmed(c: np.ndarray, lmax: int) -> tuple[np.ndarray, int]:
    scale = max(float(np.max(np.abs(c))), 1e-300)
    degree = 0
    for m in range(lmax, 0, -1):
        if abs(c[lmax + m]) > _TRIM * scale:
            degree = m
            break
    return c[lmax - degree : lmax + degree + 1], degree


def _unit_circle_angles(coefficients_low_to_high: np.ndarray) -> np.ndarray:
    roots = np.roots(coefficients_low_to_high[::-1])
    on_circle = roots[np.abs(np.abs(roots) - 1.0) < _UNIT_CIRCLE_BAND]
    return np.sort(np.mod(np.angle(on_circle), 2 * np.pi))


def _evaluate(c: np.ndarray, degree: int, phi: np.ndarray) -> np.ndarray:
    orders = np.arange(-degree, degree + 1)
    return np.real(np.exp(1j * np.outer(phi, orders)) @ c)


def _antiderivative(c: np.ndarray, degree: int, phi: float) -> float:
    total = c[degree].real * phi
    for m in range(1, degree + 1):
        # c_{-m} = conj(c_m), so the pair integrates to 2 Re[c_m exp(i m phi) / (i m)]
        total += 2.0 * (c[degree + m] * np.exp(1j * m * phi) / (1j * m)).real
    return total


def abs_azimuthal_integral(c: np.ndarray, lmax: int) -> float:
    """Exact integral of |sum_M c_M exp(i M phi)| over [0, 2 pi)."""
    c, degree = _trimmed(c, lmax)
    if degree == 0:
        return 2 * math.pi * abs(c[0].real)
    angles = _unit_circle_angles(c)
    if len(angles) == 0:
        return 2 * math.pi * abs(c[degree].real)
    bounds = list(angles) + [angles[0] + 2 * math.pi]
    values = [_antiderivative(c, degree, b) for b in bounds]
    return math.fsum(abs(b - a) for a, b in zip(values, values[1:]))


def row_minimum(c: np.ndarray, lmax: int) -> float:
    """Minimum over phi of the trigonometric polynomial with coefficients c."""
    c, degree = _trimmed(c, lmax)
    if degree == 0:
        return float(c[0].real)
    derivative = c * (1j * np.arange(-degree, degree + 1))
    critical = _unit_circle_angles(derivative)
    samples = np.linspace(0.0, 2 * math.pi, 8 * degree + 8, endpoint=False)
    return float(np.min(_evaluate(c, degree, np.concatenate([critical, samples]))))


def _kinks(expansion: _AzimuthalExpansion, grid: SphereGrid) -> list[float]:
    xs = np.sort(np.cos(grid.polar_nodes()))
    xs = np.concatenate([[-1.0], xs, [1.0]])

    def g(x: float) -> float:
        return row_minimum(expansion.at(x), expansion.lmax)

    minima = [g(x) for x in xs]
    kinks = []
    for (xa, ga), (xb, gb) in zip(zip(xs, minima), zip(xs[1:], minima[1:])):
        if ga == 0.0 or gb == 0.0 or (ga < 0) == (gb < 0):
            continue
        kink = brentq(g, xa, xb, xtol=1e-14)
        if -1.0 < kink < 1.0:
            kinks.append(float(kink))
    return kinks


def negative_volume(
    rho: DensityMatrix,
    grid: SphereGrid | None = None,
    tol: float = DEFAULT_TOLERANCE,
    max_subdivisions: int = DEFAULT_MAX_SUBDIVISIONS,
) -> NegativeVolume:
    """delta(rho) together with the quadrature's error estimate.

    ``grid`` supplies the polar rows scanned for sign changes; it defaults to
    the order 4j+8 grid. Raises ConvergenceError when the adaptive quadrature
    exhausts ``max_subdivisions``.
    """
    if grid is None:
        grid = SphereGrid.for_spin(rho.j)
    if grid.j != rho.j:
        raise DimensionMismatchError(f"Grid is for j={grid.j}, state has j={rho.j}")
    expansion = _AzimuthalExpansion(rho)
    kinks = _kinks(expansion, grid)
    logger.debug("Negative volume for j=%s: %d kink(s) at %s", rho.j, len(kinks), kinks)

    def integrand(x: float) -> float:
        return abs_azimuthal_integral(expansion.at(x), expansion.lmax)

    with warnings.catch_warnings():
        warnings.simplefilter("error", IntegrationWarning)
        try:
            integral, abserr, info = quad(
                integrand,
                -1.0,
                1.0,
                points=kinks or None,
                epsabs=tol,
                epsrel=tol,
                limit=max_subdivisions,
                full_output=1,
            )
        except IntegrationWarning as exc:
            raise ConvergenceError(
                f"Negative-volume quadrature did not reach {tol:g} "
                f"within {max_subdivisions} subdivisions: {exc}"
            ) from exc

    measure = rho.dimension / (4 * math.pi)
    total = measure * integral
    return NegativeVolume(
        value=0.5 * (total - 1.0),
        achieved_tolerance=0.5 * measure * abserr,
        evaluations=int(info["neval"]),
        breakpoints=kinks,
    )


def coherent_state(j: HalfInteger, omega: PhasePoint) -> DensityMatrix:
    """|Omega><Omega| with |Omega> = U(phi, theta, 0)|j, j>."""
    vector = rotation_operator(j, omega.phi, omega.theta, 0.0)[:, 0]
    return DensityMatrix.pure(j, vector)


def coherent_mixture(
    j: HalfInteger, points: Sequence[PhasePoint], weights: Sequence[float]
) -> DensityMatrix:
    """sum_i w_i |Omega_i><Omega_i| for non-negative weights, normalized to unit sum."""
    if len(points) != len(weights) or not points:
        raise DimensionMismatchError(
            f"Need matching non-empty points and weights, got {len(points)} and {len(weights)}"
        )
    w = np.asarray(weights, dtype=float)
    if np.any(w < 0) or not np.isfinite(w).all() or w.sum() <= 0:
        raise InvalidStateError("Mixture weights must be finite, non-negative and not all zero")
    w = w / w.sum()
    matrix = np.zeros((j.dimension(), j.dimension()), dtype=complex)
    for weight, point in zip(w, points):
        vector = rotation_operator(j, point.phi, point.theta, 0.0)[:, 0]
        matrix += weight * np.outer(vector, vector.conj())
    return DensityMatrix(j, (matrix + matrix.conj().T) / 2)
