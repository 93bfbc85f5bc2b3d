"""Evaluation and integration of s-ordered quasiprobability functions on the sphere.

W(Omega) = sqrt(4 pi/(2j+1)) sum_{L,M} (C^{jj}_{jj;L0})^(-s) rho_LM Y_LM(Omega)

The L = 0 term is the constant 1/(2j+1).
"""

import logging
import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from spinwig.core.spin import PhasePoint
from spinwig.core.states import DensityMatrix
from spinwig.errors import InvalidStateError, OutOfRangeError
from spinwig.kernel.spectrum import kernel_weights
from spinwig.tolerances import get_tolerances
from spinwig.wigner.grid import SphereGrid
from spinwig.wigner.harmonics import spherical_harmonics, theta_factors
from spinwig.wigner.multipoles import Multipoles, multipoles

logger = logging.getLogger(__name__)


def _check_s(s: float) -> None:
    if not (-1.0 <= s <= 1.0):
        raise OutOfRangeError(f"Ordering parameter s must lie in [-1, 1], got {s}")


def weighted_multipoles(rho: DensityMatrix, s: float = 0.0) -> np.ndarray:
    """sqrt(4 pi/(2j+1)) (C^{jj}_{jj;L0})^(-s) rho_LM, indexed [L, 2j + M]."""
    _check_s(s)
    poles: Multipoles = multipoles(rho)
    weights = np.asarray(kernel_weights(rho.j, s))
    return math.sqrt(4 * math.pi / rho.dimension) * weights[:, None] * poles.values


def _real_part(values: np.ndarray) -> np.ndarray:
    residue = float(np.max(np.abs(values.imag))) if values.size else 0.0
    if residue > get_tolerances().imaginary:
        raise InvalidStateError(
            f"Wigner function has imaginary residue {residue:.3e}; input is not Hermitian"
        )
    return values.real


def wigner_values(
    rho: DensityMatrix, theta: np.ndarray, phi: np.ndarray, s: float = 0.0
) -> np.ndarray:
    """Vectorized W at points (theta[i], phi[i])."""
    coefficients = weighted_multipoles(rho, s)
    harmonics = spherical_harmonics(rho.j.twice_value, theta, phi)
    values = np.tensordot(coefficients, harmonics, axes=([0, 1], [0, 1]))
    return _real_part(np.asarray(values))


def wigner_value(rho: DensityMatrix, omega: PhasePoint, s: float = 0.0) -> float:
    return float(wigner_values(rho, np.array([omega.theta]), np.array([omega.phi]), s)[0])


def azimuthal_coefficients(
    rho: DensityMatrix,
    theta: float,
    s: float = 0.0,
    coefficients: np.ndarray | None = None,
) -> np.ndarray:
    """c_M(theta) with W(theta, phi) = sum_M c_M exp(i M phi), indexed by 2j + M.

    ``coefficients`` may carry weighted_multipoles(rho, s) from an earlier call.
    """
    if coefficients is None:
        coefficients = weighted_multipoles(rho, s)
    polar = theta_factors(rho.j.twice_value, theta)
    return np.sum(coefficients * polar, axis=0)


@dataclass
class GridIntegral:
    value: float
    under_resolved: bool

    @property
    def residual(self) -> float:
        return abs(self.value - 1.0)

    def to_dict(self) -> dict[str, Any]:
        return {
            "value": self.value,
            "residual": self.residual,
            "under_resolved": self.under_resolved,
        }


def integrate(rho: DensityMatrix, grid: SphereGrid, s: float = 0.0) -> GridIntegral:
    """sum_i w_i W(Omega_i); equals 1 for every state on a resolving grid."""
    under_resolved = not grid.resolves(rho.j)
    if under_resolved:
        logger.warning(
            "Grid of order %d is below 4j=%d; the integral is not guaranteed exact",
            grid.order,
            2 * rho.j.twice_value,
        )
    values = wigner_values(rho, grid.theta, grid.phi, s)
    return GridIntegral(value=math.fsum(values * grid.weights), under_resolved=under_resolved)
