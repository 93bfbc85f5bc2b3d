"""SU(2) rotations of states and of points on the sphere (z-y-z Euler angles).

U(alpha, beta, gamma) = exp(-i alpha Jz) exp(-i beta Jy) exp(-i gamma Jz) acts on
states; the matching SO(3) rotation is Rz(alpha) Ry(beta) Rz(gamma). Covariance
reads W_{U rho U^dagger}(Omega) = W_rho(R^-1 Omega).
"""

import math

import numpy as np

from spinwig.core.operators import rotation_operator, wigner_small_d
from spinwig.core.spin import PhasePoint
from spinwig.core.states import DensityMatrix

__all__ = [
    "Euler",
    "inverse_rotate_point",
    "rotate_point",
    "rotate_state",
    "rotation_matrix",
    "wigner_small_d",
]

Euler = tuple[float, float, float]


def rotate_state(rho: DensityMatrix, euler: Euler) -> DensityMatrix:
    u = rotation_operator(rho.j, *euler)
    rotated = u @ rho.entries @ u.conj().T
    return DensityMatrix(rho.j, (rotated + rotated.conj().T) / 2)


def rotation_matrix(euler: Euler) -> np.ndarray:
    """Rz(alpha) Ry(beta) Rz(gamma)."""
    alpha, beta, gamma = euler

    def rz(a: float) -> np.ndarray:
        c, s = math.cos(a), math.sin(a)
        return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])

    cb, sb = math.cos(beta), math.sin(beta)
    ry = np.array([[cb, 0.0, sb], [0.0, 1.0, 0.0], [-sb, 0.0, cb]])
    return rz(alpha) @ ry @ rz(gamma)


def rotate_point(euler: Euler, point: PhasePoint) -> PhasePoint:
    return PhasePoint.from_vector(rotation_matrix(euler) @ point.to_vector())


def inverse_rotate_point(euler: Euler, point: PhasePoint) -> PhasePoint:
    return PhasePoint.from_vector(rotation_matrix(euler).T @ point.to_vector())
