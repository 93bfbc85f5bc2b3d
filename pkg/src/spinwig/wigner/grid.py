"""Product quadrature on the sphere.

The measure is d mu = (2j+1)/(4 pi) sin(theta) d theta d phi.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from spinwig.core.spin import HalfInteger, PhasePoint


def default_order(j: HalfInteger) -> int:
    return 2 * j.twice_value + 8


@dataclass(frozen=True, eq=False)
class SphereGrid:
    """Gauss-Legendre nodes in cos(theta) times a uniform trapezoid rule in phi.

    With N_theta = ceil((order+1)/2) polar nodes and N_phi = 2 N_theta azimuthal
    ones the rule integrates every product of spherical harmonics of total degree
    <= order exactly. Weights sum to 2j+1.
    """

    j: HalfInteger
    order: int
    theta: np.ndarray = field(repr=False)
    phi: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    n_theta: int = 0
    n_phi: int = 0

    @classmethod
    def for_spin(cls, j: HalfInteger, order: int | None = None) -> "SphereGrid":
        if order is None:
            order = default_order(j)
        if order < 0:
            raise ValueError(f"Grid order must be non-negative, got {order}")
        n_theta = max(1, math.ceil((order + 1) / 2))
        n_phi = 2 * n_theta
        x, gl_weights = np.polynomial.legendre.leggauss(n_theta)
        polar = np.arccos(x)
        azimuth = 2 * np.pi * np.arange(n_phi) / n_phi
        theta, phi = np.meshgrid(polar, azimuth, indexing="ij")
        measure = j.dimension() / (4 * np.pi)
        weights = measure * np.outer(gl_weights, np.full(n_phi, 2 * np.pi / n_phi))
        arrays = [theta.ravel(), phi.ravel(), weights.ravel()]
        for arr in arrays:
            arr.setflags(write=False)
        return cls(j, order, arrays[0], arrays[1], arrays[2], n_theta, n_phi)

    @property
    def size(self) -> int:
        return len(self.weights)

    @property
    def nodes(self) -> tuple[PhasePoint, ...]:
        return tuple(PhasePoint(float(t), float(p)) for t, p in zip(self.theta, self.phi))

    @property
    def sphere_weights(self) -> np.ndarray:
        """Weights for the plain area element sin(theta) d theta d phi (sum 4 pi)."""
        return self.weights * (4 * np.pi / self.j.dimension())

    def resolves(self, j: HalfInteger) -> bool:
        """True when the rule is exact for products of Wigner functions of spin j."""
        return self.order >= 2 * j.twice_value

    def rows(self, values: np.ndarray) -> np.ndarray:
        """Reshape per-node values to (n_theta, n_phi)."""
        return np.asarray(values).reshape(self.n_theta, self.n_phi)

    def polar_nodes(self) -> np.ndarray:
        return self.theta[:: self.n_phi]
