"""Cartesian charts of the probability simplex.

Vertex e_0 sits at the origin, e_1 at (1, 0, ...), and each further vertex
above the centroid of the previous ones at unit distance from all of them. For
three and four levels this reproduces the triangle (0,0), (1,0), (1/2, sqrt3/2)
and the tetrahedron apex (1/2, 1/(2 sqrt3), sqrt(2/3)).
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from spinwig.core.spin import HalfInteger
from spinwig.core.states import Spectrum
from spinwig.errors import DimensionMismatchError

# Simplex edges have length sqrt(2) in spectrum space and 1 in the chart.
CHART_SCALE = 1.0 / math.sqrt(2.0)


@lru_cache(maxsize=32)
def _regular_simplex(count: int) -> np.ndarray:
    dim = max(count - 1, 1)
    positions = np.zeros((count, dim))
    for k in range(1, count):
        centroid = positions[:k].mean(axis=0)
        height = math.sqrt(max(0.0, 1.0 - float(np.sum((centroid - positions[0]) ** 2))))
        positions[k] = centroid
        positions[k, k - 1] = height
    positions.setflags(write=False)
    return positions


@dataclass(frozen=True, eq=False)
class SimplexChart:
    j: HalfInteger
    vertex_positions: np.ndarray = field(repr=False)

    @classmethod
    def for_spin(cls, j: HalfInteger) -> "SimplexChart":
        return cls(j, _regular_simplex(j.dimension()))

    @property
    def dimension(self) -> int:
        return self.vertex_positions.shape[1]


def bary_to_cart(spectrum: Spectrum, chart: SimplexChart) -> np.ndarray:
    """x_k = sum_i lambda_i r_k^(i)."""
    if spectrum.dimension != chart.j.dimension():
        raise DimensionMismatchError(
            f"Spectrum of dimension {spectrum.dimension} does not fit a chart for j={chart.j}"
        )
    return spectrum.as_array() @ chart.vertex_positions
