"""Majorization certificates for AWB membership.

A spectrum is AWB exactly when it is majorized by some convex combination of
the minimal polytope vertices. Since every vertex spectrum is sorted in
decreasing order, so is any mixture of them, and the majorization condition
becomes 2j linear inequalities on the mixture weights.
"""

import logging
from typing import Sequence

import numpy as np
from scipy.optimize import linprog

from spinwig.core.states import Spectrum
from spinwig.errors import ConvergenceError, DimensionMismatchError
from spinwig.polytope.vertices import PolytopeVertex
from spinwig.tolerances import get_tolerances

logger = logging.getLogger(__name__)

# linprog status codes
_LP_OPTIMAL = 0
_LP_INFEASIBLE = 2


def _partial_sums(values: Sequence[float]) -> np.ndarray:
    return np.cumsum(np.asarray(values, dtype=float))[:-1]


def majorization_certificate(
    spectrum: Spectrum, vertices: Sequence[PolytopeVertex]
) -> list[float] | None:
    """Convex weights c with spectrum majorized by sum_k c_k vertex_k, or None if none exist.

    ``vertices`` must come from minimal_vertices at the same (j, w_min).
    """
    if not vertices:
        raise DimensionMismatchError("At least one vertex is required")
    for vertex in vertices:
        if vertex.spectrum.dimension != spectrum.dimension:
            raise DimensionMismatchError(
                f"Vertex n={vertex.n} has dimension {vertex.spectrum.dimension}, "
                f"spectrum has {spectrum.dimension}"
            )
    tol = get_tolerances().membership
    count = len(vertices)
    target = spectrum.descending().as_array()

    for k, vertex in enumerate(vertices):
        if np.max(np.abs(vertex.spectrum.as_array() - target)) <= tol:
            weights = [0.0] * count
            weights[k] = 1.0
            return weights
    if np.max(np.abs(target - 1.0 / spectrum.dimension)) <= tol:
        return [1.0 / count] * count

    # Columns: partial sums of each vertex. Require S_p(mixture) >= S_p(spectrum) - tol.
    vertex_sums = np.column_stack([_partial_sums(v.spectrum.values) for v in vertices])
    result = linprog(
        c=np.zeros(count),
        A_ub=-vertex_sums,
        b_ub=-(_partial_sums(target) - tol),
        A_eq=np.ones((1, count)),
        b_eq=np.array([1.0]),
        bounds=[(0.0, None)] * count,
        method="highs",
        options={"primal_feasibility_tolerance": 1e-10},
    )
    if result.status == _LP_INFEASIBLE:
        return None
    if result.status != _LP_OPTIMAL:
        raise ConvergenceError(f"Majorization feasibility program failed: {result.message}")

    weights = np.clip(result.x, 0.0, None)
    weights = weights / weights.sum()
    logger.debug("Majorization certificate %s", weights)
    return weights.tolist()
