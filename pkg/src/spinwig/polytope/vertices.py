"""Vertices of the AWB polytope.

Inside the ordered chamber lambda_1 >= ... >= lambda_N the polytope is the
convex hull of the maximally mixed state and 2j vertices. Vertex n has its
first n eigenvalues equal to omega_n and the remaining N - n equal to sigma_n,
and lies on the hyperplane lambda . Delta(asc) = W_min. The full polytope
vertices are all distinct permutations of these.
"""

import logging
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Any

from spinwig.core.spin import HalfInteger
from spinwig.core.states import DensityMatrix, Spectrum
from spinwig.errors import DegenerateKernelError, DimensionMismatchError
from spinwig.kernel.spectrum import KernelSpectrum, kernel_spectrum
from spinwig.polytope.membership import check_w_min, orbit_minimizer
from spinwig.tolerances import get_tolerances

logger = logging.getLogger(__name__)

MAX_ENUMERATION_DIMENSION = 9
DEGENERACY_GAP = 1e-9


@dataclass(frozen=True)
class PolytopeVertex:
    n: int
    omega: float
    sigma: float
    tau: float
    spectrum: Spectrum
    radius: float
    physical: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "omega": self.omega,
            "sigma": self.sigma,
            "tau": self.tau,
            "spectrum": list(self.spectrum.values),
            "radius": self.radius,
            "physical": self.physical,
        }


def _check_gaps(delta: KernelSpectrum) -> None:
    ascending = delta.ascending
    for lower, upper in zip(ascending, ascending[1:]):
        if upper - lower <= DEGENERACY_GAP:
            raise DegenerateKernelError(
                f"Kernel eigenvalues {lower!r} and {upper!r} for j={delta.j} coincide; "
                "the polytope hyperplanes collapse"
            )


def minimal_vertices(
    j: HalfInteger, w_min: float, delta: KernelSpectrum | None = None
) -> list[PolytopeVertex]:
    """The 2j vertices of the ordered-chamber polytope, n = 1 .. 2j.

    omega_n = (tau_n - (N-n) W) / (N tau_n - (N-n)) with tau_n the sum of the
    N - n largest kernel eigenvalues; sigma_n follows from normalization.
    """
    if delta is None:
        delta = kernel_spectrum(j, 0.0)
    if delta.j != j:
        raise DimensionMismatchError(f"Kernel spectrum is for j={delta.j}, not j={j}")
    if j.twice_value < 1:
        raise DimensionMismatchError("The polytope needs 2j >= 1")
    check_w_min(j, w_min, delta)
    _check_gaps(delta)

    dim = j.dimension()
    ascending = delta.ascending
    vertices = []
    for n in range(1, dim):
        tau = math.fsum(ascending[n:])
        denominator = dim * tau - (dim - n)
        if abs(denominator) <= DEGENERACY_GAP:
            raise DegenerateKernelError(f"Vertex n={n} for j={j} is at infinity (tau={tau!r})")
        omega = (tau - (dim - n) * w_min) / denominator
        sigma = (1.0 - n * omega) / (dim - n)
        spectrum = Spectrum(j, (omega,) * n + (sigma,) * (dim - n))
        purity = n * omega * omega + (dim - n) * sigma * sigma
        radius = math.sqrt(max(0.0, purity - 1.0 / dim))
        physical = spectrum.physical
        if not physical:
            logger.debug(
                "Vertex n=%d for j=%s, w_min=%g is unphysical (sigma=%g)", n, j, w_min, sigma
            )
        vertices.append(
            PolytopeVertex(
                n=n,
                omega=omega,
                sigma=sigma,
                tau=tau,
                spectrum=spectrum,
                radius=radius,
                physical=physical,
            )
        )
    return vertices


def _check_enumerable(j: HalfInteger) -> None:
    if j.dimension() > MAX_ENUMERATION_DIMENSION:
        raise DimensionMismatchError(
            f"Full enumeration is limited to 2j+1 <= {MAX_ENUMERATION_DIMENSION} "
            f"(got {j.dimension()}); "
            "use minimal_vertices and permute lazily instead"
        )


def full_vertex_spectra(j: HalfInteger, w_min: float) -> list[Spectrum]:
    """All distinct coordinate permutations of every minimal vertex."""
    _check_enumerable(j)
    decimals = get_tolerances().dedup_decimals
    dim = j.dimension()
    seen: set[tuple[float, ...]] = set()
    spectra = []
    for vertex in minimal_vertices(j, w_min):
        for positions in combinations(range(dim), vertex.n):
            chosen = set(positions)
            values = tuple(vertex.omega if i in chosen else vertex.sigma for i in range(dim))
            key = tuple(round(v, decimals) + 0.0 for v in values)
            if key in seen:
                continue
            seen.add(key)
            spectra.append(Spectrum(j, values))
    return spectra


def enumerated_outer_radius(j: HalfInteger, w_min: float, simplex_only: bool = False) -> float:
    """Largest distance from the maximally mixed state over the enumerated vertex set.

    Unphysical vertices are skipped when ``simplex_only`` is set. Spins above the
    enumeration limit fall back to the minimal vertices, whose permutations share
    their radii.
    """
    if j.dimension() <= MAX_ENUMERATION_DIMENSION:
        candidates = full_vertex_spectra(j, w_min)
    else:
        candidates = [v.spectrum for v in minimal_vertices(j, w_min)]
    radii = [s.distance_to_mixed() for s in candidates if s.physical or not simplex_only]
    return max(radii, default=0.0)


def vertex_state(vertex: PolytopeVertex, delta: KernelSpectrum | None = None) -> DensityMatrix:
    """Diagonal state of the vertex orbit with W(north pole) = W_min.

    Only physical vertices define a state; others raise InvalidStateError.
    """
    if delta is None:
        delta = kernel_spectrum(vertex.spectrum.j, 0.0)
    return orbit_minimizer(vertex.spectrum, delta)


def majorizes(a: Spectrum, b: Spectrum, tol: float = 0.0) -> bool:
    """True when a majorizes b: every partial sum of a(desc) is >= that of b(desc)."""
    if a.dimension != b.dimension:
        raise DimensionMismatchError(
            f"Cannot compare spectra of dimensions {a.dimension} and {b.dimension}"
        )
    partial_a = partial_b = 0.0
    for x, y in zip(a.descending().values[:-1], b.descending().values[:-1]):
        partial_a += x
        partial_b += y
        if partial_a < partial_b - tol:
            return False
    return True


def vertex_majorization_pairs(j: HalfInteger, w_min: float) -> list[tuple[int, int]]:
    """Pairs (n, n') of distinct minimal vertices where vertex n majorizes vertex n'.

    Observed numerically to be empty for every spin.
    """
    vertices = minimal_vertices(j, w_min)
    tol = get_tolerances().membership
    return [
        (a.n, b.n)
        for a in vertices
        for b in vertices
        if a.n != b.n and majorizes(a.spectrum, b.spectrum, tol=-tol)
    ]
