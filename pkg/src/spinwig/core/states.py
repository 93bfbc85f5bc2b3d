"""Spectra, density matrices and Hilbert-Schmidt distance to the maximally mixed state."""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from spinwig.core.spin import HalfInteger
from spinwig.errors import ConvergenceError, DimensionMismatchError, InvalidStateError
from spinwig.tolerances import get_tolerances

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Spectrum:
    """A real vector of length 2j+1 summing to one.

    Components may be negative (generalized polytope vertices below the
    critical cutoff); ``physical`` reports whether they are all >= 0.
    """

    j: HalfInteger
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        values = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if len(values) != self.j.dimension():
            raise DimensionMismatchError(
                f"Spectrum of length {len(values)} does not match 2j+1={self.j.dimension()}"
            )
        if not all(math.isfinite(v) for v in values):
            raise InvalidStateError(f"Spectrum contains non-finite values: {values}")
        total = math.fsum(values)
        if abs(total - 1.0) > get_tolerances().structural:
            raise InvalidStateError(f"Spectrum must sum to 1, sums to {total!r}")

    @classmethod
    def from_values(cls, values: Sequence[float]) -> "Spectrum":
        return cls(HalfInteger.from_dimension(len(values)), tuple(values))

    @classmethod
    def maximally_mixed(cls, j: HalfInteger) -> "Spectrum":
        d = j.dimension()
        return cls(j, (1.0 / d,) * d)

    @classmethod
    def normalized(cls, j: HalfInteger, values: Sequence[float]) -> "Spectrum":
        """Build a spectrum after rescaling the values to unit sum."""
        arr = np.asarray(values, dtype=float)
        return cls(j, tuple(arr / arr.sum()))

    @property
    def physical(self) -> bool:
        return min(self.values) >= -get_tolerances().structural

    @property
    def dimension(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values)

    def descending(self) -> "Spectrum":
        return Spectrum(self.j, tuple(sorted(self.values, reverse=True)))

    def distance_to_mixed(self) -> float:
        """Euclidean distance ||lambda - lambda_0|| to the uniform spectrum."""
        d = self.dimension
        return math.sqrt(max(0.0, math.fsum(v * v for v in self.values) - 1.0 / d))

    def to_dict(self) -> dict[str, Any]:
        return {"twice_j": self.j.twice_value, "values": list(self.values)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Spectrum":
        return cls(HalfInteger(int(data["twice_j"])), tuple(data["values"]))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A Hermitian, positive semidefinite, unit-trace matrix in the Dicke basis.

    Row/column i corresponds to m = j - i. The stored array is read-only.
    """

    j: HalfInteger
    entries: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=complex)
        d = self.j.dimension()
        if entries.shape != (d, d):
            raise DimensionMismatchError(
                f"Matrix of shape {entries.shape} does not match 2j+1={d} for j={self.j}"
            )
        tol = get_tolerances()
        if not np.all(np.isfinite(entries)):
            raise InvalidStateError("Density matrix contains non-finite entries")
        if np.max(np.abs(entries - entries.conj().T)) > tol.structural:
            raise InvalidStateError("Density matrix is not Hermitian")
        trace = np.trace(entries).real
        if abs(trace - 1.0) > tol.structural:
            raise InvalidStateError(f"Density matrix must have unit trace, got {trace!r}")
        smallest = np.linalg.eigvalsh(entries)[0]
        if smallest < -tol.psd:
            raise InvalidStateError(
                f"Density matrix is not positive semidefinite (smallest eigenvalue {smallest:.3e})"
            )
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def maximally_mixed(cls, j: HalfInteger) -> "DensityMatrix":
        d = j.dimension()
        return cls(j, np.eye(d, dtype=complex) / d)

    @classmethod
    def diagonal(cls, spectrum: Spectrum) -> "DensityMatrix":
        """The state diag(lambda) in the Dicke basis."""
        return cls(spectrum.j, np.diag(spectrum.as_array()).astype(complex))

    @classmethod
    def pure(cls, j: HalfInteger, vector: Sequence[complex]) -> "DensityMatrix":
        psi = np.asarray(vector, dtype=complex)
        if psi.shape != (j.dimension(),):
            raise DimensionMismatchError(
                f"State vector of length {psi.shape} does not match 2j+1={j.dimension()}"
            )
        psi = psi / np.linalg.norm(psi)
        return cls(j, np.outer(psi, psi.conj()))

    @classmethod
    def dicke(cls, j: HalfInteger, twice_m: int) -> "DensityMatrix":
        """The projector |j,m><j,m|."""
        vector = np.zeros(j.dimension(), dtype=complex)
        vector[j.index_of(twice_m)] = 1.0
        return cls.pure(j, vector)

    @classmethod
    def from_unitary_orbit(cls, spectrum: Spectrum, unitary: np.ndarray) -> "DensityMatrix":
        """U diag(lambda) U^dagger, hermitized to remove rounding asymmetry."""
        rho = unitary @ np.diag(spectrum.as_array()) @ unitary.conj().T
        return cls(spectrum.j, (rho + rho.conj().T) / 2)

    @property
    def dimension(self) -> int:
        return self.j.dimension()

    def to_dict(self) -> dict[str, Any]:
        return {
            "twice_j": self.j.twice_value,
            "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in self.entries],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "DensityMatrix":
        j = HalfInteger(int(data["twice_j"]))
        try:
            matrix = np.array(
                [[complex(re, im) for re, im in row] for row in data["matrix"]], dtype=complex
            )
        except (TypeError, ValueError) as exc:
            raise InvalidStateError("Matrix entries must be [re, im] pairs") from exc
        return cls(j, matrix)


def purity(rho: DensityMatrix) -> float:
    """gamma = Tr rho^2."""
    return float(np.real(np.vdot(rho.entries, rho.entries)))


def hs_distance(rho: DensityMatrix) -> float:
    """Hilbert-Schmidt distance ||rho - rho_0||_HS to the maximally mixed state."""
    diff = rho.entries - np.eye(rho.dimension) / rho.dimension
    return float(math.sqrt(max(0.0, np.real(np.vdot(diff, diff)))))


def bloch_length(rho: DensityMatrix) -> float:
    """|n| = sqrt(2 gamma - 1) for a qubit (j = 1/2)."""
    if rho.j.twice_value != 1:
        raise DimensionMismatchError(f"Bloch length is defined for j=1/2 only, got j={rho.j}")
    return math.sqrt(max(0.0, 2.0 * purity(rho) - 1.0))


def spectrum_of(rho: DensityMatrix) -> Spectrum:
    """Eigenvalues of rho in decreasing order.

    Eigenvalues inside the PSD tolerance band below zero are clipped and the
    result renormalized, so the returned spectrum is always physical.
    """
    try:
        eigenvalues = np.linalg.eigvalsh(rho.entries)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"Eigensolver did not converge for j={rho.j}") from exc
    if np.min(eigenvalues) < 0:
        logger.debug("Clipping negative eigenvalue %.3e", np.min(eigenvalues))
        eigenvalues = np.clip(eigenvalues, 0.0, None)
        eigenvalues = eigenvalues / eigenvalues.sum()
    return Spectrum(rho.j, tuple(sorted(eigenvalues.tolist(), reverse=True)))
