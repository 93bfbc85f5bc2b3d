"""Eigenvalues of the s-ordered Stratonovich-Weyl kernel on SU(2).

The kernel at the north pole is diagonal in the Dicke basis with entries

    Delta^(s)_{j,m} = sum_L (2L+1)/(2j+1) * (C^{jj}_{jj;L0})^(-s) * C^{jm}_{jm;L0}

and every other point is reached by an SU(2) rotation.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterable

import numpy as np

from spinwig.core.operators import rotation_operator
from spinwig.core.spin import HalfInteger, PhasePoint
from spinwig.errors import OutOfRangeError
from spinwig.kernel.clebsch_gordan import clebsch_gordan

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KernelSpectrum:
    """Kernel eigenvalues indexed by Dicke position (index i <-> m = j - i).

    ``ascending_order[p]`` is the Dicke index of the p-th smallest eigenvalue,
    so ``values[ascending_order[p]] == ascending[p]``.
    """

    j: HalfInteger
    s: float
    values: tuple[float, ...]

    @property
    def dimension(self) -> int:
        return len(self.values)

    @property
    def ascending_order(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.argsort(self.values, kind="stable"))

    @property
    def descending_order(self) -> tuple[int, ...]:
        return tuple(reversed(self.ascending_order))

    @property
    def ascending(self) -> tuple[float, ...]:
        return tuple(self.values[i] for i in self.ascending_order)

    @property
    def descending(self) -> tuple[float, ...]:
        return tuple(reversed(self.ascending))

    @property
    def minimum(self) -> float:
        return min(self.values)

    def value(self, twice_m: int) -> float:
        return self.values[self.j.index_of(twice_m)]

    def as_array(self) -> np.ndarray:
        return np.array(self.values)

    def to_dict(self) -> dict[str, Any]:
        return {
            "twice_j": self.j.twice_value,
            "j": str(self.j),
            "s": self.s,
            "values": list(self.values),
            "twice_m": list(self.j.twice_m_values()),
        }


def kernel_weights(j: HalfInteger, s: float) -> tuple[float, ...]:
    """The s-dependent rank weights (C^{jj}_{jj;L0})^(-s) for L = 0..2j."""
    tj = j.twice_value
    weights = []
    for L in range(tj + 1):
        if s == 0.0:
            weights.append(1.0)
        else:
            weights.append(clebsch_gordan(tj, tj, 2 * L, 0, tj, tj) ** (-s))
    return tuple(weights)


@lru_cache(maxsize=4096)
def _kernel_value(twice_j: int, twice_m: int, s: float) -> float:
    dim = twice_j + 1
    weights = kernel_weights(HalfInteger(twice_j), s)
    terms = [
        (2 * L + 1)
        / dim
        * weights[L]
        * clebsch_gordan(twice_j, twice_m, 2 * L, 0, twice_j, twice_m)
        for L in range(twice_j + 1)
    ]
    return math.fsum(terms)


def _check_s(s: float) -> None:
    if not (-1.0 <= s <= 1.0) or math.isnan(s):
        raise OutOfRangeError(f"Ordering parameter s must lie in [-1, 1], got {s}")


def kernel_eigenvalue(j: HalfInteger, twice_m: int, s: float = 0.0) -> float:
    """A single eigenvalue Delta^(s)_{j,m}."""
    _check_s(s)
    j.index_of(twice_m)
    return _kernel_value(j.twice_value, twice_m, float(s))


def kernel_spectrum(j: HalfInteger, s: float = 0.0) -> KernelSpectrum:
    """Return all 2j+1 kernel eigenvalues for ordering parameter s in [-1, 1].

    s = 0 is the Wigner kernel, s = -1 the Husimi and s = 1 the Glauber-Sudarshan one.
    """
    _check_s(s)
    values = tuple(_kernel_value(j.twice_value, tm, float(s)) for tm in j.twice_m_values())
    return KernelSpectrum(j, float(s), values)


def kernel_matrix(j: HalfInteger, omega: PhasePoint, s: float = 0.0) -> np.ndarray:
    """The kernel operator at omega: U(phi, theta, 0) diag(Delta) U^dagger."""
    delta = kernel_spectrum(j, s)
    u = rotation_operator(j, omega.phi, omega.theta, 0.0)
    matrix = (u * delta.as_array()[None, :]) @ u.conj().T
    return (matrix + matrix.conj().T) / 2


@dataclass
class KernelIdentityReport:
    """Residuals of the unit-trace and sum-of-squares identities plus the sign pattern."""

    j: HalfInteger
    sum_residual: float
    square_sum_residual: float
    pattern_holds: bool
    violations: list[str]

    def to_dict(self) -> dict[str, Any]:
        return {
            "twice_j": self.j.twice_value,
            "sum_residual": self.sum_residual,
            "square_sum_residual": self.square_sum_residual,
            "pattern_holds": self.pattern_holds,
            "violations": list(self.violations),
        }


def verify_kernel_identities(j: HalfInteger) -> KernelIdentityReport:
    """Check sum(Delta) = 1, sum(Delta^2) = 2j+1 and the alternating-decay pattern at s = 0.

    The pattern is |Delta_{j,m}| > |Delta_{j,m-1}| > 0 with sign (-1)^(j-m).
    Any failure is listed in ``violations`` rather than raised.
    """
    delta = kernel_spectrum(j, 0.0)
    values = delta.values
    dim = j.dimension()
    sum_residual = abs(math.fsum(values) - 1.0)
    square_sum_residual = abs(math.fsum(v * v for v in values) - dim)

    violations: list[str] = []
    for i, v in enumerate(values):
        expected_sign = 1.0 if i % 2 == 0 else -1.0
        if v == 0.0 or math.copysign(1.0, v) != expected_sign:
            violations.append(f"sign of Delta at 2m={j.twice_value - 2 * i} is wrong ({v:+.3e})")
        if i + 1 < dim and not abs(v) > abs(values[i + 1]):
            twice_m = j.twice_value - 2 * i
            violations.append(f"|Delta| does not decrease from 2m={twice_m} to 2m={twice_m - 2}")

    report = KernelIdentityReport(
        j=j,
        sum_residual=sum_residual,
        square_sum_residual=square_sum_residual,
        pattern_holds=not violations,
        violations=violations,
    )
    if violations:
        logger.warning("Kernel sign pattern fails for j=%s: %s", j, "; ".join(violations))
    return report


@dataclass
class ExtremeEigenvalues:
    j: HalfInteger
    largest: float
    most_negative: float
    critical_w_min: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "twice_j": self.j.twice_value,
            "largest": self.largest,
            "most_negative": self.most_negative,
            "critical_w_min": self.critical_w_min,
        }


def extreme_eigenvalue_trend(twice_js: Iterable[int]) -> list[ExtremeEigenvalues]:
    """Delta_{j,j}, Delta_{j,j-1} and the critical cutoff over a range of spins.

    For growing j the first two approach +2 and -2 and the cutoff approaches -1/2.
    """
    trend = []
    for twice_j in twice_js:
        j = HalfInteger(twice_j)
        if twice_j < 1:
            raise OutOfRangeError("The eigenvalue trend needs 2j >= 1")
        delta = kernel_spectrum(j, 0.0)
        dim = j.dimension()
        top = delta.values[0]
        trend.append(
            ExtremeEigenvalues(
                j=j,
                largest=top,
                most_negative=delta.values[1],
                critical_w_min=(top - dim) / (top * dim - 1),
            )
        )
    return trend
