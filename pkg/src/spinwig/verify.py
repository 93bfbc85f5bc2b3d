"""Desk-scale verification suite over kernel identities, polytope geometry and Wigner functions."""

import logging
import math
from dataclasses import dataclass, field
from itertools import permutations
from typing import Any, Callable

import numpy as np

from spinwig.core.spin import HalfInteger, PhasePoint
from spinwig.core.states import DensityMatrix, Spectrum
from spinwig.kernel.spectrum import kernel_spectrum, verify_kernel_identities
from spinwig.orbits.haar import haar_unitary, make_generator
from spinwig.polytope.balls import (
    ball_report,
    critical_w_min,
    inner_radius,
    lambda_star,
    outer_radius,
)
from spinwig.polytope.membership import orbit_min
from spinwig.polytope.vertices import (
    full_vertex_spectra,
    minimal_vertices,
    vertex_majorization_pairs,
)
from spinwig.wigner.function import integrate, wigner_value
from spinwig.wigner.grid import SphereGrid
from spinwig.wigner.rotation import inverse_rotate_point, rotate_state

logger = logging.getLogger(__name__)

# Minimal-polytope vertices at w_min = 0 to three decimals, keyed by 2j, ordered by n.
REFERENCE_VERTICES = {
    1: [(0.789, 0.211)],
    2: [(0.544, 0.228, 0.228), (0.423, 0.423, 0.153)],
    3: [
        (0.400, 0.200, 0.200, 0.200),
        (0.330, 0.330, 0.170, 0.170),
        (0.294, 0.294, 0.294, 0.119),
    ],
    4: [
        (0.313, 0.172, 0.172, 0.172, 0.172),
        (0.266, 0.266, 0.156, 0.156, 0.156),
        (0.240, 0.240, 0.240, 0.140, 0.140),
        (0.226, 0.226, 0.226, 0.226, 0.097),
    ],
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class VerificationReport:
    max_twice_j: int
    seed: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        return {
            "max_twice_j": self.max_twice_j,
            "seed": self.seed,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def _random_spectrum(j: HalfInteger, rng: np.random.Generator) -> Spectrum:
    return Spectrum.normalized(j, rng.dirichlet(np.ones(j.dimension())))


def _random_state(j: HalfInteger, rng: np.random.Generator) -> DensityMatrix:
    return DensityMatrix.from_unitary_orbit(
        _random_spectrum(j, rng), haar_unitary(j.dimension(), rng=rng)
    )


def _random_point(rng: np.random.Generator) -> PhasePoint:
    return PhasePoint.normalized(math.acos(rng.uniform(-1.0, 1.0)), rng.uniform(0.0, 2 * math.pi))


def _w_samples(j: HalfInteger, count: int) -> list[float]:
    lower = kernel_spectrum(j, 0.0).minimum
    return list(np.linspace(lower, 1.0 / j.dimension(), count))


def check_kernel_identities(max_twice_j: int) -> CheckResult:
    worst_sum = worst_square = 0.0
    failures = []
    for tj in range(1, max_twice_j + 1):
        report = verify_kernel_identities(HalfInteger(tj))
        worst_sum = max(worst_sum, report.sum_residual)
        worst_square = max(worst_square, report.square_sum_residual)
        if report.sum_residual >= 1e-10 or report.square_sum_residual >= 1e-8:
            failures.append(
                f"2j={tj} residuals {report.sum_residual:.2e}/{report.square_sum_residual:.2e}"
            )
        if not report.pattern_holds:
            failures.append(f"2j={tj} sign pattern: {'; '.join(report.violations)}")
    detail = f"max |sum-1|={worst_sum:.2e}, max |sum sq-(2j+1)|={worst_square:.2e}"
    return CheckResult("kernel identities", not failures, "; ".join(failures) or detail)


def check_kernel_orderings(max_twice_j: int) -> CheckResult:
    failures = []
    for tj in range(1, max_twice_j + 1):
        j = HalfInteger(tj)
        ascending = kernel_spectrum(j, 0.0).ascending
        gap = min(b - a for a, b in zip(ascending, ascending[1:]))
        if gap <= 1e-9:
            failures.append(f"2j={tj} eigenvalue gap {gap:.2e}")
        husimi = kernel_spectrum(j, -1.0).minimum
        if husimi < -1e-12:
            failures.append(f"2j={tj} Husimi eigenvalue {husimi:.2e}")
    name = "kernel distinctness and Husimi positivity"
    return CheckResult(name, not failures, "; ".join(failures))


def check_reference_vertices() -> CheckResult:
    failures = []
    for tj, expected in REFERENCE_VERTICES.items():
        vertices = minimal_vertices(HalfInteger(tj), 0.0)
        for vertex, reference in zip(vertices, expected):
            if max(abs(a - b) for a, b in zip(vertex.spectrum.values, reference)) > 6e-4:
                failures.append(f"2j={tj} n={vertex.n}: {vertex.spectrum.values}")
    spin_one = minimal_vertices(HalfInteger(2), 0.0)
    omega_1 = (5 + math.sqrt(10)) / 15
    omega_2 = (2 + math.sqrt(7 - 3 * math.sqrt(5))) / 6
    if abs(spin_one[0].omega - omega_1) > 1e-12 or abs(spin_one[1].omega - omega_2) > 1e-12:
        failures.append(f"j=1 omegas {spin_one[0].omega!r}, {spin_one[1].omega!r}")
    return CheckResult("reference polytope vertices", not failures, "; ".join(failures))


def check_ball_radii() -> CheckResult:
    expected = [
        (HalfInteger(2), "r_in", 1 / (2 * math.sqrt(6))),
        (HalfInteger(2), "r_out", 1 / math.sqrt(15)),
        (HalfInteger(3), "r_in", 1 / (2 * math.sqrt(15))),
        (HalfInteger(1), "r_in", 1 / math.sqrt(6)),
        (HalfInteger(1), "r_out", 1 / math.sqrt(6)),
    ]
    failures = []
    for j, name, value in expected:
        got = getattr(ball_report(j, 0.0), name)
        if abs(got - value) > 1e-12:
            failures.append(f"j={j} {name}={got!r}, expected {value!r}")
    second = minimal_vertices(HalfInteger(2), 0.0)[1].radius
    if abs(second - math.sqrt((7 - 3 * math.sqrt(5)) / 6)) > 1e-12:
        failures.append(f"j=1 second vertex radius {second!r}")
    cutoff = critical_w_min(HalfInteger(2))
    if abs(cutoff - (1 / 3 + (2 / 3) * math.sqrt(2) * (math.sqrt(5) - 3))) > 1e-12:
        failures.append(f"j=1 critical cutoff {cutoff!r}")
    return CheckResult("ball radii and critical cutoff", not failures, "; ".join(failures))


def check_lambda_star(max_twice_j: int) -> CheckResult:
    failures = []
    for tj in range(1, min(max_twice_j, 20) + 1):
        j = HalfInteger(tj)
        delta = kernel_spectrum(j, 0.0)
        for w in _w_samples(j, 20):
            star = lambda_star(j, w, delta)
            r_in = inner_radius(j, w)
            squared = math.fsum(v * v for v in star.values) - 1.0 / j.dimension()
            if abs(squared - r_in * r_in) > 1e-12:
                off = squared - r_in * r_in
                failures.append(f"2j={tj} w={w:.4f}: |lambda* - lambda0|^2 off by {off:.2e}")
            value = math.fsum(a * b for a, b in zip(star.values, delta.values))
            if abs(value - w) > 1e-10:
                failures.append(f"2j={tj} w={w:.4f}: lambda*.Delta off by {value - w:.2e}")
            if r_in > outer_radius(j, w, delta) + 1e-12:
                failures.append(f"2j={tj} w={w:.4f}: r_in > r_out")
    return CheckResult("inscribed-ball tangent point", not failures, "; ".join(failures[:5]))


def check_permutation_oracle(max_twice_j: int, rng: np.random.Generator) -> CheckResult:
    failures = []
    for tj in range(1, min(max_twice_j, 6) + 1):
        j = HalfInteger(tj)
        delta = kernel_spectrum(j, 0.0)
        perms = list(permutations(delta.values))
        for _ in range(100):
            spectrum = _random_spectrum(j, rng)
            ordered = spectrum.descending().values
            brute = min(math.fsum(l * d for l, d in zip(ordered, p)) for p in perms)
            if abs(brute - orbit_min(spectrum, delta)) > 1e-13:
                failures.append(f"2j={tj}: brute force {brute!r} vs {orbit_min(spectrum, delta)!r}")
    return CheckResult("permutation oracle", not failures, "; ".join(failures[:5]))


def check_outer_vertex(max_twice_j: int) -> CheckResult:
    failures = []
    for tj in range(1, min(max_twice_j, 8) + 1):
        j = HalfInteger(tj)
        for w in _w_samples(j, 20)[:-1]:
            n1 = minimal_vertices(j, w)[0].radius
            largest = max(s.distance_to_mixed() for s in full_vertex_spectra(j, w))
            if largest > n1 + 1e-12:
                failures.append(
                    f"2j={tj} w={w:.4f}: vertex radius {largest!r} exceeds n=1 radius {n1!r}"
                )
        if vertex_majorization_pairs(j, 0.0):
            failures.append(f"2j={tj}: a vertex majorizes another")
    name = "outer vertex and vertex incomparability"
    return CheckResult(name, not failures, "; ".join(failures[:5]))


def check_normalization_and_covariance(max_twice_j: int, rng: np.random.Generator) -> CheckResult:
    failures = []
    top = min(max_twice_j, 8)
    for index in range(50):
        j = HalfInteger(1 + index % top)
        rho = _random_state(j, rng)
        total = integrate(rho, SphereGrid.for_spin(j)).value
        if abs(total - 1.0) > 1e-9:
            failures.append(f"2j={j.twice_value}: integral {total!r}")
        euler = (rng.uniform(0, 2 * math.pi), rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi))
        point = _random_point(rng)
        left = wigner_value(rotate_state(rho, euler), point)
        right = wigner_value(rho, inverse_rotate_point(euler, point))
        if abs(left - right) > 1e-9:
            failures.append(f"2j={j.twice_value}: covariance off by {left - right:.2e}")
    return CheckResult("normalization and SU(2) covariance", not failures, "; ".join(failures[:5]))


def run_verification(max_twice_j: int = 20, seed: int = 20240501) -> VerificationReport:
    """Run every check up to spin max_twice_j / 2 and collect the results."""
    if max_twice_j < 1:
        raise ValueError(f"max_twice_j must be >= 1, got {max_twice_j}")
    rng = make_generator(seed)
    report = VerificationReport(max_twice_j=max_twice_j, seed=seed)
    checks: list[Callable[[], CheckResult]] = [
        lambda: check_kernel_identities(max_twice_j),
        lambda: check_kernel_orderings(max_twice_j),
        check_reference_vertices,
        check_ball_radii,
        lambda: check_lambda_star(max_twice_j),
        lambda: check_permutation_oracle(max_twice_j, rng),
        lambda: check_outer_vertex(max_twice_j),
        lambda: check_normalization_and_covariance(max_twice_j, rng),
    ]
    for check in checks:
        result = check()
        report.checks.append(result)
        if result.passed:
            logger.info("PASS %s %s", result.name, result.detail)
        else:
            logger.error("FAIL %s: %s", result.name, result.detail)
    return report
