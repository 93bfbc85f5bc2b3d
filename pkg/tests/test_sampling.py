"""Tests for Monte-Carlo sampling of unitary orbits."""

import itertools
import logging
import math

import numpy as np
import pytest

from spinwig.core.spin import NORTH_POLE, HalfInteger, PhasePoint
from spinwig.core.states import DensityMatrix, Spectrum, spectrum_of
from spinwig.kernel.spectrum import kernel_spectrum
from spinwig.orbits.haar import haar_unitary, make_generator
from spinwig.orbits.sampling import grid_kernels, orbit_sample_min, polish_orbit_state
from spinwig.polytope.balls import lambda_star
from spinwig.polytope.membership import orbit_min
from spinwig.wigner.function import wigner_value
from spinwig.wigner.grid import SphereGrid

SPIN_ONE = HalfInteger(2)
SPECTRUM = Spectrum(SPIN_ONE, (0.6, 0.3, 0.1))


class TestOrbitSampleMin:
    def test_never_below_analytic_minimum(self):
        report = orbit_sample_min(SPECTRUM, trials=200, seed=1)
        assert report.empirical_min >= report.analytic_min - 1e-9
        assert report.worst_gap == pytest.approx(report.empirical_min - report.analytic_min)
        assert 0 <= report.best_trial < 200

    def test_spin_half_reaches_the_bound(self):
        j = HalfInteger(1)
        report = orbit_sample_min(Spectrum(j, (0.9, 0.1)), trials=300, seed=3)
        assert report.worst_gap < 5e-3

    def test_independent_of_thread_count(self):
        single = orbit_sample_min(SPECTRUM, trials=64, seed=9, threads=1)
        pooled = orbit_sample_min(SPECTRUM, trials=64, seed=9, threads=3)
        assert single.to_dict() == pooled.to_dict()

    def test_deterministic(self):
        a = orbit_sample_min(SPECTRUM, trials=20, seed=4)
        b = orbit_sample_min(SPECTRUM, trials=20, seed=4)
        assert a.empirical_min == b.empirical_min
        assert a.best_node == b.best_node

    @pytest.mark.parametrize("twice_j", [2, 3])
    def test_polish_closes_the_gap(self, twice_j):
        j = HalfInteger(twice_j)
        values = np.linspace(2.0, 1.0, j.dimension())
        spectrum = Spectrum.normalized(j, values)
        report = orbit_sample_min(spectrum, trials=30, seed=11, polish=True)
        assert report.polished_min is not None
        assert report.polished_min <= report.empirical_min + 1e-12
        assert report.polished_min == pytest.approx(report.analytic_min, abs=1e-6)

    def test_rejects_zero_trials(self):
        with pytest.raises(ValueError):
            orbit_sample_min(SPECTRUM, trials=0, seed=1)

    def test_no_warning_for_boundary_state(self, caplog):
        star = lambda_star(SPIN_ONE, 0.0)
        with caplog.at_level(logging.WARNING, logger="spinwig.orbits.sampling"):
            report = orbit_sample_min(star, trials=50, seed=2)
        assert report.analytic_min == pytest.approx(0.0, abs=1e-12)
        assert "undercuts" not in caplog.text

    def test_to_dict(self):
        d = orbit_sample_min(SPECTRUM, trials=5, seed=0).to_dict()
        assert d["trials"] == 5
        assert set(d["best_node"]) == {"theta", "phi"}
        assert d["empirical_min"] == min(d["sampled_min"], d["polished_min"])

    def test_without_polish_reports_plain_sampling(self):
        report = orbit_sample_min(SPECTRUM, trials=20, seed=4, polish=False)
        assert report.polished_min is None
        assert report.empirical_min == report.sampled_min

    def test_maximally_mixed_is_flat(self):
        j = HalfInteger(3)
        report = orbit_sample_min(Spectrum.maximally_mixed(j), trials=10, seed=1)
        assert report.sampled_min == pytest.approx(0.25, abs=1e-12)
        assert report.empirical_min == pytest.approx(0.25, abs=1e-12)

    @pytest.mark.parametrize(
        "twice_j,values",
        [
            (1, (0.9, 0.1)),
            (2, (0.6, 0.3, 0.1)),
            (3, (0.4, 0.3, 0.2, 0.1)),
            (4, (0.35, 0.25, 0.2, 0.12, 0.08)),
        ],
    )
    def test_two_thousand_trials_reach_the_bound(self, twice_j, values):
        spectrum = Spectrum(HalfInteger(twice_j), values)
        report = orbit_sample_min(spectrum, trials=2000, seed=20240501)
        assert report.worst_gap >= -1e-9
        assert report.worst_gap < 5e-3
        assert report.sampled_min >= report.empirical_min

    @pytest.mark.slow
    def test_many_trials_spin_three_halves(self):
        j = HalfInteger(3)
        spectrum = Spectrum(j, (0.4, 0.3, 0.2, 0.1))
        report = orbit_sample_min(spectrum, trials=2000, seed=5, threads=4, polish=True)
        assert report.worst_gap >= -1e-9
        assert report.polished_min == pytest.approx(report.analytic_min, abs=1e-6)


class TestPolish:
    def test_reaches_sorted_diagonal_value(self):
        j = HalfInteger(2)
        grid = SphereGrid.for_spin(j, order=2)
        kernel = grid_kernels(j, grid)[0]
        lam = np.array([0.5, 0.3, 0.2])
        rng = np.random.default_rng(0)
        g = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        q, _ = np.linalg.qr(g)
        rho = polish_orbit_state((q * lam) @ q.conj().T, kernel)
        expected = float(np.sort(lam)[::-1] @ np.sort(kernel_spectrum(j).as_array()))
        assert np.real(np.trace(rho @ kernel)) == pytest.approx(expected, abs=1e-9)
        assert np.linalg.eigvalsh(rho) == pytest.approx(np.sort(lam), abs=1e-10)

    def test_fixed_point_is_left_alone(self):
        kernel = np.diag([1.5, -0.5]).astype(complex)
        rho = np.diag([0.2, 0.8]).astype(complex)
        assert np.allclose(polish_orbit_state(rho, kernel), rho)


class TestOrbitBound:
    @pytest.mark.parametrize("twice_j", [2, 3])
    def test_no_rotated_state_dips_below_orbit_min(self, twice_j):
        j = HalfInteger(twice_j)
        delta = kernel_spectrum(j)
        rng = make_generator(twice_j)
        spectrum = Spectrum.normalized(j, rng.dirichlet(np.ones(j.dimension())))
        points = [
            PhasePoint.normalized(math.acos(rng.uniform(-1, 1)), rng.uniform(0, 2 * math.pi))
            for _ in range(10)
        ]
        for _ in range(20):
            rho = DensityMatrix.from_unitary_orbit(spectrum, haar_unitary(j.dimension(), rng=rng))
            bound = orbit_min(spectrum_of(rho), delta) - 1e-9
            assert all(wigner_value(rho, omega) >= bound for omega in points)

    def test_permutations_reach_rearranged_sums(self):
        j = HalfInteger(2)
        delta = kernel_spectrum(j)
        spectrum = Spectrum(j, (0.6, 0.3, 0.1))
        values = []
        for perm in itertools.permutations(range(3)):
            rho = DensityMatrix.from_unitary_orbit(spectrum, np.eye(3)[list(perm)])
            expected = math.fsum(spectrum.values[p] * d for p, d in zip(perm, delta.values))
            value = wigner_value(rho, NORTH_POLE)
            assert value == pytest.approx(expected, abs=1e-12)
            values.append(value)
        assert min(values) == pytest.approx(orbit_min(spectrum, delta), abs=1e-12)
