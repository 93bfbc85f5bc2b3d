"""Tests for kernel eigenvalues and their identities."""

import math

import numpy as np
import pytest

from spinwig.core.spin import NORTH_POLE, HalfInteger, PhasePoint
from spinwig.core.states import DensityMatrix
from spinwig.errors import InvalidSpinError, OutOfRangeError
from spinwig.kernel.spectrum import (
    extreme_eigenvalue_trend,
    kernel_eigenvalue,
    kernel_matrix,
    kernel_spectrum,
    verify_kernel_identities,
)

REFERENCE = {
    1: (1.366025, -0.366025),
    2: (1.567486, -0.720759, 0.153273),
    3: (1.685768, -1.002780, 0.384746, -0.067734),
    4: (1.758943, -1.212071, 0.627618, -0.205306, 0.030816),
}


class TestKernelSpectrum:
    @pytest.mark.parametrize("twice_j", sorted(REFERENCE))
    def test_reference_values(self, twice_j):
        delta = kernel_spectrum(HalfInteger(twice_j))
        assert delta.values == pytest.approx(REFERENCE[twice_j], abs=1e-6)

    def test_spin_half_closed_form(self):
        delta = kernel_spectrum(HalfInteger(1))
        assert delta.values[0] == pytest.approx((1 + math.sqrt(3)) / 2, abs=1e-15)
        assert delta.values[1] == pytest.approx((1 - math.sqrt(3)) / 2, abs=1e-15)

    def test_orderings(self):
        delta = kernel_spectrum(HalfInteger(3))
        assert delta.ascending == tuple(sorted(delta.values))
        assert delta.descending == tuple(sorted(delta.values, reverse=True))
        assert delta.ascending_order[0] == 1  # m = j - 1 is the most negative
        assert delta.minimum == delta.values[1]

    def test_value_by_m(self):
        delta = kernel_spectrum(HalfInteger(2))
        assert delta.value(2) == delta.values[0]
        assert delta.value(-2) == delta.values[2]
        assert kernel_eigenvalue(HalfInteger(2), 0) == delta.values[1]

    def test_single_eigenvalue_checks_m(self):
        with pytest.raises(InvalidSpinError):
            kernel_eigenvalue(HalfInteger(2), 1)

    @pytest.mark.parametrize("twice_j", range(1, 7))
    def test_husimi_is_a_projector(self, twice_j):
        delta = kernel_spectrum(HalfInteger(twice_j), -1.0)
        expected = (1.0,) + (0.0,) * twice_j
        assert delta.values == pytest.approx(expected, abs=1e-12)

    def test_glauber_spin_half(self):
        assert kernel_spectrum(HalfInteger(1), 1.0).values == pytest.approx((2.0, -1.0), abs=1e-14)

    @pytest.mark.parametrize("s", [-0.5, 0.25, 1.0])
    def test_unit_trace_for_every_s(self, s):
        assert math.fsum(kernel_spectrum(HalfInteger(4), s).values) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("twice_j", [1, 2, 5, 10])
    @pytest.mark.parametrize("s", [-1e-6, 1e-6])
    def test_continuous_at_the_wigner_kernel(self, twice_j, s):
        j = HalfInteger(twice_j)
        nearby = np.array(kernel_spectrum(j, s).values)
        wigner = np.array(kernel_spectrum(j, 0.0).values)
        assert np.max(np.abs(nearby - wigner)) < 1e-3

    @pytest.mark.parametrize("s", [-1.5, 1.01, float("nan")])
    def test_s_out_of_range(self, s):
        with pytest.raises(OutOfRangeError):
            kernel_spectrum(HalfInteger(2), s)

    def test_to_dict(self):
        d = kernel_spectrum(HalfInteger(1)).to_dict()
        assert d["twice_j"] == 1
        assert d["twice_m"] == [1, -1]
        assert len(d["values"]) == 2


class TestIdentities:
    @pytest.mark.parametrize("twice_j", range(1, 41))
    def test_sum_and_square_sum(self, twice_j):
        report = verify_kernel_identities(HalfInteger(twice_j))
        assert report.sum_residual < 1e-10
        assert report.square_sum_residual < 1e-8
        assert report.pattern_holds, report.violations

    def test_to_dict(self):
        d = verify_kernel_identities(HalfInteger(2)).to_dict()
        assert d["pattern_holds"] is True
        assert d["violations"] == []


class TestKernelMatrix:
    def test_north_pole_is_diagonal(self):
        j = HalfInteger(3)
        matrix = kernel_matrix(j, NORTH_POLE)
        assert np.allclose(matrix, np.diag(kernel_spectrum(j).values))

    def test_hermitian_unit_trace(self):
        matrix = kernel_matrix(HalfInteger(4), PhasePoint(1.1, 2.3))
        assert np.allclose(matrix, matrix.conj().T)
        assert np.trace(matrix).real == pytest.approx(1.0)

    def test_spectrum_is_rotation_invariant(self):
        j = HalfInteger(4)
        eigenvalues = np.linalg.eigvalsh(kernel_matrix(j, PhasePoint(0.7, 5.0)))
        assert eigenvalues == pytest.approx(sorted(kernel_spectrum(j).values), abs=1e-12)

    def test_highest_weight_at_north_pole(self):
        j = HalfInteger(2)
        rho = DensityMatrix.dicke(j, 2)
        value = np.trace(rho.entries @ kernel_matrix(j, NORTH_POLE)).real
        assert value == pytest.approx(kernel_spectrum(j).values[0])


class TestExtremeTrend:
    def test_values_approach_limits(self):
        trend = extreme_eigenvalue_trend([2, 20, 40])
        largest = [t.largest for t in trend]
        most_negative = [t.most_negative for t in trend]
        cutoffs = [t.critical_w_min for t in trend]
        assert largest == sorted(largest)
        assert most_negative == sorted(most_negative, reverse=True)
        assert cutoffs == sorted(cutoffs, reverse=True)
        assert cutoffs[0] == pytest.approx(-0.386909, abs=1e-6)
        assert cutoffs[-1] == pytest.approx(-0.487887, abs=1e-6)
        assert trend[1].most_negative == pytest.approx(-1.850625, abs=1e-6)

    def test_second_eigenvalue_approaches_minus_two(self):
        # integer spins j = 10 .. 25
        second = [kernel_spectrum(HalfInteger(tj)).values[1] for tj in range(20, 51, 2)]
        gaps = [abs(d + 2.0) for d in second]
        assert all(d > -2.0 for d in second)
        assert all(b < a for a, b in zip(gaps, gaps[1:]))

    def test_rejects_spin_zero(self):
        with pytest.raises(OutOfRangeError):
            extreme_eigenvalue_trend([0])
