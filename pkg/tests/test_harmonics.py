"""Tests for spherical harmonics."""

import math

import numpy as np
import pytest

from spinwig.core.spin import HalfInteger
from spinwig.wigner.grid import SphereGrid
from spinwig.wigner.harmonics import legendre_table, spherical_harmonics, theta_factors


class TestLowOrders:
    def test_closed_forms(self):
        theta, phi = 0.8, 2.1
        y = spherical_harmonics(1, theta, phi)
        assert y[0, 1] == pytest.approx(1 / math.sqrt(4 * math.pi))
        assert y[1, 1] == pytest.approx(math.sqrt(3 / (4 * math.pi)) * math.cos(theta))
        phase = complex(math.cos(phi), math.sin(phi))
        expected = -math.sqrt(3 / (8 * math.pi)) * math.sin(theta) * phase
        assert y[1, 2] == pytest.approx(expected)

    def test_negative_orders(self):
        y = spherical_harmonics(3, 1.3, 0.4)
        for l in range(4):
            for m in range(1, l + 1):
                assert y[l, 3 - m] == pytest.approx((-1) ** m * np.conj(y[l, 3 + m]))

    def test_zero_above_degree(self):
        y = spherical_harmonics(2, 0.5, 0.5)
        assert y[0, 0] == 0
        assert y[1, 4] == 0


class TestLegendre:
    def test_shape(self):
        x = np.linspace(-1, 1, 7)
        assert legendre_table(4, x).shape == (5, 5, 7)
        assert theta_factors(4, np.arccos(x)).shape == (5, 9, 7)

    def test_poles(self):
        table = legendre_table(6, 1.0)
        for l in range(7):
            assert table[l, 0] == pytest.approx(math.sqrt((2 * l + 1) / (4 * math.pi)))
            assert np.allclose(table[l, 1:], 0.0)

    def test_high_degree_stays_finite(self):
        table = legendre_table(120, np.linspace(-1, 1, 11))
        assert np.all(np.isfinite(table))


class TestOrthonormality:
    def test_grid_inner_products(self):
        lmax = 6
        grid = SphereGrid.for_spin(HalfInteger(1), order=2 * lmax)
        y = spherical_harmonics(lmax, grid.theta, grid.phi)
        w = grid.sphere_weights
        for l in range(lmax + 1):
            for m in range(-l, l + 1):
                for lp in range(lmax + 1):
                    for mp in range(-lp, lp + 1):
                        overlap = np.sum(w * y[l, lmax + m] * np.conj(y[lp, lmax + mp]))
                        expected = 1.0 if (l, m) == (lp, mp) else 0.0
                        assert abs(overlap - expected) < 1e-12
