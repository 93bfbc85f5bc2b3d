"""Tests for spectra, density matrices and Hilbert-Schmidt geometry."""

import math

import numpy as np
import pytest

from spinwig.core.spin import HalfInteger
from spinwig.core.states import (
    DensityMatrix,
    Spectrum,
    bloch_length,
    hs_distance,
    purity,
    spectrum_of,
)
from spinwig.errors import DimensionMismatchError, InvalidStateError
from spinwig.orbits.haar import haar_unitary

SPIN_ONE = HalfInteger(2)


class TestSpectrum:
    def test_length_must_match(self):
        with pytest.raises(DimensionMismatchError):
            Spectrum(SPIN_ONE, (0.5, 0.5))

    def test_must_sum_to_one(self):
        with pytest.raises(InvalidStateError):
            Spectrum(SPIN_ONE, (0.5, 0.3, 0.1))

    def test_rejects_nan(self):
        with pytest.raises(InvalidStateError):
            Spectrum(SPIN_ONE, (float("nan"), 0.5, 0.5))

    def test_negative_components_allowed_but_unphysical(self):
        spectrum = Spectrum(SPIN_ONE, (0.7, 0.4, -0.1))
        assert not spectrum.physical
        assert Spectrum(SPIN_ONE, (0.5, 0.3, 0.2)).physical

    def test_from_values_infers_spin(self):
        assert Spectrum.from_values([0.25] * 4).j == HalfInteger(3)

    def test_normalized(self):
        spectrum = Spectrum.normalized(SPIN_ONE, [2.0, 1.0, 1.0])
        assert spectrum.values == pytest.approx((0.5, 0.25, 0.25))

    def test_descending(self):
        assert Spectrum(SPIN_ONE, (0.2, 0.5, 0.3)).descending().values == (0.5, 0.3, 0.2)

    def test_distance_to_mixed(self):
        assert Spectrum.maximally_mixed(SPIN_ONE).distance_to_mixed() == 0.0
        pure = Spectrum(SPIN_ONE, (1.0, 0.0, 0.0))
        assert pure.distance_to_mixed() == pytest.approx(math.sqrt(2 / 3))

    def test_dict_round_trip(self):
        spectrum = Spectrum(SPIN_ONE, (0.5, 0.3, 0.2))
        assert Spectrum.from_dict(spectrum.to_dict()) == spectrum


class TestDensityMatrix:
    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            DensityMatrix(SPIN_ONE, np.eye(2) / 2)

    def test_not_hermitian(self):
        matrix = np.diag([0.5, 0.5, 0.0]).astype(complex)
        matrix[0, 1] = 0.1j
        with pytest.raises(InvalidStateError, match="Hermitian"):
            DensityMatrix(SPIN_ONE, matrix)

    def test_not_unit_trace(self):
        with pytest.raises(InvalidStateError, match="trace"):
            DensityMatrix(SPIN_ONE, np.eye(3) / 2)

    def test_not_psd(self):
        with pytest.raises(InvalidStateError, match="positive"):
            DensityMatrix(SPIN_ONE, np.diag([0.7, 0.4, -0.1]))

    def test_entries_read_only(self):
        rho = DensityMatrix.maximally_mixed(SPIN_ONE)
        with pytest.raises(ValueError):
            rho.entries[0, 0] = 1.0

    def test_dicke(self):
        rho = DensityMatrix.dicke(SPIN_ONE, 0)
        assert rho.entries[1, 1] == 1.0
        assert purity(rho) == pytest.approx(1.0)

    def test_pure_normalizes(self):
        rho = DensityMatrix.pure(HalfInteger(1), [3.0, 4.0])
        assert np.trace(rho.entries).real == pytest.approx(1.0)
        assert rho.entries[0, 0].real == pytest.approx(0.36)

    def test_dict_round_trip(self):
        rng = np.random.default_rng(3)
        rho = DensityMatrix.from_unitary_orbit(
            Spectrum(SPIN_ONE, (0.6, 0.3, 0.1)), haar_unitary(3, rng=rng)
        )
        back = DensityMatrix.from_dict(rho.to_dict())
        assert np.allclose(back.entries, rho.entries)

    def test_from_dict_rejects_bad_entries(self):
        with pytest.raises(InvalidStateError):
            DensityMatrix.from_dict({"twice_j": 1, "matrix": [[1, 0], [0, 0]]})


def _characteristic_roots(rho: DensityMatrix) -> tuple[float, ...]:
    """Eigenvalues via Newton's identities and the companion matrix (np.roots)."""
    dim = rho.entries.shape[0]
    power_sums = [0.0]
    power = np.eye(dim)
    for _ in range(dim):
        power = power @ rho.entries
        power_sums.append(np.trace(power).real)
    elementary = [1.0]
    for k in range(1, dim + 1):
        total = sum((-1) ** (i - 1) * elementary[k - i] * power_sums[i] for i in range(1, k + 1))
        elementary.append(total / k)
    coefficients = [(-1) ** k * e for k, e in enumerate(elementary)]
    return tuple(sorted(np.roots(coefficients).real, reverse=True))


class TestDerivedQuantities:
    def test_spectrum_of_orbit_state(self):
        spectrum = Spectrum(HalfInteger(3), (0.4, 0.3, 0.2, 0.1))
        rho = DensityMatrix.from_unitary_orbit(spectrum, haar_unitary(4, seed=11))
        assert spectrum_of(rho).values == pytest.approx(spectrum.values, abs=1e-12)

    @pytest.mark.parametrize("values", [(0.7, 0.3), (0.5, 0.3, 0.2), (0.5, 0.3, 0.15, 0.05)])
    def test_spectrum_matches_characteristic_roots(self, values):
        dim = len(values)
        spectrum = Spectrum(HalfInteger(dim - 1), values)
        rho = DensityMatrix.from_unitary_orbit(spectrum, haar_unitary(dim, seed=dim))
        assert spectrum_of(rho).values == pytest.approx(_characteristic_roots(rho), abs=1e-10)

    @pytest.mark.parametrize("perm", [(1, 0, 2, 3), (3, 2, 1, 0), (2, 0, 3, 1)])
    def test_spectrum_ignores_basis_permutation(self, perm):
        spectrum = Spectrum(HalfInteger(3), (0.5, 0.3, 0.15, 0.05))
        rho = DensityMatrix.from_unitary_orbit(spectrum, haar_unitary(4, seed=21))
        p = np.eye(4)[list(perm)]
        permuted = DensityMatrix(rho.j, p @ rho.entries @ p.T)
        assert spectrum_of(permuted).values == pytest.approx(spectrum_of(rho).values, abs=1e-12)

    def test_hs_distance_equals_spectral_distance(self):
        spectrum = Spectrum(HalfInteger(3), (0.4, 0.3, 0.2, 0.1))
        rho = DensityMatrix.from_unitary_orbit(spectrum, haar_unitary(4, seed=5))
        assert hs_distance(rho) == pytest.approx(spectrum.distance_to_mixed())

    def test_mixed_state(self):
        rho = DensityMatrix.maximally_mixed(SPIN_ONE)
        assert purity(rho) == pytest.approx(1 / 3)
        assert hs_distance(rho) == pytest.approx(0.0, abs=1e-12)

    def test_bloch_length(self):
        rho = DensityMatrix.diagonal(Spectrum(HalfInteger(1), (0.8, 0.2)))
        assert bloch_length(rho) == pytest.approx(0.6)

    def test_bloch_length_needs_qubit(self):
        with pytest.raises(DimensionMismatchError):
            bloch_length(DensityMatrix.maximally_mixed(SPIN_ONE))
