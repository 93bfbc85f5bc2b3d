"""Spherical tensor operators T_LM and the state multipoles rho_LM = Tr[rho T_LM^dagger]."""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

import numpy as np

from spinwig.core.spin import HalfInteger
from spinwig.core.states import DensityMatrix
from spinwig.errors import InvalidSpinError
from spinwig.kernel.clebsch_gordan import clebsch_gordan


@lru_cache(maxsize=512)
def _tensor_operator(twice_j: int, L: int, M: int) -> np.ndarray:
    dim = twice_j + 1
    twice_m = list(range(twice_j, -twice_j - 1, -2))
    factor = np.sqrt((2 * L + 1) / dim)
    op = np.zeros((dim, dim))
    for row, tm_prime in enumerate(twice_m):
        for col, tm in enumerate(twice_m):
            if tm + 2 * M == tm_prime:
                op[row, col] = factor * clebsch_gordan(twice_j, tm, 2 * L, 2 * M, twice_j, tm_prime)
    op.setflags(write=False)
    return op


def tensor_operator(j: HalfInteger, L: int, M: int) -> np.ndarray:
    """(T_LM)_{m', m} = sqrt((2L+1)/(2j+1)) C^{j m'}_{j m; L M}, a read-only real matrix."""
    if not (0 <= L <= j.twice_value) or abs(M) > L:
        raise InvalidSpinError(f"Rank L={L}, M={M} invalid for j={j} (need 0 <= L <= 2j, |M| <= L)")
    return _tensor_operator(j.twice_value, L, M)


@dataclass(frozen=True, eq=False)
class Multipoles:
    """rho_LM stored in an array indexed [L, Lmax + M] with Lmax = 2j."""

    j: HalfInteger
    values: np.ndarray = field(repr=False)

    @property
    def lmax(self) -> int:
        return self.j.twice_value

    def get(self, L: int, M: int) -> complex:
        if not (0 <= L <= self.lmax) or abs(M) > L:
            raise InvalidSpinError(f"No multipole L={L}, M={M} for j={self.j}")
        return complex(self.values[L, self.lmax + M])

    def to_dict(self) -> dict[str, Any]:
        return {
            "twice_j": self.j.twice_value,
            "multipoles": [
                {"L": L, "M": M, "re": float(z.real), "im": float(z.imag)}
                for L in range(self.lmax + 1)
                for M in range(-L, L + 1)
                for z in (self.get(L, M),)
            ],
        }


def multipoles(rho: DensityMatrix) -> Multipoles:
    lmax = rho.j.twice_value
    values = np.zeros((lmax + 1, 2 * lmax + 1), dtype=complex)
    for L in range(lmax + 1):
        for M in range(-L, L + 1):
            # Tr[rho T^dagger] = sum_ik rho_ik conj(T_ik)
            values[L, lmax + M] = np.vdot(tensor_operator(rho.j, L, M), rho.entries)
    values.setflags(write=False)
    return Multipoles(rho.j, values)
