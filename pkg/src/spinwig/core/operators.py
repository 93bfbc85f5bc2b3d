"""Spin operators and SU(2) rotation operators in the Dicke basis (m = j first)."""

import logging
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from spinwig.core.spin import HalfInteger, sqrt_fraction

logger = logging.getLogger(__name__)

# Above this the alternating Wigner sum cancels terms larger than 1e7.
CLOSED_FORM_MAX_TWICE_J = 60


@lru_cache(maxsize=64)
def _spin_matrices(twice_j: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    j = twice_j / 2
    m = np.array([j - i for i in range(twice_j + 1)])
    jz = np.diag(m).astype(complex)
    # <m+1|J+|m> = sqrt(j(j+1) - m(m+1)), Condon-Shortley phases (real, positive)
    jplus = np.zeros((twice_j + 1, twice_j + 1), dtype=complex)
    for i in range(1, twice_j + 1):
        jplus[i - 1, i] = np.sqrt(j * (j + 1) - m[i] * (m[i] + 1))
    jminus = jplus.conj().T
    jx = (jplus + jminus) / 2
    jy = (jplus - jminus) / 2j
    for op in (jx, jy, jz):
        op.setflags(write=False)
    return jx, jy, jz


def spin_matrices(j: HalfInteger) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(Jx, Jy, Jz) for spin j; the arrays are shared and read-only."""
    return _spin_matrices(j.twice_value)


@lru_cache(maxsize=64)
def _d_terms(twice_j: int) -> tuple[tuple[int, int, float, int, int], ...]:
    """(row, col, coefficient, cos power, sin power) for every term of the Wigner sum."""
    if twice_j > CLOSED_FORM_MAX_TWICE_J:
        logger.warning(
            "Wigner d-matrix for 2j=%d exceeds 2j=%d; entries lose precision to cancellation",
            twice_j,
            CLOSED_FORM_MAX_TWICE_J,
        )
    f = math.factorial
    terms = []
    twice_m = list(range(twice_j, -twice_j - 1, -2))
    for row, tmp in enumerate(twice_m):
        for col, tm in enumerate(twice_m):
            shift = (tmp - tm) // 2  # m' - m
            jpm, jmm = (twice_j + tm) // 2, (twice_j - tm) // 2
            jpmp, jmmp = (twice_j + tmp) // 2, (twice_j - tmp) // 2
            numerator = f(jpmp) * f(jmmp) * f(jpm) * f(jmm)
            for k in range(max(0, -shift), min(jpm, jmmp) + 1):
                denominator = f(jpm - k) * f(k) * f(jmmp - k) * f(k + shift)
                coefficient = sqrt_fraction(Fraction(numerator, denominator * denominator))
                sign = -1.0 if (k + shift) % 2 else 1.0
                terms.append((row, col, sign * coefficient, twice_j - 2 * k - shift, 2 * k + shift))
    return tuple(terms)


def wigner_small_d(j: HalfInteger, beta: float) -> np.ndarray:
    """d^j_{m', m}(beta) = <j m'| exp(-i beta Jy) |j m> from the closed-form Wigner sum."""
    dim = j.dimension()
    c, s = math.cos(beta / 2), math.sin(beta / 2)
    d = np.zeros((dim, dim))
    for row, col, coefficient, cos_power, sin_power in _d_terms(j.twice_value):
        d[row, col] += coefficient * c**cos_power * s**sin_power
    return d


def rotation_operator(j: HalfInteger, alpha: float, beta: float, gamma: float) -> np.ndarray:
    """U(alpha, beta, gamma) = exp(-i alpha Jz) exp(-i beta Jy) exp(-i gamma Jz).

    Euler angles follow the z-y-z convention.
    """
    m = np.array([j.value - i for i in range(j.dimension())])
    left = np.exp(-1j * alpha * m)
    right = np.exp(-1j * gamma * m)
    return left[:, None] * wigner_small_d(j, beta) * right[None, :]
