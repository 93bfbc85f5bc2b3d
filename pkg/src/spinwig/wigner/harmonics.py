"""Orthonormal spherical harmonics with the Condon-Shortley phase.

Y_lm(theta, phi) = P_lm(cos theta) exp(i m phi), where P_lm already carries the
1/sqrt(4 pi) normalization and the (-1)^m sign. The normalized associated
Legendre functions are built column by column with the three-term recurrence

    P_ll     = (-1)^l a_ll (1 - x^2)^(l/2)
    P_{l,m}  = a_lm x P_{l-1,m} + b_lm P_{l-2,m}

which stays stable up to high degree.
"""

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=32)
def _recurrence_coefficients(lmax: int) -> tuple[np.ndarray, np.ndarray]:
    a = np.zeros((lmax + 1, lmax + 1))
    b = np.zeros((lmax + 1, lmax + 1))
    for m in range(lmax + 1):
        diag = 1.0
        for k in range(1, m + 1):
            diag *= (2 * k + 1) / (2 * k)
        a[m, m] = np.sqrt(diag / (4 * np.pi))
        for l in range(m + 1, lmax + 1):
            a[l, m] = np.sqrt((4 * l * l - 1) / (l * l - m * m))
            if l >= m + 2:
                b[l, m] = -np.sqrt(
                    (2 * l + 1) * ((l - 1) ** 2 - m * m) / ((2 * l - 3) * (l * l - m * m))
                )
    a.setflags(write=False)
    b.setflags(write=False)
    return a, b


def legendre_table(lmax: int, x: np.ndarray | float) -> np.ndarray:
    """P_lm(x) for 0 <= m <= l <= lmax, shape (lmax+1, lmax+1, *x.shape); zero where m > l."""
    x = np.asarray(x, dtype=float)
    a, b = _recurrence_coefficients(lmax)
    table = np.zeros((lmax + 1, lmax + 1) + x.shape)
    sine = np.sqrt(np.clip(1.0 - x * x, 0.0, None))
    for m in range(lmax + 1):
        sign = -1.0 if m % 2 else 1.0
        table[m, m] = sign * a[m, m] * sine**m
        if m + 1 <= lmax:
            table[m + 1, m] = a[m + 1, m] * x * table[m, m]
        for l in range(m + 2, lmax + 1):
            table[l, m] = a[l, m] * x * table[l - 1, m] + b[l, m] * table[l - 2, m]
    return table


def theta_factors(lmax: int, theta: np.ndarray | float) -> np.ndarray:
    """Real polar parts of Y_lm for all m, shape (lmax+1, 2*lmax+1, *theta.shape).

    Column lmax + m holds m; negative orders use P_{l,-m} = (-1)^m P_lm.
    """
    table = legendre_table(lmax, np.cos(np.asarray(theta, dtype=float)))
    full = np.zeros((lmax + 1, 2 * lmax + 1) + table.shape[2:])
    for m in range(lmax + 1):
        full[:, lmax + m] = table[:, m]
        if m:
            full[:, lmax - m] = (-1.0) ** m * table[:, m]
    return full


def spherical_harmonics(
    lmax: int, theta: np.ndarray | float, phi: np.ndarray | float
) -> np.ndarray:
    """Y_lm(theta, phi) for l <= lmax, indexed [l, lmax + m, ...]; entries with |m| > l are zero."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    polar = theta_factors(lmax, theta)
    orders = np.arange(-lmax, lmax + 1).reshape((1, -1) + (1,) * phi.ndim)
    return polar * np.exp(1j * orders * phi)
