"""Exact Clebsch-Gordan coefficients via the Racah single-sum formula.

All quantum numbers are passed doubled (tj = 2j, tm = 2m) so half-integers
stay exact. The squared coefficient is computed as a Fraction of big integers
and rounded to float once, at the final square root.
"""

import math
from fractions import Fraction
from functools import lru_cache

from spinwig.core.spin import sqrt_fraction
from spinwig.errors import InvalidSpinError


@lru_cache(maxsize=None)
def _factorial(n: int) -> int:
    return math.factorial(n)


def _check_pair(tj: int, tm: int, label: str) -> None:
    if tj < 0:
        raise InvalidSpinError(f"{label}: 2j must be non-negative, got {tj}")
    if (tj - tm) % 2:
        raise InvalidSpinError(f"{label}: 2m={tm} has the wrong parity for 2j={tj}")


def clebsch_gordan_squared(
    tj1: int, tm1: int, tj2: int, tm2: int, tj: int, tm: int
) -> tuple[int, Fraction]:
    """Return (sign, C^2) for C^{J,M}_{j1,m1;j2,m2} in the Condon-Shortley convention.

    Selection-rule violations give (0, 0). Parity mismatches raise InvalidSpinError.
    """
    _check_pair(tj1, tm1, "j1")
    _check_pair(tj2, tm2, "j2")
    _check_pair(tj, tm, "J")
    if (tj1 + tj2 + tj) % 2:
        raise InvalidSpinError(f"j1 + j2 + J must be an integer (2j: {tj1}, {tj2}, {tj})")
    if (
        tm1 + tm2 != tm
        or tj > tj1 + tj2
        or tj < abs(tj1 - tj2)
        or abs(tm1) > tj1
        or abs(tm2) > tj2
        or abs(tm) > tj
    ):
        return 0, Fraction(0)

    # Integer arguments of the factorials in the Racah sum
    a = (tj1 + tj2 - tj) // 2  # j1 + j2 - J
    b = (tj1 - tm1) // 2  # j1 - m1
    c = (tj2 + tm2) // 2  # j2 + m2
    d = (tj - tj2 + tm1) // 2  # J - j2 + m1
    e = (tj - tj1 - tm2) // 2  # J - j1 - m2
    kmin = max(0, -d, -e)
    kmax = min(a, b, c)
    if kmin > kmax:
        return 0, Fraction(0)

    # Accumulate consecutive terms through their ratio to avoid recomputing factorials
    c1, c2, c3, c4, c5, c6 = kmin, a - kmin, b - kmin, c - kmin, d + kmin, e + kmin
    term = Fraction(
        (-1) ** kmin,
        _factorial(c1) * _factorial(c2) * _factorial(c3)
        * _factorial(c4) * _factorial(c5) * _factorial(c6),
    )
    total = term
    for _ in range(kmin + 1, kmax + 1):
        c1 += 1
        c5 += 1
        c6 += 1
        term *= Fraction(-c2 * c3 * c4, c1 * c5 * c6)
        c2 -= 1
        c3 -= 1
        c4 -= 1
        total += term

    if total == 0:
        return 0, Fraction(0)
    prefactor = Fraction(
        (tj + 1)
        * _factorial((tj + tj1 - tj2) // 2)
        * _factorial((tj - tj1 + tj2) // 2)
        * _factorial(a),
        _factorial((tj1 + tj2 + tj) // 2 + 1),
    )
    squared = (
        prefactor
        * _factorial((tj + tm) // 2)
        * _factorial((tj - tm) // 2)
        * _factorial(b)
        * _factorial((tj1 + tm1) // 2)
        * _factorial((tj2 - tm2) // 2)
        * _factorial(c)
        * total**2
    )
    return (1 if total > 0 else -1), squared


@lru_cache(maxsize=65536)
def clebsch_gordan(tj1: int, tm1: int, tj2: int, tm2: int, tj: int, tm: int) -> float:
    """C^{J,M}_{j1,m1;j2,m2} = <j1 m1; j2 m2 | J M> with doubled arguments.

    Example: clebsch_gordan(1, 1, 1, -1, 2, 0) == 1/sqrt(2).
    """
    sign, squared = clebsch_gordan_squared(tj1, tm1, tj2, tm2, tj, tm)
    return sign * sqrt_fraction(squared)
