"""Exact half-integer spin quantum numbers and points on the sphere.

A spin j is stored as the integer 2j. Magnetic quantum numbers use the same
encoding (2m), and the Dicke basis is ordered m = j, j-1, ..., -j so that
row/column i corresponds to m = j - i.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from spinwig.errors import InvalidSpinError


@dataclass(frozen=True, order=True)
class HalfInteger:
    """A non-negative spin quantum number j, stored as twice_value = 2j."""

    twice_value: int

    def __post_init__(self) -> None:
        if isinstance(self.twice_value, bool) or not isinstance(self.twice_value, int):
            raise InvalidSpinError(f"twice_value must be an int, got {self.twice_value!r}")
        if self.twice_value < 0:
            raise InvalidSpinError(f"Spin must be non-negative, got 2j={self.twice_value}")

    @classmethod
    def parse(cls, text: str) -> "HalfInteger":
        """Parse "3/2", "1.5", "1" or "2/1". Denominators other than 1 and 2 are rejected."""
        raw = text.strip()
        num, sep, den = raw.partition("/")
        try:
            if sep:
                denominator = int(den)
                value = Fraction(int(num), denominator)
            else:
                denominator = 1
                value = Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidSpinError(f"Cannot parse spin {raw!r}") from exc
        if denominator not in (1, 2):
            raise InvalidSpinError(f"Spin denominator must be 1 or 2, got {raw!r}")
        twice = 2 * value
        if twice.denominator != 1:
            raise InvalidSpinError(f"Spin must be a multiple of 1/2, got {raw!r}")
        return cls(int(twice))

    @classmethod
    def from_dimension(cls, dim: int) -> "HalfInteger":
        if dim < 1:
            raise InvalidSpinError(f"Dimension must be >= 1, got {dim}")
        return cls(dim - 1)

    @property
    def value(self) -> float:
        return self.twice_value / 2

    def dimension(self) -> int:
        return self.twice_value + 1

    def twice_m_values(self) -> tuple[int, ...]:
        """Twice the magnetic quantum numbers in Dicke order (m = j first)."""
        return tuple(range(self.twice_value, -self.twice_value - 1, -2))

    def index_of(self, twice_m: int) -> int:
        """Dicke-basis index of the state with magnetic number m = twice_m / 2."""
        if abs(twice_m) > self.twice_value or (self.twice_value - twice_m) % 2:
            raise InvalidSpinError(
                f"2m={twice_m} is not a valid projection for 2j={self.twice_value}"
            )
        return (self.twice_value - twice_m) // 2

    def __str__(self) -> str:
        if self.twice_value % 2:
            return f"{self.twice_value}/2"
        return str(self.twice_value // 2)


@dataclass(frozen=True)
class PhasePoint:
    """A point (theta, phi) on the unit sphere, in radians."""

    theta: float
    phi: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.theta <= math.pi):
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        if not (0.0 <= self.phi < 2 * math.pi):
            raise ValueError(f"phi must lie in [0, 2pi), got {self.phi}")

    @classmethod
    def normalized(cls, theta: float, phi: float) -> "PhasePoint":
        """Build a point from unconstrained angles, wrapping phi into [0, 2pi)."""
        theta = min(max(theta, 0.0), math.pi)
        phi = math.fmod(phi, 2 * math.pi)
        if phi < 0:
            phi += 2 * math.pi
        if phi >= 2 * math.pi:
            phi = 0.0
        return cls(theta, phi)

    @classmethod
    def from_vector(cls, vector: np.ndarray) -> "PhasePoint":
        x, y, z = (float(c) for c in vector)
        norm = math.sqrt(x * x + y * y + z * z)
        if norm == 0.0:
            raise ValueError("Cannot place the zero vector on the sphere")
        theta = math.acos(min(1.0, max(-1.0, z / norm)))
        return cls.normalized(theta, math.atan2(y, x))

    def to_vector(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])


def sqrt_fraction(value: Fraction) -> float:
    """Square root of a non-negative rational, correct to within one ulp."""
    if value < 0:
        raise ValueError(f"Cannot take the square root of {value}")
    if value == 0:
        return 0.0
    num, den = value.numerator, value.denominator
    # enough fractional bits that the integer square root keeps ~64 significant bits
    shift = 64 + max(0, (den.bit_length() - num.bit_length()) // 2 + 1)
    root = math.isqrt((num << (2 * shift)) // den)
    return root / (1 << shift)


NORTH_POLE = PhasePoint(0.0, 0.0)
