"""Lattice scans of the probability simplex for plotting polytopes, balls and SAS regions.

Lattice points are the integer compositions of ``resolution`` into 2j+1 parts,
divided by ``resolution``.
"""

import logging
import math
from dataclasses import dataclass, field
from itertools import permutations
from typing import Any, Iterator, Sequence

from spinwig.core.spin import HalfInteger
from spinwig.core.states import Spectrum
from spinwig.errors import DimensionMismatchError, OutOfRangeError
from spinwig.geometry.simplex import SimplexChart, bary_to_cart
from spinwig.kernel.spectrum import kernel_spectrum
from spinwig.orbits.separability import sas_max_negativity_spin1
from spinwig.polytope.balls import inner_radius, outer_radius
from spinwig.polytope.membership import check_w_min, orbit_min
from spinwig.tolerances import get_tolerances

logger = logging.getLogger(__name__)

MAX_SCAN_TWICE_J = 3

# column name -> meaning
SCAN_COLUMNS = {
    "margin": "orbit minimum of W minus w_min",
    "awb": "1 if the spectrum is absolutely Wigner bounded, else 0",
    "hyperplane": "distance to the nearest permuted hyperplane lambda . Delta_pi = w_min",
    "ball": "0 inside the inner ball, 1 between the balls, 2 outside the outer ball",
    "sas": "orbit-maximal partial-transpose negativity (j = 1 only)",
    "hs": "Hilbert-Schmidt distance to the maximally mixed state",
}
DEFAULT_COLUMNS = ("margin", "awb")


@dataclass
class ScanTable:
    header: list[str]
    rows: list[list[float]] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {"header": list(self.header), "rows": [list(r) for r in self.rows]}


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Integer compositions of total into parts non-negative parts, first part descending."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def parse_columns(text: str | None) -> tuple[str, ...]:
    if not text:
        return DEFAULT_COLUMNS
    names = tuple(name.strip() for name in text.split(",") if name.strip())
    unknown = [n for n in names if n not in SCAN_COLUMNS]
    if unknown:
        raise ValueError(
            f"Unknown scan column(s): {', '.join(unknown)}. "
            f"Choose from {', '.join(SCAN_COLUMNS)}."
        )
    return names


def simplex_scan(
    j: HalfInteger, resolution: int, w_min: float, columns: Sequence[str] = DEFAULT_COLUMNS
) -> ScanTable:
    if not 1 <= j.twice_value <= MAX_SCAN_TWICE_J:
        raise DimensionMismatchError(
            f"Dense simplex scans support 2j in 1..{MAX_SCAN_TWICE_J} (2D/3D charts), "
            f"got 2j={j.twice_value}"
        )
    if resolution < 1:
        raise OutOfRangeError(f"resolution must be >= 1, got {resolution}")
    for name in columns:
        if name not in SCAN_COLUMNS:
            raise ValueError(f"Unknown scan column: {name}")
    if "sas" in columns and j.twice_value != 2:
        raise DimensionMismatchError("The sas column is available for j=1 only")

    delta = kernel_spectrum(j, 0.0)
    check_w_min(j, w_min, delta)
    chart = SimplexChart.for_spin(j)
    dim = j.dimension()
    tol = get_tolerances().membership
    r_in = inner_radius(j, w_min)
    r_out = outer_radius(j, w_min, delta)
    hyperplanes = sorted(set(permutations(delta.values)))
    normal_length = math.sqrt(math.fsum(d * d for d in delta.values) - 1.0 / dim)

    header = [f"lambda_{i}" for i in range(dim)] + [f"x_{k}" for k in range(chart.dimension)]
    header += list(columns)
    table = ScanTable(header)
    for parts in compositions(resolution, dim):
        spectrum = Spectrum(j, tuple(p / resolution for p in parts))
        row: list[float] = list(spectrum.values) + bary_to_cart(spectrum, chart).tolist()
        margin = orbit_min(spectrum, delta) - w_min
        distance = spectrum.distance_to_mixed()
        for name in columns:
            if name == "margin":
                row.append(margin)
            elif name == "awb":
                row.append(1 if margin >= -tol else 0)
            elif name == "hyperplane":
                gap = min(
                    abs(math.fsum(l * d for l, d in zip(spectrum.values, h)) - w_min)
                    for h in hyperplanes
                )
                row.append(gap / normal_length)
            elif name == "ball":
                row.append(0 if distance <= r_in + tol else (1 if distance <= r_out + tol else 2))
            elif name == "sas":
                row.append(sas_max_negativity_spin1(spectrum))
            elif name == "hs":
                row.append(distance)
        table.rows.append(row)
    logger.debug("Scanned %d lattice points for j=%s", len(table.rows), j)
    return table
