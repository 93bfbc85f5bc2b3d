from spinwig.wigner.function import GridIntegral, integrate, wigner_value, wigner_values
from spinwig.wigner.grid import SphereGrid
from spinwig.wigner.multipoles import Multipoles, multipoles, tensor_operator
from spinwig.wigner.negativity import (
    NegativeVolume,
    coherent_mixture,
    coherent_state,
    negative_volume,
)
from spinwig.wigner.rotation import (
    inverse_rotate_point,
    rotate_point,
    rotate_state,
    wigner_small_d,
)

__all__ = [
    "GridIntegral",
    "Multipoles",
    "NegativeVolume",
    "SphereGrid",
    "coherent_mixture",
    "coherent_state",
    "integrate",
    "inverse_rotate_point",
    "multipoles",
    "negative_volume",
    "rotate_point",
    "rotate_state",
    "tensor_operator",
    "wigner_small_d",
    "wigner_value",
    "wigner_values",
]
