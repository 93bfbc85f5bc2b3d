from spinwig.orbits.haar import haar_unitary, make_generator
from spinwig.orbits.sampling import OrbitSampleReport, orbit_sample_min, polish_orbit_state
from spinwig.orbits.separability import (
    known_sas_inner_radius,
    sas_ball_lower_bound,
    sas_max_negativity_spin1,
)

__all__ = [
    "OrbitSampleReport",
    "haar_unitary",
    "known_sas_inner_radius",
    "make_generator",
    "orbit_sample_min",
    "polish_orbit_state",
    "sas_ball_lower_bound",
    "sas_max_negativity_spin1",
]
