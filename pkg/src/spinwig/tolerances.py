"""Numerical tolerances used across the package.

The active set is a module-level value that the CLI replaces once at startup
from configuration. Library callers change it with configure_tolerances and
restore the defaults with reset_tolerances; only majorizes takes a per-call
``tol``.
"""

from dataclasses import asdict, dataclass, fields, replace

from spinwig.errors import ConfigError


@dataclass(frozen=True)
class Tolerances:
    structural: float = 1e-12  # hermiticity, unit trace, spectrum normalization
    psd: float = 1e-10  # smallest admissible density-matrix eigenvalue is -psd
    membership: float = 1e-9  # AWB margin
    imaginary: float = 1e-8  # imaginary residue of a Wigner value
    dedup_decimals: int = 12  # rounding used to deduplicate permuted vertices

    def to_dict(self) -> dict:
        return asdict(self)


_active = Tolerances()


def get_tolerances() -> Tolerances:
    return _active


def configure_tolerances(**overrides: float) -> Tolerances:
    """Replace the active tolerances; unknown names raise ConfigError."""
    global _active
    known = {f.name for f in fields(Tolerances)}
    unknown = set(overrides) - known
    if unknown:
        raise ConfigError(f"Unknown tolerance(s): {', '.join(sorted(unknown))}")
    if "dedup_decimals" in overrides:
        overrides["dedup_decimals"] = int(overrides["dedup_decimals"])
    _active = replace(_active, **overrides)
    return _active


def reset_tolerances() -> Tolerances:
    global _active
    _active = Tolerances()
    return _active
