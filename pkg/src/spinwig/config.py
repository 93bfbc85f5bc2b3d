"""Configuration loading and validation."""

import copy
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from spinwig.errors import ConfigError

THREADS_ENV_VAR = "SPINWIG_THREADS"

DEFAULTS: dict[str, Any] = {
    "tolerances": {
        "structural": 1e-12,
        "psd": 1e-10,
        "membership": 1e-9,
        "imaginary": 1e-8,
        "dedup_decimals": 12,
    },
    "wigner": {
        "grid_order": 0,  # 0 = 4j + 8
        "negvol_tol": 1e-10,
        "negvol_max_subdivisions": 400,
    },
    "orbits": {
        "seed": 20240501,
        "trials": 2000,
    },
    "output": {
        "format": "json",
    },
    "parallel": {
        "threads": 0,  # 0 = os.cpu_count()
    },
}

OUTPUT_FORMATS = ("json", "csv")


def _deep_merge(base: dict, override: dict, path: str = "") -> dict:
    """Merge override into base, returning a new dict.

    Keys absent from base are rejected: every accepted key has a documented default.
    """
    result = copy.deepcopy(base)
    for key, value in override.items():
        where = f"{path}.{key}" if path else key
        if key not in result:
            raise ConfigError(f"Unknown configuration key: {where}")
        if isinstance(result[key], dict):
            if not isinstance(value, dict):
                raise ConfigError(f"Configuration key {where} must be a table")
            result[key] = _deep_merge(result[key], value, where)
        else:
            result[key] = copy.deepcopy(value)
    return result


def load_config(path: str | Path = "spinwig.toml") -> dict[str, Any]:
    """Load config from a TOML file, falling back to defaults for missing values."""
    config_path = Path(path)
    if config_path.exists():
        with open(config_path, "rb") as f:
            try:
                user_config = tomllib.load(f)
            except tomllib.TOMLDecodeError as exc:
                raise ConfigError(f"Cannot parse {config_path}: {exc}") from exc
        return _deep_merge(DEFAULTS, user_config)
    return copy.deepcopy(DEFAULTS)


def _resolve_threads(configured: int) -> int:
    env = os.environ.get(THREADS_ENV_VAR, "").strip()
    cpu = os.cpu_count() or 1
    threads = configured if configured > 0 else cpu
    if env:
        try:
            cap = int(env)
        except ValueError as exc:
            raise ConfigError(f"{THREADS_ENV_VAR} must be an integer, got {env!r}") from exc
        if cap < 1:
            raise ConfigError(f"{THREADS_ENV_VAR} must be >= 1, got {cap}")
        threads = min(threads, cap)
    return threads


@dataclass
class RunConfig:
    """Settings for one CLI invocation, after file, environment and flag overrides.

    Args:
        tolerances: Overrides for spinwig.tolerances.Tolerances fields.
        output_format: "json" or "csv".
        seed: Seed for every stochastic subcommand.
        grid_order: Polynomial exactness of the sphere grid; None means 4j + 8.
        threads: Worker cap for parallel sections.
    """

    tolerances: dict[str, float] = field(default_factory=dict)
    output_format: str = "json"
    seed: int = DEFAULTS["orbits"]["seed"]
    trials: int = DEFAULTS["orbits"]["trials"]
    grid_order: int | None = None
    negvol_tol: float = DEFAULTS["wigner"]["negvol_tol"]
    negvol_max_subdivisions: int = DEFAULTS["wigner"]["negvol_max_subdivisions"]
    threads: int = 1

    @classmethod
    def from_dict(cls, config: dict[str, Any]) -> "RunConfig":
        output_format = config["output"]["format"]
        if output_format not in OUTPUT_FORMATS:
            raise ConfigError(
                f"Invalid output format: {output_format!r}. Must be one of {OUTPUT_FORMATS}."
            )
        grid_order = int(config["wigner"]["grid_order"])
        return cls(
            tolerances=dict(config["tolerances"]),
            output_format=output_format,
            seed=int(config["orbits"]["seed"]),
            trials=int(config["orbits"]["trials"]),
            grid_order=grid_order if grid_order > 0 else None,
            negvol_tol=float(config["wigner"]["negvol_tol"]),
            negvol_max_subdivisions=int(config["wigner"]["negvol_max_subdivisions"]),
            threads=_resolve_threads(int(config["parallel"]["threads"])),
        )

    def with_tolerance_overrides(self, pairs: list[str]) -> "RunConfig":
        """Apply ``--tol name=value`` overrides, rejecting unknown names."""
        tolerances = dict(self.tolerances)
        for pair in pairs:
            name, sep, raw = pair.partition("=")
            if not sep:
                raise ConfigError(f"Tolerance override must look like name=value, got {pair!r}")
            name = name.strip()
            if name not in DEFAULTS["tolerances"]:
                raise ConfigError(f"Unknown tolerance: {name}")
            try:
                tolerances[name] = float(raw)
            except ValueError as exc:
                raise ConfigError(f"Tolerance {name} must be a number, got {raw!r}") from exc
        self.tolerances = tolerances
        return self
