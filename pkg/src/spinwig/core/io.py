"""JSON documents for density matrices and spectra.

Density matrix: ``{"twice_j": int, "matrix": [[[re, im], ...], ...]}``
Spectrum: ``{"twice_j": int, "values": [real, ...]}``
"""

import json
import logging
from pathlib import Path

from spinwig.core.states import DensityMatrix, Spectrum
from spinwig.errors import InvalidStateError

logger = logging.getLogger(__name__)


def _read_json(path: str | Path) -> dict:
    file_path = Path(path)
    try:
        with open(file_path, encoding="utf-8") as f:
            data = json.load(f)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise InvalidStateError(f"{file_path} is not valid JSON: {exc}") from exc
    except OSError as exc:
        raise InvalidStateError(f"Cannot read {file_path}: {exc}") from exc
    if not isinstance(data, dict) or "twice_j" not in data:
        raise InvalidStateError(f"{file_path} has no 'twice_j' field")
    return data


def load_state(path: str | Path) -> DensityMatrix:
    data = _read_json(path)
    if "matrix" not in data:
        raise InvalidStateError(f"{path} has no 'matrix' field")
    rho = DensityMatrix.from_dict(data)
    logger.debug("Loaded state with 2j=%d from %s", rho.j.twice_value, path)
    return rho


def dump_state(rho: DensityMatrix, path: str | Path) -> None:
    Path(path).write_text(json.dumps(rho.to_dict()), encoding="utf-8")


def load_spectrum(path: str | Path) -> Spectrum:
    data = _read_json(path)
    if "values" not in data:
        raise InvalidStateError(f"{path} has no 'values' field")
    return Spectrum.from_dict(data)


def dump_spectrum(spectrum: Spectrum, path: str | Path) -> None:
    Path(path).write_text(json.dumps(spectrum.to_dict()), encoding="utf-8")
