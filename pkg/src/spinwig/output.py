"""Machine-readable output: versioned JSON documents and CSV tables on stdout."""

import csv
import json
import math
import sys
from typing import Any, Iterable, Sequence, TextIO

from spinwig.errors import NonFiniteOutputError

SCHEMA_VERSION = 1


def _check_finite(value: Any, path: str) -> None:
    if isinstance(value, float):
        if not math.isfinite(value):
            raise NonFiniteOutputError(f"Non-finite value {value!r} at {path}")
    elif isinstance(value, dict):
        for key, item in value.items():
            _check_finite(item, f"{path}.{key}")
    elif isinstance(value, (list, tuple)):
        for index, item in enumerate(value):
            _check_finite(item, f"{path}[{index}]")


def emit_json(payload: dict[str, Any], stream: TextIO | None = None) -> None:
    """Write one JSON document with a top-level "schema" field."""
    document = {"schema": SCHEMA_VERSION, **payload}
    _check_finite(document, "$")
    out = stream or sys.stdout
    out.write(json.dumps(document, sort_keys=True, indent=2, allow_nan=False))
    out.write("\n")


def emit_csv(
    header: Sequence[str], rows: Iterable[Sequence[Any]], stream: TextIO | None = None
) -> None:
    """Write a header row followed by the data rows."""
    materialized = [list(row) for row in rows]
    for index, row in enumerate(materialized):
        _check_finite(row, f"row {index}")
    out = stream or sys.stdout
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(materialized)
