"""Tests for JSON and CSV emission."""

import io
import json

import numpy as np
import pytest

from spinwig.errors import NonFiniteOutputError
from spinwig.output import SCHEMA_VERSION, emit_csv, emit_json


class TestEmitJson:
    def test_schema_and_sorted_keys(self):
        out = io.StringIO()
        emit_json({"b": 1, "a": [0.5, 2]}, out)
        text = out.getvalue()
        assert json.loads(text) == {"schema": SCHEMA_VERSION, "a": [0.5, 2], "b": 1}
        assert text.index('"a"') < text.index('"b"') < text.index('"schema"')
        assert text.endswith("\n")

    @pytest.mark.parametrize("bad", [float("nan"), float("inf"), np.float64("-inf")])
    def test_non_finite_rejected(self, bad):
        with pytest.raises(NonFiniteOutputError, match=r"\$\.outer\.values\[1\]"):
            emit_json({"outer": {"values": [1.0, bad]}}, io.StringIO())

    def test_nothing_written_on_failure(self):
        out = io.StringIO()
        with pytest.raises(NonFiniteOutputError):
            emit_json({"x": float("nan")}, out)
        assert out.getvalue() == ""


class TestEmitCsv:
    def test_header_and_rows(self):
        out = io.StringIO()
        emit_csv(["a", "b"], [(1, 0.5), (2, 0.25)], out)
        assert out.getvalue() == "a,b\n1,0.5\n2,0.25\n"

    def test_accepts_generators(self):
        out = io.StringIO()
        emit_csv(["x"], ((i,) for i in range(3)), out)
        assert out.getvalue().splitlines() == ["x", "0", "1", "2"]

    def test_non_finite_rejected(self):
        with pytest.raises(NonFiniteOutputError, match="row 1"):
            emit_csv(["x"], [(1.0,), (float("nan"),)], io.StringIO())
