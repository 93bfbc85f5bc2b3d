"""Tests for lattice scans of the simplex."""

import math

import pytest

from spinwig.core.spin import HalfInteger
from spinwig.errors import DimensionMismatchError, OutOfRangeError
from spinwig.geometry.scan import (
    DEFAULT_COLUMNS,
    SCAN_COLUMNS,
    compositions,
    parse_columns,
    simplex_scan,
)
from spinwig.polytope.balls import critical_w_min, inner_radius, tangent_points
from spinwig.polytope.vertices import full_vertex_spectra

SPIN_ONE = HalfInteger(2)


class TestCompositions:
    def test_count(self):
        assert len(list(compositions(5, 3))) == math.comb(7, 2)

    def test_order_and_sum(self):
        parts = list(compositions(2, 2))
        assert parts == [(2, 0), (1, 1), (0, 2)]


class TestParseColumns:
    def test_default(self):
        assert parse_columns(None) == DEFAULT_COLUMNS
        assert parse_columns("") == DEFAULT_COLUMNS

    def test_list(self):
        assert parse_columns("margin, ball,hs") == ("margin", "ball", "hs")

    def test_unknown(self):
        with pytest.raises(ValueError, match="Unknown scan column"):
            parse_columns("margin,colour")


class TestSimplexScan:
    @pytest.mark.parametrize("twice_j,resolution", [(1, 10), (2, 12), (3, 6)])
    def test_row_count_and_header(self, twice_j, resolution):
        j = HalfInteger(twice_j)
        table = simplex_scan(j, resolution, 0.0)
        dim = twice_j + 1
        assert len(table.rows) == math.comb(resolution + dim - 1, dim - 1)
        assert table.header[:dim] == [f"lambda_{i}" for i in range(dim)]
        assert table.header[-2:] == list(DEFAULT_COLUMNS)
        assert all(len(row) == len(table.header) for row in table.rows)

    def test_mixed_state_row(self):
        table = simplex_scan(SPIN_ONE, 3, 0.0, columns=list(SCAN_COLUMNS))
        row = dict(zip(table.header, table.rows[[r[:3] for r in table.rows].index([1 / 3] * 3)]))
        assert row["awb"] == 1
        assert row["margin"] == pytest.approx(1 / 3)
        assert row["ball"] == 0
        assert row["hs"] == pytest.approx(0.0, abs=1e-15)
        assert row["sas"] == 0.0

    def test_pure_states_are_outside(self):
        table = simplex_scan(SPIN_ONE, 4, 0.0, columns=["awb", "ball"])
        first = dict(zip(table.header, table.rows[0]))
        assert first["lambda_0"] == 1.0
        assert first["awb"] == 0
        assert first["ball"] == 2

    def test_awb_agrees_with_margin(self):
        table = simplex_scan(HalfInteger(3), 8, 0.0, columns=["margin", "awb"])
        for row in table.rows:
            assert row[-1] == (1 if row[-2] >= -1e-9 else 0)

    def test_hyperplane_distance_vanishes_on_vertices(self):
        table = simplex_scan(HalfInteger(1), 1000, 0.0, columns=["hyperplane"])
        assert min(row[-1] for row in table.rows) < 1e-3

    def test_tangent_points_at_the_cutoff_sit_on_simplex_edges(self):
        w_min = critical_w_min(SPIN_ONE)
        assert w_min == pytest.approx(-0.387, abs=1e-3)
        resolution = 120
        cell = math.sqrt(2) / resolution
        table = simplex_scan(SPIN_ONE, resolution, w_min, columns=["hyperplane", "hs"])
        hyperplane, hs = table.header.index("hyperplane"), table.header.index("hs")
        r_in = inner_radius(SPIN_ONE, w_min)
        points = tangent_points(SPIN_ONE, w_min)
        assert len(points) == 6
        for point in points:
            assert min(point.values) == pytest.approx(0.0, abs=1e-12)
            assert point.distance_to_mixed() == pytest.approx(r_in, abs=1e-12)
            nearest = min(table.rows, key=lambda row: math.dist(row[:3], point.values))
            assert nearest[hyperplane] <= cell
            assert abs(nearest[hs] - r_in) <= cell

    def test_boundary_passes_by_every_vertex(self):
        resolution = 60
        table = simplex_scan(SPIN_ONE, resolution, 0.0, columns=["awb"])
        radius = 2 * math.sqrt(2) / resolution
        vertices = full_vertex_spectra(SPIN_ONE, 0.0)
        assert len(vertices) == 6
        for vertex in vertices:
            near = {row[-1] for row in table.rows if math.dist(row[:3], vertex.values) <= radius}
            assert near == {0, 1}

    def test_sas_only_for_spin_one(self):
        with pytest.raises(DimensionMismatchError):
            simplex_scan(HalfInteger(3), 4, 0.0, columns=["sas"])

    def test_unknown_column(self):
        with pytest.raises(ValueError):
            simplex_scan(SPIN_ONE, 4, 0.0, columns=["nope"])

    def test_spin_limit(self):
        with pytest.raises(DimensionMismatchError):
            simplex_scan(HalfInteger(4), 4, 0.0)

    def test_resolution(self):
        with pytest.raises(OutOfRangeError):
            simplex_scan(SPIN_ONE, 0, 0.0)

    def test_w_min_range(self):
        with pytest.raises(OutOfRangeError):
            simplex_scan(SPIN_ONE, 4, 0.5)

    def test_to_dict(self):
        d = simplex_scan(HalfInteger(1), 2, 0.0).to_dict()
        assert d["header"] == ["lambda_0", "lambda_1", "x_0", "margin", "awb"]
        assert len(d["rows"]) == 3
