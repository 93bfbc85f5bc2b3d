from spinwig.geometry.scaling import PowerLawFit, ScalingReport, fit_power_law, radius_scaling
from spinwig.geometry.scan import SCAN_COLUMNS, ScanTable, compositions, parse_columns, simplex_scan
from spinwig.geometry.simplex import CHART_SCALE, SimplexChart, bary_to_cart

__all__ = [
    "CHART_SCALE",
    "PowerLawFit",
    "SCAN_COLUMNS",
    "ScalingReport",
    "ScanTable",
    "SimplexChart",
    "bary_to_cart",
    "compositions",
    "fit_power_law",
    "parse_columns",
    "radius_scaling",
    "simplex_scan",
]
