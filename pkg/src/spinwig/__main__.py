"""Entry point for the spinwig command-line tool."""

import argparse
import logging
import math
import sys
from typing import Any, Callable, Sequence

from spinwig.config import OUTPUT_FORMATS, RunConfig, load_config
from spinwig.core.io import load_state
from spinwig.core.spin import HalfInteger, PhasePoint
from spinwig.core.states import Spectrum, hs_distance, purity
from spinwig.errors import (
    ConfigError,
    DimensionMismatchError,
    InvalidSpinError,
    InvalidStateError,
    OutOfRangeError,
    SpinwigError,
)
from spinwig.geometry.scaling import radius_scaling
from spinwig.geometry.scan import SCAN_COLUMNS, parse_columns, simplex_scan
from spinwig.kernel.spectrum import (
    extreme_eigenvalue_trend,
    kernel_spectrum,
    verify_kernel_identities,
)
from spinwig.orbits.sampling import orbit_sample_min
from spinwig.orbits.separability import (
    known_sas_inner_radius,
    sas_ball_lower_bound,
    sas_max_negativity_spin1,
)
from spinwig.output import emit_csv, emit_json
from spinwig.polytope.balls import ball_report, inner_radius, tangent_points
from spinwig.polytope.majorization import majorization_certificate
from spinwig.polytope.membership import is_awb
from spinwig.polytope.vertices import (
    full_vertex_spectra,
    minimal_vertices,
    vertex_majorization_pairs,
)
from spinwig.tolerances import configure_tolerances
from spinwig.verify import run_verification
from spinwig.wigner.function import integrate, wigner_value, wigner_values
from spinwig.wigner.grid import SphereGrid
from spinwig.wigner.negativity import negative_volume

logger = logging.getLogger("spinwig")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# Bad input from the command line or a state file; anything else is a computational failure.
USAGE_ERRORS = (
    ConfigError,
    DimensionMismatchError,
    InvalidSpinError,
    InvalidStateError,
    OutOfRangeError,
)


def _spin_arg(text: str) -> HalfInteger:
    try:
        return HalfInteger.parse(text)
    except InvalidSpinError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _floats_arg(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"Expected comma-separated numbers, got {text!r}") from exc
    if not all(math.isfinite(v) for v in values):
        raise argparse.ArgumentTypeError(f"Non-finite value in {text!r}")
    return values


def _point_arg(text: str) -> PhasePoint:
    values = _floats_arg(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError(f"Expected theta,phi, got {text!r}")
    try:
        return PhasePoint(*values)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _spectrum(j: HalfInteger, values: Sequence[float]) -> Spectrum:
    return Spectrum(j, tuple(values))


def _output_format(args: argparse.Namespace, cfg: RunConfig, default: str | None = None) -> str:
    explicit = getattr(args, "format", None)
    return explicit or default or cfg.output_format


def _grid(j: HalfInteger, cfg: RunConfig) -> SphereGrid:
    return SphereGrid.for_spin(j, cfg.grid_order)


# --- Subcommands -----------------------------------------------------------


def cmd_kernel(args: argparse.Namespace, cfg: RunConfig) -> int:
    delta = kernel_spectrum(args.j, args.s)
    if _output_format(args, cfg) == "csv":
        rows = [(tm, tm / 2, value) for tm, value in zip(args.j.twice_m_values(), delta.values)]
        emit_csv(["twice_m", "m", "delta"], rows)
        return EXIT_OK
    identities = verify_kernel_identities(args.j) if args.s == 0.0 else None
    emit_json(
        {
            "kernel": delta.to_dict(),
            "identities": identities.to_dict() if identities else None,
        }
    )
    return EXIT_OK


def cmd_membership(args: argparse.Namespace, cfg: RunConfig) -> int:
    spectrum = _spectrum(args.j, args.spectrum)
    delta = kernel_spectrum(args.j, 0.0)
    report = is_awb(spectrum, args.wmin, delta)
    certificate = majorization_certificate(spectrum, minimal_vertices(args.j, args.wmin, delta))
    if certificate is None and report.is_awb:
        logger.warning("Membership margin %.3g has no majorization certificate", report.margin)
    emit_json(
        {
            "j": str(args.j),
            "spectrum": list(spectrum.values),
            "membership": report.to_dict(),
            "certificate": certificate,
        }
    )
    return EXIT_OK


def cmd_vertices(args: argparse.Namespace, cfg: RunConfig) -> int:
    vertices = minimal_vertices(args.j, args.wmin)
    dim = args.j.dimension()
    if _output_format(args, cfg) == "csv":
        header = [f"lambda_{i}" for i in range(dim)] + ["radius", "physical"]
        if args.full:
            spectra = full_vertex_spectra(args.j, args.wmin)
            rows = [list(s.values) + [s.distance_to_mixed(), int(s.physical)] for s in spectra]
        else:
            header = ["n", "omega", "sigma"] + header
            rows = [
                [v.n, v.omega, v.sigma] + list(v.spectrum.values) + [v.radius, int(v.physical)]
                for v in vertices
            ]
        emit_csv(header, rows)
        return EXIT_OK
    payload: dict[str, Any] = {
        "j": str(args.j),
        "w_min": args.wmin,
        "vertices": [v.to_dict() for v in vertices],
        "majorizing_pairs": [list(pair) for pair in vertex_majorization_pairs(args.j, args.wmin)],
    }
    if args.full:
        payload["full_vertices"] = [list(s.values) for s in full_vertex_spectra(args.j, args.wmin)]
    emit_json(payload)
    return EXIT_OK


def cmd_balls(args: argparse.Namespace, cfg: RunConfig) -> int:
    payload = ball_report(args.j, args.wmin).to_dict()
    if args.tangent:
        payload["tangent_points"] = [list(s.values) for s in tangent_points(args.j, args.wmin)]
    emit_json(payload)
    return EXIT_OK


def cmd_wigner(args: argparse.Namespace, cfg: RunConfig) -> int:
    rho = load_state(args.state)
    grid = _grid(rho.j, cfg)
    values = wigner_values(rho, grid.theta, grid.phi, args.s)
    payload: dict[str, Any] = {
        "j": str(rho.j),
        "s": args.s,
        "grid_order": grid.order,
        "normalization": integrate(rho, grid, args.s).to_dict(),
        "grid_min": float(values.min()),
        "grid_max": float(values.max()),
        "purity": purity(rho),
        "hs_distance": hs_distance(rho),
        "values": [
            {"theta": p.theta, "phi": p.phi, "value": wigner_value(rho, p, args.s)}
            for p in args.at or []
        ],
    }
    if args.negvol:
        if args.s != 0.0:
            raise OutOfRangeError(
                "The negative volume is defined for the Wigner function (s=0) only"
            )
        payload["negative_volume"] = negative_volume(
            rho, grid, tol=cfg.negvol_tol, max_subdivisions=cfg.negvol_max_subdivisions
        ).to_dict()
    emit_json(payload)
    return EXIT_OK


def cmd_sample_orbit(args: argparse.Namespace, cfg: RunConfig) -> int:
    spectrum = _spectrum(args.j, args.spectrum)
    report = orbit_sample_min(
        spectrum,
        trials=args.trials or cfg.trials,
        seed=cfg.seed,
        grid=_grid(args.j, cfg),
        threads=cfg.threads,
        polish=args.polish,
    )
    emit_json({"j": str(args.j), "spectrum": list(spectrum.values), "orbit": report.to_dict()})
    return EXIT_OK


def cmd_sas(args: argparse.Namespace, cfg: RunConfig) -> int:
    payload: dict[str, Any] = {
        "j": str(args.j),
        "ball_lower_bound": sas_ball_lower_bound(args.j),
        "known_inner_radius": known_sas_inner_radius(args.j),
        "awb_inner_radius": inner_radius(args.j, 0.0),
    }
    if args.spectrum is not None:
        spectrum = _spectrum(args.j, args.spectrum)
        negativity = sas_max_negativity_spin1(spectrum)
        payload["spectrum"] = list(spectrum.values)
        payload["max_negativity"] = negativity
        payload["is_sas"] = negativity == 0.0
    emit_json(payload)
    return EXIT_OK


def cmd_export_simplex(args: argparse.Namespace, cfg: RunConfig) -> int:
    table = simplex_scan(args.j, args.resolution, args.wmin, parse_columns(args.columns))
    if _output_format(args, cfg, default="csv") == "csv":
        emit_csv(table.header, table.rows)
    else:
        emit_json({"j": str(args.j), "w_min": args.wmin, **table.to_dict()})
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    report = run_verification(args.max_twice_j, seed=cfg.seed)
    emit_json(report.to_dict())
    if not report.passed:
        failed = [c.name for c in report.checks if not c.passed]
        logger.error("Verification failed: %s", ", ".join(failed))
        return EXIT_FAILURE
    logger.info("All %d checks passed up to 2j=%d", len(report.checks), args.max_twice_j)
    return EXIT_OK


def cmd_scaling(args: argparse.Namespace, cfg: RunConfig) -> int:
    if not 1 <= args.min_twice_j < args.max_twice_j:
        raise OutOfRangeError(
            f"Need 1 <= --min-twice-j < --max-twice-j, got {args.min_twice_j}, {args.max_twice_j}"
        )
    twice_js = range(args.min_twice_j, args.max_twice_j + 1)
    report = radius_scaling(twice_js, args.wmin)
    if _output_format(args, cfg) == "csv":
        emit_csv(
            ["j", "r_in", "r_out", "sas_bound"],
            zip(report.j_values, report.r_in, report.r_out, report.sas_bound),
        )
        return EXIT_OK
    emit_json(
        {
            "w_min": args.wmin,
            "scaling": report.to_dict(),
            "extremes": [e.to_dict() for e in extreme_eigenvalue_trend(twice_js)],
        }
    )
    return EXIT_OK


# --- Parser ----------------------------------------------------------------


def _common_options() -> argparse.ArgumentParser:
    """Global flags, accepted before or after the subcommand name."""
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--config", help="TOML configuration file (default: spinwig.toml)")
    common.add_argument(
        "--tol", action="append", metavar="NAME=VALUE", help="Override one tolerance; repeatable"
    )
    common.add_argument("--format", choices=OUTPUT_FORMATS, help="Output format")
    common.add_argument("--json", dest="format", action="store_const", const="json")
    common.add_argument("--csv", dest="format", action="store_const", const="csv")
    common.add_argument("--seed", type=int, help="Seed for stochastic subcommands")
    common.add_argument("--grid-order", type=int, help="Sphere grid exactness (default 4j+8)")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="spinwig",
        description="SU(2) Wigner-kernel spectra and absolutely Wigner-bounded spin states",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, handler: Callable[[argparse.Namespace, RunConfig], int], text: str):
        p = sub.add_parser(name, parents=[common], help=text, description=text)
        p.set_defaults(handler=handler)
        return p

    p = add("kernel", cmd_kernel, "Kernel eigenvalues Delta_{j,m} and identity residuals")
    p.add_argument("--j", type=_spin_arg, required=True)
    p.add_argument("--s", type=float, default=0.0, help="Ordering parameter in [-1, 1]")

    p = add("membership", cmd_membership, "AWB membership test and majorization certificate")
    p.add_argument("--j", type=_spin_arg, required=True)
    p.add_argument("--spectrum", type=_floats_arg, required=True, metavar="a,b,...")
    p.add_argument("--wmin", type=float, default=0.0)

    p = add("vertices", cmd_vertices, "Vertices of the AWB polytope")
    p.add_argument("--j", type=_spin_arg, required=True)
    p.add_argument("--wmin", type=float, default=0.0)
    p.add_argument("--full", action="store_true", help="Also list every permuted vertex")

    p = add("balls", cmd_balls, "Inner and outer Hilbert-Schmidt balls")
    p.add_argument("--j", type=_spin_arg, required=True)
    p.add_argument("--wmin", type=float, default=0.0)
    p.add_argument("--tangent", action="store_true", help="List the tangent points")

    p = add("wigner", cmd_wigner, "Evaluate and integrate the Wigner function of a state file")
    p.add_argument("--state", required=True, help="Density-matrix JSON file")
    p.add_argument("--s", type=float, default=0.0)
    p.add_argument("--negvol", action="store_true", help="Compute the negative volume")
    p.add_argument("--at", type=_point_arg, action="append", metavar="THETA,PHI")

    p = add("sample-orbit", cmd_sample_orbit, "Monte-Carlo minimum of W over a unitary orbit")
    p.add_argument("--j", type=_spin_arg, required=True)
    p.add_argument("--spectrum", type=_floats_arg, required=True, metavar="a,b,...")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument(
        "--polish",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="Refine the best sample along the orbit (default on)",
    )

    p = add("sas", cmd_sas, "Symmetric absolute separability bounds")
    p.add_argument("--j", type=_spin_arg, required=True)
    p.add_argument("--spectrum", type=_floats_arg, default=None, metavar="a,b,c")

    columns = "; ".join(f"{name}: {text}" for name, text in SCAN_COLUMNS.items())
    p = add("export-simplex", cmd_export_simplex, "Lattice scan of the probability simplex")
    p.add_argument("--j", type=_spin_arg, required=True)
    p.add_argument("--resolution", type=int, default=20)
    p.add_argument("--wmin", type=float, default=0.0)
    p.add_argument("--columns", default=None, help=f"Comma-separated columns ({columns})")

    p = add("verify", cmd_verify, "Run the verification suite")
    p.add_argument("--max-twice-j", type=int, default=20)

    p = add("scaling", cmd_scaling, "Large-spin scaling of the ball radii")
    p.add_argument("--min-twice-j", type=int, default=20)
    p.add_argument("--max-twice-j", type=int, default=50)
    p.add_argument("--wmin", type=float, default=0.0)

    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig.from_dict(load_config(getattr(args, "config", "spinwig.toml")))
    cfg.with_tolerance_overrides(getattr(args, "tol", []))
    if getattr(args, "seed", None) is not None:
        cfg.seed = args.seed
    if getattr(args, "grid_order", None) is not None:
        if args.grid_order < 0:
            raise ConfigError(f"--grid-order must be >= 0, got {args.grid_order}")
        cfg.grid_order = args.grid_order or None
    if getattr(args, "format", None) is not None:
        cfg.output_format = args.format
    return cfg


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    if getattr(args, "verbose", False):
        level = logging.DEBUG
    elif args.command == "verify":
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(name)s] %(levelname)s: %(message)s",
    )

    try:
        cfg = _run_config(args)
        configure_tolerances(**cfg.tolerances)
        return args.handler(args, cfg)
    except USAGE_ERRORS as exc:
        logger.error("%s", exc)
        return EXIT_USAGE
    except (SpinwigError, ArithmeticError, RuntimeError):
        logger.exception("spinwig %s failed", args.command)
        return EXIT_FAILURE
    except ValueError as exc:
        logger.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
