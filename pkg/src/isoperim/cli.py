"""Command-line front end.

Every command reads a region file (except ``cusp-demo``), runs one operation
and writes its JSON report and SVG picture into ``--out``, plus CSV tables for
the tabular commands.

Exit status: 0 success, 1 a check ran but failed, 2 rejected input, 3 solver
non-convergence.
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import IsoperimError, NumericalError
from .geom import Polygon
from .profile import cusp_nonexistence_profile, default_grid, profile_a, profile_ell, reciprocity_check
from .region import Region, inradius, region_area, region_perimeter, truncate
from .render import render_svg
from .slicing import slice_to_area
from .solver import NonexistenceReport, SolverConfig, comb_sequence, solve_P, solve_Pstar, solve_unbounded

log = logging.getLogger("isoperim")

COMMANDS = (
    "solve-p",
    "solve-pstar",
    "profile",
    "reciprocity",
    "slice",
    "incircle",
    "cusp-demo",
    "nonexistence-demo",
    "render",
)
EXIT_OK, EXIT_CHECK_FAILED, EXIT_REJECTED, EXIT_NOT_CONVERGED = 0, 1, 2, 3

_NEEDS_REGION = set(COMMANDS) - {"cusp-demo"}
_NEEDS_L = {"solve-p", "nonexistence-demo"}
_NEEDS_A = {"solve-pstar", "slice"}


class SpecError(ValueError):
    pass


@dataclass
class RunSpec:
    command: str
    output_dir: Path
    region_path: Path | None = None
    L: float | None = None
    A: float | None = None
    grid: int | None = None
    k: list[int] = field(default_factory=list)
    direction: tuple[float, float] = (0.0, 1.0)
    report_path: Path | None = None
    solver_cfg: SolverConfig = field(default_factory=SolverConfig)

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise SpecError(f"unknown command {self.command!r}")
        if self.command in _NEEDS_REGION:
            if self.region_path is None:
                raise SpecError(f"{self.command} needs --region")
            if not self.region_path.is_file():
                raise SpecError(f"region file {str(self.region_path)!r} does not exist")
        if self.command in _NEEDS_L and self.L is None:
            raise SpecError(f"{self.command} needs --L")
        if self.command in _NEEDS_A and self.A is None:
            raise SpecError(f"{self.command} needs --A")
        for name in ("L", "A"):
            v = getattr(self, name)
            if v is not None and not (math.isfinite(v) and v > 0):
                raise SpecError(f"--{name} must be a positive finite number")
        if self.grid is not None and self.grid < 1:
            raise SpecError("--grid must be at least 1")
        if any(k < 1 for k in self.k):
            raise SpecError("--k must be a positive integer")
        if self.command == "render":
            if self.report_path is None or not self.report_path.is_file():
                raise SpecError("render needs an existing --report file")


# -- output helpers ------------------------------------------------------------------

def _clean(obj):
    """JSON-ready copy with every float rounded to 6 decimals."""
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _clean(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            return None
        x = round(x, 6)
        return 0.0 if x == 0 else x
    return obj


def _write_json(path: Path, data) -> None:
    path.write_text(json.dumps(_clean(data), indent=2, sort_keys=True) + "\n")
    log.info("wrote %s", path)


def _write_text(path: Path, text: str) -> None:
    path.write_text(text)
    log.info("wrote %s", path)


def _solve_region(spec: RunSpec) -> Region:
    G = Region.load(spec.region_path)
    if spec.k:
        G = truncate(G, spec.k[0])
    return G


def _bounded(spec: RunSpec) -> Region:
    G = _solve_region(spec)
    if not G.is_bounded:
        raise SpecError(f"{spec.command} needs a bounded region; pass --k to truncate")
    return G


def _status(report) -> int:
    return EXIT_OK if report.converged else EXIT_NOT_CONVERGED


# -- commands ---------------------------------------------------------------------------

def _cmd_solve(spec: RunSpec, out: Path) -> int:
    G = _solve_region(spec)
    cfg = spec.solver_cfg
    if spec.command == "solve-p":
        if G.is_bounded:
            rep = solve_P(G, spec.L, cfg)
        else:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                rep = solve_unbounded(G, spec.L, cfg)
    else:
        rep = solve_Pstar(G, spec.A, cfg)
    inc = inradius(G)
    if isinstance(rep, NonexistenceReport):
        _write_json(out / "nonexistence.json", rep.to_json())
        shapes = [r.polygon for r in rep.reports]
        _write_text(out / "shape.svg", render_svg(G, shapes, inc, title=spec.command))
        print(rep.message, file=sys.stderr)
        return EXIT_REJECTED
    data = rep.to_json()
    data["region_kind"] = G.kind
    _write_json(out / "report.json", data)
    _write_text(out / "shape.svg", render_svg(G, [rep.polygon], inc, title=spec.command))
    print(f"area {rep.area:.6f} perimeter {rep.perimeter:.6f} converged {str(rep.converged).lower()}")
    return _status(rep)


def _cmd_profile(spec: RunSpec, out: Path) -> int:
    G = _bounded(spec)
    n = spec.grid or 16
    cfg = spec.solver_cfg
    ell = profile_ell(G, default_grid(region_area(G), n), cfg)
    a = profile_a(G, default_grid(region_perimeter(G), n), cfg)
    _write_text(out / "profile_ell.csv", ell.to_csv())
    _write_text(out / "profile_a.csv", a.to_csv())
    _write_json(out / "profile.json", {"ell": ell.to_json(), "a": a.to_json()})
    shapes = [r.polygon for r in ell.reports]
    _write_text(out / "profile.svg", render_svg(G, shapes, inradius(G), title="profile"))
    return EXIT_OK


def _cmd_reciprocity(spec: RunSpec, out: Path) -> int:
    G = _bounded(spec)
    rep = reciprocity_check(G, spec.grid or 10, spec.solver_cfg)
    _write_text(out / "reciprocity_ell.csv", rep.ell.to_csv())
    _write_text(out / "reciprocity_a.csv", rep.a.to_csv())
    _write_json(out / "reciprocity.json", rep.to_json())
    print(f"area_error {rep.area_error:.6e} perimeter_error {rep.perimeter_error:.6e} "
          f"passed {str(rep.passed).lower()}")
    return EXIT_OK if rep.passed else EXIT_CHECK_FAILED


def _cmd_slice(spec: RunSpec, out: Path) -> int:
    G = _bounded(spec)
    res = slice_to_area(G.polygon, spec.direction, spec.A)
    data = res.to_json()
    data["direction"] = list(spec.direction)
    _write_json(out / "slice.json", data)
    _write_text(out / "slice.svg", render_svg(G, [res.clipped], None, title="slice"))
    print(f"alpha0 {res.alpha0:.6f} perim_before {res.perim_before:.6f} perim_after {res.perim_after:.6f}")
    return EXIT_OK


def _cmd_incircle(spec: RunSpec, out: Path) -> int:
    G = _solve_region(spec)
    inc = inradius(G)
    _write_json(out / "incircle.json", inc.to_json())
    _write_text(out / "incircle.svg", render_svg(G, [], inc, title="incircle"))
    print(json.dumps(_clean(inc.to_json()), sort_keys=True))
    return EXIT_OK


def _cmd_cusp(spec: RunSpec, out: Path) -> int:
    L = 2 * math.pi if spec.L is None else spec.L
    ks = spec.k or [5, 10, 20, 40]
    prof = cusp_nonexistence_profile(L, ks, spec.solver_cfg)
    _write_json(out / "cusp.json", prof.to_json())
    _write_text(out / "cusp.csv", prof.to_csv())
    shapes = [r.polygon for r in prof.reports]
    _write_text(out / "cusp.svg", render_svg(Region.cusp(), shapes, inradius(Region.cusp()), title="cusp"))
    if not all(r.converged for r in prof.reports):
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def _cmd_comb(spec: RunSpec, out: Path) -> int:
    G = _bounded(spec)
    kmax = spec.k[0] if spec.k else 10
    steps = comb_sequence(G, spec.L, range(1, kmax + 1))
    rows = ["k,area,perimeter"] + [f"{s.k},{s.area:.6f},{s.perimeter:.6f}" for s in steps]
    _write_text(out / "comb.csv", "\n".join(rows) + "\n")
    _write_json(out / "comb.json", {
        "L": spec.L,
        "area_G": region_area(G),
        "perimeter_G": region_perimeter(G),
        "steps": [{"k": s.k, "area": s.area, "perimeter": s.perimeter, "teeth": len(s.teeth)} for s in steps],
    })
    _write_text(out / "comb.svg", render_svg(G, list(steps[0].teeth), inradius(G), title="comb"))
    return EXIT_OK


def _cmd_render(spec: RunSpec, out: Path) -> int:
    G = _solve_region(spec)
    data = json.loads(spec.report_path.read_text())
    shapes = []
    if isinstance(data, dict) and "polygon" in data:
        shapes.append(Polygon.from_json(data["polygon"]))
    _write_text(out / "render.svg", render_svg(G, shapes, inradius(G), title="render"))
    return EXIT_OK


_DISPATCH = {
    "solve-p": _cmd_solve,
    "solve-pstar": _cmd_solve,
    "profile": _cmd_profile,
    "reciprocity": _cmd_reciprocity,
    "slice": _cmd_slice,
    "incircle": _cmd_incircle,
    "cusp-demo": _cmd_cusp,
    "nonexistence-demo": _cmd_comb,
    "render": _cmd_render,
}


def run(spec: RunSpec) -> int:
    """Validate ``spec``, dispatch it and map failures to exit codes."""
    try:
        spec.validate()
        out = Path(spec.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        return _DISPATCH[spec.command](spec, out)
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    except (SpecError, IsoperimError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REJECTED


# -- argument parsing -----------------------------------------------------------------------

def _direction(text: str) -> tuple[float, float]:
    try:
        dx, dy = (float(v) for v in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError("direction must be 'dx,dy'") from exc
    norm = math.hypot(dx, dy)
    if norm == 0 or not math.isfinite(norm):
        raise argparse.ArgumentTypeError("direction must be nonzero")
    return dx / norm, dy / norm


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--region", type=Path, help="region JSON file")
    common.add_argument("--L", type=float, help="prescribed perimeter")
    common.add_argument("--A", type=float, help="prescribed area")
    common.add_argument("--grid", type=int, help="number of profile grid points")
    common.add_argument("--k", type=int, action="append", default=[],
                        help="truncation size (repeat for cusp-demo; maximum index for nonexistence-demo)")
    common.add_argument("--out", type=Path, default=Path("out"), help="output directory")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--n-angles", type=int, default=256, dest="n_angles")
    common.add_argument("--restarts", type=int, default=8)
    common.add_argument("--solver-config", type=Path, help="SolverConfig JSON; flags override it")
    common.add_argument("--direction", type=_direction, default=(0.0, 1.0), help="slice direction 'dx,dy'")
    common.add_argument("--report", type=Path, help="report JSON to render")
    parser = argparse.ArgumentParser(prog="isoperim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def spec_from_args(args: argparse.Namespace) -> RunSpec:
    base = {}
    if args.solver_config is not None:
        try:
            base = json.loads(Path(args.solver_config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise SpecError(f"solver config: {exc}") from exc
        if not isinstance(base, dict):
            raise SpecError("solver config must be a JSON object")
    base.update(n_angles=args.n_angles, restarts=args.restarts, seed=args.seed)
    return RunSpec(
        command=args.command,
        output_dir=args.out,
        region_path=args.region,
        L=args.L,
        A=args.A,
        grid=args.grid,
        k=list(args.k),
        direction=args.direction,
        report_path=args.report,
        solver_cfg=SolverConfig.from_json(base),
    )


def _setup_logging() -> None:
    level = os.environ.get("ISOPERIM_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv=None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)
    try:
        spec = spec_from_args(args)
    except (SpecError, IsoperimError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    return run(spec)


if __name__ == "__main__":
    sys.exit(main())
