"""Isoperimetric profile of a bounded region and its inverse.

``ell(A)`` is the least perimeter of a subset of area ``A``; ``a(L)`` is the
largest area of a subset of perimeter ``L``.  On bounded regions both are
strictly increasing and mutually inverse, which :func:`reciprocity_check`
verifies on a grid.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NumericalError, RejectedInputError
from .region import Region, region_area, region_perimeter
from .solver import SolveReport, SolverConfig, solve_P, solve_Pstar, truncation_sequence

CSV_HEADER = ("independent", "dependent", "converged", "residual")
DEFAULT_POINTS = 16
DEFAULT_MARGIN = 0.02


@dataclass
class ProfileTable:
    region_id: str
    direction: str  # "ell" (A -> L) or "a" (L -> A)
    rows: list[tuple[float, float]]
    solver_cfg: SolverConfig
    reports: list[SolveReport] = field(default_factory=list, repr=False)

    @property
    def independent(self) -> np.ndarray:
        return np.array([r[0] for r in self.rows])

    @property
    def dependent(self) -> np.ndarray:
        return np.array([r[1] for r in self.rows])

    def is_increasing(self, slack: float = 1e-6) -> bool:
        return bool(np.all(np.diff(self.dependent) > -slack))

    def is_strictly_increasing(self) -> bool:
        return bool(np.all(np.diff(self.dependent) > 0))

    def max_jump(self) -> float | None:
        if len(self.rows) < 2:
            return None
        return float(np.abs(np.diff(self.dependent)).max())

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for (x, y), rep in zip(self.rows, self.reports):
            res = rep.perim_residual if rep.problem == "P" else rep.area_residual
            writer.writerow([f"{x:.6f}", f"{y:.6f}", str(rep.converged).lower(), f"{res:.6e}"])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "region_id": self.region_id,
            "direction": self.direction,
            "rows": [[x, y] for x, y in self.rows],
            "solver_cfg": self.solver_cfg.to_json(),
        }


def default_grid(upper: float, n: int = DEFAULT_POINTS, margin: float = DEFAULT_MARGIN) -> np.ndarray:
    """``n`` uniform points in ``[margin, 1 - margin] * upper``."""
    if n == 1:
        return np.array([0.5 * upper])
    return np.linspace(margin * upper, (1 - margin) * upper, n)


def refine_grid(values) -> np.ndarray:
    """Insert midpoints: ``n`` points become ``2n - 1`` with half the spacing."""
    values = np.asarray(values, dtype=float)
    mids = 0.5 * (values[1:] + values[:-1])
    out = np.empty(2 * len(values) - 1)
    out[0::2] = values
    out[1::2] = mids
    return out


def _region_id(G: Region) -> str:
    return G.kind


def _run(solve, G, values, cfg, what):
    reports = []
    for v in values:
        rep = solve(G, float(v), cfg)
        if not rep.converged:
            raise NumericalError(f"{what} solve did not converge at grid point {v} ({rep.status})")
        reports.append(rep)
    return reports


def profile_ell(G: Region, A_grid, cfg: SolverConfig | None = None) -> ProfileTable:
    cfg = cfg or SolverConfig()
    area_G = region_area(G)
    A_grid = sorted(float(a) for a in A_grid)
    if not A_grid or A_grid[0] <= 0 or A_grid[-1] >= area_G:
        raise RejectedInputError(f"area grid must lie in (0, {area_G})")
    reports = _run(solve_Pstar, G, A_grid, cfg, "P*")
    rows = [(a, r.perimeter) for a, r in zip(A_grid, reports)]
    return ProfileTable(_region_id(G), "ell", rows, cfg, reports)


def profile_a(G: Region, L_grid, cfg: SolverConfig | None = None) -> ProfileTable:
    cfg = cfg or SolverConfig()
    per_G = region_perimeter(G)
    L_grid = sorted(float(v) for v in L_grid)
    if not L_grid or L_grid[0] <= 0 or L_grid[-1] >= per_G:
        raise RejectedInputError(f"perimeter grid must lie in (0, {per_G})")
    reports = _run(solve_P, G, L_grid, cfg, "P")
    rows = [(v, r.area) for v, r in zip(L_grid, reports)]
    return ProfileTable(_region_id(G), "a", rows, cfg, reports)


@dataclass
class ReciprocityReport:
    ell: ProfileTable
    a: ProfileTable
    a_of_ell: np.ndarray  # a(ell(A)) for A on the area grid
    ell_of_a: np.ndarray  # ell(a(L)) for L on the perimeter grid
    area_error: float  # max |a(ell(A)) - A| / area(G)
    perimeter_error: float  # max |ell(a(L)) - L| / Per(G)
    ell_increasing: bool
    a_increasing: bool
    jump_ratio_ell: float | None = None
    jump_ratio_a: float | None = None
    tolerance: float = 0.02

    @property
    def passed(self) -> bool:
        ok = (
            self.area_error <= self.tolerance
            and self.perimeter_error <= self.tolerance
            and self.ell_increasing
            and self.a_increasing
        )
        for ratio in (self.jump_ratio_ell, self.jump_ratio_a):
            if ratio is not None:
                ok = ok and jump_halves(ratio)
        return ok

    def to_json(self) -> dict:
        return {
            "area_error": self.area_error,
            "perimeter_error": self.perimeter_error,
            "ell_increasing": self.ell_increasing,
            "a_increasing": self.a_increasing,
            "jump_ratio_ell": self.jump_ratio_ell,
            "jump_ratio_a": self.jump_ratio_a,
            "passed": self.passed,
            "ell": self.ell.to_json(),
            "a": self.a.to_json(),
            "a_of_ell": self.a_of_ell.tolist(),
            "ell_of_a": self.ell_of_a.tolist(),
        }


def jump_halves(ratio: float, rel: float = 0.25) -> bool:
    """True if a refined/coarse jump ratio is ``1/2`` within ``rel`` (relative)."""
    return abs(ratio - 0.5) <= rel * 0.5


def reciprocity_check(G: Region, n: int = 10, cfg: SolverConfig | None = None, A_grid=None, L_grid=None,
                      check_continuity: bool = False) -> ReciprocityReport:
    """Round-trip the profile through its inverse on area and perimeter grids."""
    cfg = cfg or SolverConfig()
    if not G.is_bounded:
        raise RejectedInputError("reciprocity check needs a bounded region")
    area_G = region_area(G)
    per_G = region_perimeter(G)
    A_grid = default_grid(area_G, n) if A_grid is None else np.asarray(A_grid, dtype=float)
    L_grid = default_grid(per_G, n) if L_grid is None else np.asarray(L_grid, dtype=float)

    ell = profile_ell(G, A_grid, cfg)
    back_a = profile_a(G, ell.dependent, cfg)
    a = profile_a(G, L_grid, cfg)
    back_ell = profile_ell(G, a.dependent, cfg)

    report = ReciprocityReport(
        ell=ell,
        a=a,
        a_of_ell=back_a.dependent,
        ell_of_a=back_ell.dependent,
        area_error=float(np.abs(back_a.dependent - ell.independent).max()) / area_G,
        perimeter_error=float(np.abs(back_ell.dependent - a.independent).max()) / per_G,
        ell_increasing=ell.is_strictly_increasing(),
        a_increasing=a.is_strictly_increasing(),
    )
    if check_continuity and len(A_grid) > 1:
        fine_ell = profile_ell(G, refine_grid(ell.independent), cfg)
        fine_a = profile_a(G, refine_grid(a.independent), cfg)
        report.jump_ratio_ell = fine_ell.max_jump() / ell.max_jump()
        report.jump_ratio_a = fine_a.max_jump() / a.max_jump()
    return report


@dataclass
class CuspProfile:
    L: float
    ks: list
    areas: list
    center_ys: list
    reference_area: float | None
    increasing: bool
    below_reference: bool
    final_gap: float | None
    center_diverges: bool
    reports: list = field(default_factory=list, repr=False)

    def rows(self):
        return list(zip(self.ks, self.areas, self.center_ys))

    def to_json(self) -> dict:
        return {
            "L": self.L,
            "k": list(self.ks),
            "areas": list(self.areas),
            "center_y": list(self.center_ys),
            "reference_area": self.reference_area,
            "increasing": self.increasing,
            "below_reference": self.below_reference,
            "final_gap": self.final_gap,
            "center_diverges": self.center_diverges,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("k", "area", "center_y"))
        for k, area, cy in self.rows():
            writer.writerow([k, f"{area:.6f}", f"{cy:.6f}"])
        return buf.getvalue()


def cusp_nonexistence_profile(L: float = 2 * math.pi, k_list=(5, 10, 20, 40),
                              cfg: SolverConfig | None = None) -> CuspProfile:
    """Area-maximizers on growing truncations of the cusp.

    At ``L = 2 pi`` the areas creep up to ``pi`` and the shapes drift upward
    without bound, so no maximizer exists in the cusp itself.
    """
    ks = sorted(int(k) for k in k_list)
    seq = truncation_sequence(Region.cusp(), L, ks, cfg)
    areas = seq.areas
    ref = seq.reference_area
    return CuspProfile(
        L=float(L),
        ks=ks,
        areas=areas,
        center_ys=seq.center_ys,
        reference_area=ref,
        increasing=bool(np.all(np.diff(areas) > 0)),
        below_reference=ref is None or all(a < ref for a in areas),
        final_gap=None if ref is None else ref - areas[-1],
        center_diverges=seq.center_ys[-1] >= ks[-1] / 2,
        reports=seq.reports,
    )
