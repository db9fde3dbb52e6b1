"""Area maximization at fixed perimeter, and its reciprocal, over convex shapes.

The decision variable is the vector ``p`` of absolute support numbers of a
tangent polygon with fixed outer normals ``u_i``.  In these variables the
perimeter ``2 tan(step/2) sum(p)`` and the constraints (edge lengths >= 0,
containment in a convex polygon) are linear.  The area ``p^T E p / 2`` (``E``
the edge-length map) is a quadratic form whose only positive direction is the
constant vector, so it is concave on every slice of fixed perimeter.

Maximizing area at fixed perimeter is therefore a convex QP, and minimizing
perimeter subject to ``area >= A`` is a second-order cone program (the area
constraint is active at the optimum).  Both are solved to global optimality.
"""
from __future__ import annotations

import logging
import math
import warnings
from dataclasses import asdict, dataclass, field
from functools import lru_cache

import cvxpy as cp
import numpy as np

from .body import ConvexBody, body_area, body_perimeter, grid, tangent_area, tangent_perimeter
from .errors import InfeasibleError, NumericalError, RejectedInputError, UnsupportedOperationError
from .geom import HalfPlane, Polygon, diameter, point_in_convex, project_onto_convex
from .region import (
    Region,
    deep_point,
    inradius,
    region_area,
    region_perimeter,
    truncate,
)

log = logging.getLogger(__name__)

PERIM_RTOL = 1e-6
CONTAINMENT_TOL = 1e-8
STABILITY_RTOL = 1e-6
# containment is imposed with this inward margin (normalized units) to absorb solver error
_MARGIN = 1e-10


class NonexistenceWarning(UserWarning):
    """The supremum of the problem is not attained in the region."""


@dataclass(frozen=True)
class SolverConfig:
    n_angles: int = 256
    restarts: int = 8
    seed: int = 0
    max_iter: int = 200
    penalty_stages: int = 5

    def __post_init__(self):
        if int(self.n_angles) != self.n_angles or self.n_angles < 32 or self.n_angles % 2:
            raise RejectedInputError("n_angles must be an even integer >= 32")
        if self.restarts < 0 or self.max_iter < 1 or self.penalty_stages < 1:
            raise RejectedInputError("restarts >= 0, max_iter >= 1 and penalty_stages >= 1 required")

    @classmethod
    def from_json(cls, data: dict | None) -> "SolverConfig":
        data = dict(data or {})
        known = set(cls.__dataclass_fields__)
        extra = set(data) - known
        if extra:
            raise RejectedInputError(f"unknown solver config field {sorted(extra)[0]!r}")
        try:
            kwargs = {k: int(v) for k, v in data.items()}
        except (TypeError, ValueError) as exc:
            raise RejectedInputError(f"solver config: {exc}") from exc
        return cls(**kwargs)

    def to_json(self) -> dict:
        return asdict(self)


@dataclass
class SolveReport:
    """Outcome of one solve.

    ``area`` and ``perimeter`` are the exact measures of the realized tangent
    polygon; ``cauchy_area`` / ``cauchy_perimeter`` are the discrete Cauchy
    sums of the same body.
    """

    problem: str
    target: float
    body: ConvexBody
    area: float
    perimeter: float
    perim_residual: float | None
    area_residual: float | None
    containment_residual: float
    convexity_residual: float
    iterations: int
    restarts_used: int
    converged: bool
    status: str
    region: Region | None = field(default=None, repr=False)
    diagnostics: dict = field(default_factory=dict)

    @property
    def polygon(self) -> Polygon:
        return self.body.polygon()

    @property
    def cauchy_area(self) -> float:
        return body_area(self.body)

    @property
    def cauchy_perimeter(self) -> float:
        return body_perimeter(self.body)

    @property
    def center(self) -> tuple[float, float]:
        return self.body.center

    def to_json(self, include_body: bool = True) -> dict:
        out = {
            "problem": self.problem,
            "target": self.target,
            "area": self.area,
            "perimeter": self.perimeter,
            "cauchy_area": self.cauchy_area,
            "cauchy_perimeter": self.cauchy_perimeter,
            "perim_residual": self.perim_residual,
            "area_residual": self.area_residual,
            "containment_residual": self.containment_residual,
            "convexity_residual": self.convexity_residual,
            "iterations": self.iterations,
            "restarts_used": self.restarts_used,
            "converged": self.converged,
            "status": self.status,
            "center": list(self.center),
            "diagnostics": self.diagnostics,
        }
        if include_body:
            out["body"] = self.body.to_json()
            out["polygon"] = self.polygon.to_json()
        return out


@dataclass
class NonexistenceReport:
    """Evidence that the supremum is approached by truncations but not attained."""

    L: float
    reference_area: float | None
    ks: list
    areas: list
    center_ys: list
    message: str
    reports: list = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        return {
            "L": self.L,
            "reference_area": self.reference_area,
            "k": list(self.ks),
            "areas": list(self.areas),
            "center_y": list(self.center_ys),
            "message": self.message,
        }


# -- discretized problem data ------------------------------------------------------

@lru_cache(maxsize=8)
def _area_root(n: int) -> np.ndarray:
    """Matrix ``R`` with ``p^T E p = lam0 (sum p)^2 / n - |R p|^2``."""
    g = grid(n)
    proj = np.eye(n) - np.full((n, n), 1.0 / n)
    neg = -proj @ g.edge_matrix @ proj
    w, V = np.linalg.eigh(0.5 * (neg + neg.T))
    w = np.clip(w, 0.0, None)
    R = (V * np.sqrt(w)) @ V.T
    R.setflags(write=False)
    return R


def _containment_rows(halfplanes, g, origin, scale):
    """Linear rows ``a . p' >= b`` forcing the tangent polygon into the half-planes.

    For a half-plane with inward normal ``n``, the body's extreme point in the
    outward direction ``-n`` is the vertex whose normal cone contains ``-n``.
    """
    rows, rhs = [], []
    for H in halfplanes:
        nx, ny = H.normal
        phi = math.atan2(-ny, -nx) % (2 * math.pi)
        i = int(math.floor(phi / g.step + 1e-9)) % g.n
        rows.append(nx * g.vx[i] + ny * g.vy[i])
        rhs.append((H.offset - nx * origin[0] - ny * origin[1]) / scale)
    return np.array(rows), np.array(rhs)


def _containment_residual(p: np.ndarray, halfplanes) -> float:
    g = grid(len(p))
    v = np.column_stack([g.vx @ p, g.vy @ p])
    worst = 0.0
    for H in halfplanes:
        worst = max(worst, float(-(v @ np.asarray(H.normal) - H.offset).min()))
    return worst


# backend attempts in order; later entries trade accuracy for robustness
_ATTEMPTS = (
    ("CLARABEL", {"tol_gap_abs": 1e-9, "tol_gap_rel": 1e-9, "tol_feas": 1e-9}),
    ("CLARABEL", {"tol_gap_abs": 1e-8, "tol_gap_rel": 1e-8, "tol_feas": 1e-8}),
    ("CVXOPT", {"abstol": 1e-9, "reltol": 1e-9, "feastol": 1e-9}),
    ("SCS", {"eps_abs": 1e-10, "eps_rel": 1e-10}),
)


def _solve(problem: cp.Problem, cfg: SolverConfig) -> tuple[int, int, str]:
    """Run the conic backends in turn; returns (iterations, failed attempts, status)."""
    iters = 0
    last = "not run"
    for attempt in range(cfg.restarts + 1):
        backend, opts = _ATTEMPTS[attempt % len(_ATTEMPTS)]
        limit = cfg.max_iter * (100 if backend == "SCS" else 1)
        opts = dict(opts, **{("max_iter" if backend == "CLARABEL" else "max_iters"): limit})
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", UserWarning)
                problem.solve(solver=backend, **opts)
        except (cp.error.SolverError, ValueError, ArithmeticError) as exc:
            log.debug("backend %s failed: %s", backend, exc)
            last = f"{backend} failed"
            continue
        iters += int(getattr(problem.solver_stats, "num_iters", 0) or 0)
        last = problem.status
        if problem.status in (cp.OPTIMAL, cp.INFEASIBLE):
            return iters, attempt, problem.status
        log.debug("backend %s returned %s", backend, problem.status)
    return iters, cfg.restarts, last


class _Setup:
    """Normalized problem data for one bounded convex polygonal region."""

    def __init__(self, G: Region, cfg: SolverConfig, scale: float):
        if not G.is_bounded:
            raise RejectedInputError("the core solver needs a bounded region; truncate it first")
        self.G = G
        self.cfg = cfg
        self.g = grid(cfg.n_angles)
        inc = inradius(G)
        self.incircle = inc
        self.origin = inc.center
        self.scale = scale
        self.A_in, self.b_in = _containment_rows(G.halfplanes, self.g, self.origin, scale)
        self.R = _area_root(cfg.n_angles)

    def base_constraints(self, p):
        return [
            self.g.edge_matrix @ p >= 0,
            self.A_in @ p >= self.b_in + _MARGIN,
        ]

    def unscale(self, q: np.ndarray) -> np.ndarray:
        return self.scale * q + self.g.u @ np.asarray(self.origin)


def _finish(setup: _Setup, problem: str, target: float, q: np.ndarray, iters: int, restarts: int,
            status: str) -> SolveReport:
    p = setup.unscale(q)
    body = ConvexBody.from_absolute_support(p)
    p = body.absolute_support
    area = tangent_area(p)
    per = tangent_perimeter(p)
    contain = _containment_residual(p, setup.G.halfplanes)
    convex = max(0.0, float(-(setup.g.edge_matrix @ p).min()))
    if problem == "P":
        perim_res, area_res = abs(per - target), None
        ok = perim_res <= PERIM_RTOL * target
    else:
        perim_res, area_res = None, abs(area - target)
        ok = area_res <= PERIM_RTOL * target
    converged = status == cp.OPTIMAL and ok and contain <= CONTAINMENT_TOL
    return SolveReport(
        problem=problem,
        target=float(target),
        body=body,
        area=area,
        perimeter=per,
        perim_residual=perim_res,
        area_residual=area_res,
        containment_residual=contain,
        convexity_residual=convex,
        iterations=iters,
        restarts_used=restarts,
        converged=converged,
        status=status,
        region=setup.G,
        diagnostics={"diameter": diameter(body.polygon())},
    )


# -- problem (P) -------------------------------------------------------------------

def solve_P(G: Region, L: float, cfg: SolverConfig | None = None) -> SolveReport:
    """Maximize area among convex shapes in ``G`` with perimeter ``L``.

    Unbounded regions are handled by :func:`solve_unbounded`.
    """
    cfg = cfg or SolverConfig()
    L = float(L)
    if not L > 0 or not math.isfinite(L):
        raise RejectedInputError("perimeter must be positive and finite")
    if not G.is_bounded:
        out = solve_unbounded(G, L, cfg)
        if isinstance(out, NonexistenceReport):
            raise InfeasibleError(out.message)
        return out
    per_G = region_perimeter(G)
    if L >= per_G:
        raise RejectedInputError(
            f"L = {L} >= Per(G) = {per_G}: for L > Per(G) area-maximizing sets do not exist "
            "(sequences G minus vanishing combs approach area(G) without attaining it)"
        )
    setup = _Setup(G, cfg, scale=L / (2 * math.pi))
    g = setup.g
    target_sum = (L / setup.scale) / g.perimeter_factor
    p = cp.Variable(g.n)
    half = g.n // 2
    width = p[:half] + p[half:]
    cons = setup.base_constraints(p) + [
        cp.sum(p) == target_sum,
        # every width is at most the diameter, which is at most half the perimeter
        width <= 0.5 * L / setup.scale,
    ]
    obj = cp.sum_squares(setup.R @ p)
    prob = cp.Problem(cp.Minimize(obj), cons)
    iters, restarts, status = _solve(prob, cfg)
    if status in (cp.INFEASIBLE, cp.INFEASIBLE_INACCURATE):
        raise InfeasibleError(f"no convex {g.n}-gon of perimeter {L} fits in the region")
    if p.value is None:
        raise NumericalError(f"solver failed: {status}")
    q = p.value.copy()
    return _finish(setup, "P", L, q, iters, restarts, status)


# -- problem (P*) -----------------------------------------------------------------

def solve_Pstar(G: Region, A: float, cfg: SolverConfig | None = None) -> SolveReport:
    """Minimize perimeter among convex shapes in ``G`` with area ``A``."""
    cfg = cfg or SolverConfig()
    A = float(A)
    if not A > 0 or not math.isfinite(A):
        raise RejectedInputError("area must be positive and finite")
    if not G.is_bounded:
        return _solve_Pstar_unbounded(G, A, cfg)
    area_G = region_area(G)
    if A >= area_G:
        raise RejectedInputError(f"A = {A} must be smaller than area(G) = {area_G}")
    setup = _Setup(G, cfg, scale=math.sqrt(A / math.pi))
    g = setup.g
    a_norm = A / setup.scale ** 2
    p = cp.Variable(g.n)
    lam = g.mean_eigenvalue
    soc = cp.SOC(math.sqrt(lam / g.n) * cp.sum(p), cp.hstack([np.array([math.sqrt(2 * a_norm)]), setup.R @ p]))
    cons = setup.base_constraints(p) + [soc]
    obj = cp.sum(p)
    prob = cp.Problem(cp.Minimize(obj), cons)
    iters, restarts, status = _solve(prob, cfg)
    if status in (cp.INFEASIBLE, cp.INFEASIBLE_INACCURATE):
        raise InfeasibleError(f"no convex {g.n}-gon of area {A} fits in the region")
    if p.value is None:
        raise NumericalError(f"solver failed: {status}")
    q = _restore_area(p.value.copy(), a_norm)
    return _finish(setup, "Pstar", A, q, iters, restarts, status)


def _restore_area(q: np.ndarray, a_norm: float) -> np.ndarray:
    """Shrink about the vertex mean so the area is exactly the target.

    The solver may overshoot the (active) area constraint by its tolerance;
    shrinking keeps containment and convexity.
    """
    g = grid(len(q))
    area = tangent_area(q)
    if area <= a_norm:
        return q
    c = np.array([np.mean(g.vx @ q), np.mean(g.vy @ q)])
    base = g.u @ c
    return base + (q - base) * math.sqrt(a_norm / area)


# -- unbounded regions ------------------------------------------------------------

def _disk_report(G: Region, radius_perimeter: float, problem: str, target: float, cfg: SolverConfig,
                 center=None, regime: str = "") -> SolveReport:
    g = grid(cfg.n_angles)
    rho = radius_perimeter / (g.n * g.perimeter_factor)
    circum = rho / math.cos(g.step / 2)
    if center is None:
        center = deep_point(G, circum)
    body = ConvexBody.disk(rho, center, cfg.n_angles)
    p = body.absolute_support
    if problem == "Pstar":
        body = ConvexBody.disk(rho * math.sqrt(target / tangent_area(p)), center, cfg.n_angles)
        p = body.absolute_support
    area, per = tangent_area(p), tangent_perimeter(p)
    pts = body.polygon().vertices
    outside = ~G.contains(pts, tol=CONTAINMENT_TOL)
    return SolveReport(
        problem=problem,
        target=float(target),
        body=body,
        area=area,
        perimeter=per,
        perim_residual=abs(per - target) if problem == "P" else None,
        area_residual=abs(area - target) if problem == "Pstar" else None,
        containment_residual=0.0 if not outside.any() else math.inf,
        convexity_residual=0.0,
        iterations=0,
        restarts_used=0,
        converged=not outside.any(),
        status="analytic",
        region=G,
        diagnostics={"regime": regime, "diameter": 2 * circum},
    )


def _truncation_size(L: float, radius: float) -> int:
    # a convex set of perimeter L touching the incircle lies within L/2 + radius of its center
    return int(math.ceil(max(L + 1.0, 0.5 * L + radius + 1.0)))


def solve_unbounded(G: Region, L: float, cfg: SolverConfig | None = None):
    """Solve (P) in an unbounded convex region through one fixed truncation.

    Returns a :class:`SolveReport`, or a :class:`NonexistenceReport` (with a
    :class:`NonexistenceWarning`) when the incircle radius is not attained and
    ``L`` is too large for a disk.
    """
    cfg = cfg or SolverConfig()
    L = float(L)
    if not L > 0:
        raise RejectedInputError("perimeter must be positive")
    inc = inradius(G)
    if inc.unbounded:
        return _disk_report(G, L, "P", L, cfg, regime="infinite inradius: disk")
    if not inc.attained:
        if L < 2 * math.pi * inc.radius:
            return _disk_report(G, L, "P", L, cfg, regime="disk fits")
        report = truncation_sequence(G, L, cfg=cfg)
        warnings.warn(report.message, NonexistenceWarning, stacklevel=2)
        return report
    if L <= 2 * math.pi * inc.radius:
        return _disk_report(G, L, "P", L, cfg, center=inc.center, regime="disk fits in incircle")
    K = _truncation_size(L, inc.radius)
    reports = [solve_P(truncate(G, k, center=inc.center), L, cfg) for k in (K, K + 2, K + 4)]
    areas = [r.area for r in reports]
    spread = (max(areas) - min(areas)) / max(areas)
    best = reports[0]
    best.diagnostics.update(
        regime="truncation",
        truncation_k=[K, K + 2, K + 4],
        truncation_areas=areas,
        stable=spread <= STABILITY_RTOL,
    )
    best.converged = best.converged and spread <= STABILITY_RTOL
    return best


def _solve_Pstar_unbounded(G: Region, A: float, cfg: SolverConfig) -> SolveReport:
    inc = inradius(G)
    if inc.unbounded:
        return _disk_report(G, 2 * math.sqrt(math.pi * A), "Pstar", A, cfg, regime="infinite inradius: disk")
    if A <= math.pi * inc.radius ** 2:
        center = inc.center if inc.attained else None
        return _disk_report(G, 2 * math.sqrt(math.pi * A), "Pstar", A, cfg, center=center, regime="disk fits")
    if not inc.attained:
        raise UnsupportedOperationError(
            "area exceeds the largest attained disk in a region whose inradius is not attained"
        )
    r = inc.radius
    # a stadium of width 2r and area A is feasible, bounding the optimal perimeter
    per_ub = 2 * (A - math.pi * r * r) / (2 * r) + 2 * math.pi * r
    K = _truncation_size(per_ub, r)
    reports = [solve_Pstar(truncate(G, k, center=inc.center), A, cfg) for k in (K, K + 2)]
    pers = [rep.perimeter for rep in reports]
    spread = (max(pers) - min(pers)) / max(pers)
    best = reports[0]
    best.diagnostics.update(regime="truncation", truncation_k=[K, K + 2], truncation_perimeters=pers,
                            stable=spread <= STABILITY_RTOL)
    best.converged = best.converged and spread <= STABILITY_RTOL
    return best


def truncation_sequence(G: Region, L: float, ks=(5, 10, 20, 40), cfg: SolverConfig | None = None
                        ) -> NonexistenceReport:
    """Solve (P) on the truncations ``G_k`` for each ``k``."""
    cfg = cfg or SolverConfig()
    reports = [solve_P(truncate(G, k), L, cfg) for k in ks]
    ref = math.pi if math.isclose(L, 2 * math.pi, rel_tol=1e-12) else None
    msg = (
        f"incircle radius {inradius(G).radius} is not attained; area-maximizing truncations "
        f"keep growing with k, so (P) has no solution at L = {L}"
    )
    return NonexistenceReport(
        L=float(L),
        reference_area=ref,
        ks=list(ks),
        areas=[r.area for r in reports],
        center_ys=[r.center[1] for r in reports],
        message=msg,
        reports=reports,
    )


# -- translation normalization -------------------------------------------------------

def _feasible_translations(K: Region, C: Polygon, window) -> Polygon | None:
    """Polygon of translations ``t`` with ``t + C`` inside ``K`` (clipped to ``window``)."""
    from .geom import clip_halfplanes

    v = C.vertices
    hps = []
    for H in K.halfplanes:
        n = np.asarray(H.normal)
        hps.append(HalfPlane(H.normal, H.offset - float((v @ n).min())))
    return clip_halfplanes(window, hps)


def translate_to_incircle(K: Region, C, max_iter: int = 20000) -> np.ndarray:
    """Translation ``t`` with ``t + C`` inside ``K`` and touching its incircle.

    Projected gradient descent on ``t -> dist(o - t, C)^2 / 2`` (``o`` the
    incircle center) over the polygon of feasible translations, with exact
    projections.  Stops once the translate meets the incircle disk.
    """
    if isinstance(C, ConvexBody):
        C = C.polygon()
    if K.kind == "cusp":
        raise UnsupportedOperationError("translating to the incircle requires an attained incircle")
    inc = inradius(K)
    if not inc.attained:
        raise RejectedInputError("region has no attained incircle")
    if not K.contains(C.vertices, tol=CONTAINMENT_TOL).all():
        raise RejectedInputError("C is not contained in K")
    o = np.asarray(inc.center)
    r = inc.radius
    tol = 1e-10 * max(1.0, r)

    def gap(t):
        y = o - t
        return float(np.linalg.norm(y - project_onto_convex(C, y))) - r

    t = np.zeros(2)
    if gap(t) <= tol:
        return t
    x0, y0, x1, y1 = C.bbox()
    span = (x1 - x0) + (y1 - y0) + 2 * r + float(np.abs(o).max()) + float(np.abs(C.vertices).max())
    window = Polygon.rectangle(-2 * span, -2 * span, 2 * span, 2 * span)
    T = _feasible_translations(K, C, window)
    if T is None or not point_in_convex(T, t, tol=1e-9):
        raise RejectedInputError("C is not contained in K")
    for _ in range(max_iter):
        y = o - t
        q = project_onto_convex(C, y)
        t_new = project_onto_convex(T, t + (y - q))
        if gap(t_new) <= tol:
            return t_new
        if np.linalg.norm(t_new - t) <= 1e-15 * max(1.0, float(np.abs(t).max())):
            break
        t = t_new
    if gap(t) <= 1e-8:
        return t
    raise NumericalError(f"translation did not reach the incircle (gap {gap(t):.3e})")


def translation_residuals(K: Region, C, t) -> tuple[float, float]:
    """(containment residual of ``t + C`` in ``K``, distance from ``t + C`` to the incircle)."""
    if isinstance(C, ConvexBody):
        C = C.polygon()
    inc = inradius(K)
    pts = C.vertices + np.asarray(t)
    contain = 0.0
    for H in K.halfplanes:
        contain = max(contain, float(-H.signed_distance(pts).min()))
    moved = Polygon(pts)
    o = np.asarray(inc.center)
    dist = float(np.linalg.norm(o - project_onto_convex(moved, o)))
    return contain, max(0.0, dist - inc.radius)


# -- nonexistence for L > Per(G) -------------------------------------------------------

@dataclass(frozen=True)
class CombStep:
    k: int
    teeth: tuple
    area: float
    perimeter: float


def comb(center, ball_radius: float, total_perimeter: float) -> list[Polygon]:
    """Disjoint thin rectangles inside the ball with the given total perimeter.

    With ``a`` the half-side of the square inscribed in half the ball, ``m =
    ceil(D / (4a))`` vertical teeth of width ``t`` and height ``D/(2m) - t``
    have total perimeter exactly ``D``; ``t = a D / (4 m (a + D))`` keeps them
    disjoint and makes their total area shrink with the ball.
    """
    D = float(total_perimeter)
    if not D > 0:
        raise RejectedInputError("comb perimeter must be positive")
    a = ball_radius / 2.0
    m = max(1, math.ceil(D / (4 * a)))
    t = a * D / (4 * m * (a + D))
    height = D / (2 * m) - t
    pitch = 2 * a / m
    cx, cy = center
    teeth = []
    for j in range(m):
        x0 = cx - a + j * pitch + 0.5 * (pitch - t)
        teeth.append(Polygon.rectangle(x0, cy - height / 2, x0 + t, cy + height / 2))
    return teeth


def comb_sequence(G: Region, L: float, ks=range(1, 11)) -> list[CombStep]:
    """Sets ``G - C_k`` of perimeter ``L`` whose areas tend to ``area(G)``."""
    if not G.is_bounded:
        raise RejectedInputError("nonexistence demo needs a bounded region")
    per_G = region_perimeter(G)
    L = float(L)
    if not L > per_G:
        raise RejectedInputError(f"L = {L} must exceed Per(G) = {per_G}")
    inc = inradius(G)
    area_G = region_area(G)
    out = []
    for k in ks:
        teeth = comb(inc.center, inc.radius / k, L - per_G)
        area = area_G - sum(T.area for T in teeth)
        per = per_G + math.fsum(T.perimeter for T in teeth)
        out.append(CombStep(int(k), tuple(teeth), area, per))
    return out


def nonexistence_demo(G: Region, L: float, ks=range(1, 11)) -> list[tuple[float, float]]:
    """(area, perimeter) of ``G - C_k`` for ``k = 1..10``."""
    return [(s.area, s.perimeter) for s in comb_sequence(G, L, ks)]
