"""Admissible regions, their incircles and bounded truncations.

Four kinds are supported: a convex polygon, an intersection of finitely many
half-planes (possibly unbounded), the horizontal stripe ``R x [0, w]`` and the
fixed cusp ``{-1 < x < 1, y >= x^2 / (1 - x^2)}``.  All of them are convex
with a Lebesgue-null boundary.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy.optimize import linprog

from .errors import InfeasibleError, RejectedInputError, UnsupportedOperationError
from .geom import (
    EPS,
    HalfPlane,
    Polygon,
    clip_halfplanes,
    edge_halfplanes,
    polygon_area,
    polygon_perimeter,
)

KINDS = ("convex_polygon", "halfplane_intersection", "stripe", "cusp")
_JSON_FIELDS = {
    "convex_polygon": {"kind", "vertices"},
    "halfplane_intersection": {"kind", "halfplanes"},
    "stripe": {"kind", "width"},
    "cusp": {"kind"},
}

# curve samples per unit of truncation size
CUSP_SAMPLES_PER_K = 64


@dataclass(frozen=True)
class Incircle:
    """Largest disk in the closure of a region.

    ``radius`` is ``math.inf`` (and ``center`` is ``None``) when arbitrarily
    large disks fit.  ``attained`` is False when the supremum radius is not
    realized by any disk.  ``unique`` is False when several centers realize it.
    """

    center: tuple[float, float] | None
    radius: float
    attained: bool
    unique: bool = True

    @property
    def unbounded(self) -> bool:
        return math.isinf(self.radius)

    def to_json(self) -> dict:
        return {
            "center": None if self.center is None else list(self.center),
            "radius": None if self.unbounded else self.radius,
            "attained": self.attained,
            "unique": self.unique,
        }


@dataclass(frozen=True, eq=False)
class Region:
    kind: str
    halfplanes: tuple[HalfPlane, ...] = ()
    width: float | None = None
    boundary: Polygon | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise RejectedInputError(f"unknown region kind {self.kind!r}")

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_polygon(cls, P) -> "Region":
        if not isinstance(P, Polygon):
            P = Polygon(P)
        if not P.is_convex(tol=1e-9):
            raise RejectedInputError("convex_polygon region requires a convex polygon")
        return cls("convex_polygon", tuple(edge_halfplanes(P)), boundary=P)

    @classmethod
    def from_halfplanes(cls, halfplanes) -> "Region":
        hps = tuple(halfplanes)
        if not hps:
            raise RejectedInputError("halfplane_intersection needs at least one half-plane")
        region = cls("halfplane_intersection", hps)
        center, radius = _chebyshev(hps)
        if radius <= EPS:
            raise InfeasibleError("half-planes have no common interior point")
        return region

    @classmethod
    def stripe(cls, width: float) -> "Region":
        width = float(width)
        if not width > 0 or not math.isfinite(width):
            raise RejectedInputError("stripe width must be positive and finite")
        hps = (HalfPlane((0.0, 1.0), 0.0), HalfPlane((0.0, -1.0), -width))
        return cls("stripe", hps, width=width)

    @classmethod
    def cusp(cls) -> "Region":
        return cls("cusp")

    @classmethod
    def square(cls, side: float = 1.0, origin=(0.0, 0.0)) -> "Region":
        x0, y0 = origin
        return cls.from_polygon(Polygon.rectangle(x0, y0, x0 + side, y0 + side))

    # -- queries ----------------------------------------------------------
    @property
    def is_bounded(self) -> bool:
        if self.kind == "convex_polygon":
            return True
        if self.kind in ("stripe", "cusp"):
            return False
        return _extent(self.halfplanes) is not None

    @property
    def polygon(self) -> Polygon:
        """Boundary polygon of a bounded region."""
        if self.boundary is not None:
            return self.boundary
        if self.kind != "halfplane_intersection" or not self.is_bounded:
            raise UnsupportedOperationError(f"{self.kind} region is unbounded; truncate it first")
        x0, y0, x1, y1 = _extent(self.halfplanes)
        pad = 1.0 + max(x1 - x0, y1 - y0)
        box = Polygon.rectangle(x0 - pad, y0 - pad, x1 + pad, y1 + pad)
        P = clip_halfplanes(box, self.halfplanes)
        if P is None:
            raise InfeasibleError("region is empty")
        object.__setattr__(self, "boundary", P)
        return P

    def contains(self, pts, tol: float = 1e-9) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        if self.kind == "cusp":
            x, y = pts[:, 0], pts[:, 1]
            inside = np.abs(x) < 1.0
            with np.errstate(divide="ignore", invalid="ignore"):
                f = np.where(inside, x * x / (1.0 - x * x), np.inf)
            return inside & (y >= f - tol)
        ok = np.ones(len(pts), dtype=bool)
        for H in self.halfplanes:
            ok &= H.signed_distance(pts) >= -tol
        return ok

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        if self.kind == "convex_polygon":
            return {"kind": self.kind, "vertices": self.boundary.vertices.tolist()}
        if self.kind == "halfplane_intersection":
            return {"kind": self.kind, "halfplanes": [H.to_json() for H in self.halfplanes]}
        if self.kind == "stripe":
            return {"kind": self.kind, "width": self.width}
        return {"kind": self.kind}

    @classmethod
    def from_json(cls, data: dict) -> "Region":
        if not isinstance(data, dict):
            raise RejectedInputError("region JSON must be an object")
        kind = data.get("kind")
        if kind not in _JSON_FIELDS:
            raise RejectedInputError(f"field 'kind': expected one of {list(KINDS)}, got {kind!r}")
        extra = set(data) - _JSON_FIELDS[kind]
        if extra:
            raise RejectedInputError(f"field {sorted(extra)[0]!r} is not allowed for kind {kind!r}")
        missing = _JSON_FIELDS[kind] - set(data)
        if missing:
            raise RejectedInputError(f"field {sorted(missing)[0]!r} is required for kind {kind!r}")
        if kind == "convex_polygon":
            try:
                return cls.from_polygon(Polygon(data["vertices"]))
            except RejectedInputError as exc:
                raise RejectedInputError(f"field 'vertices': {exc}") from exc
        if kind == "halfplane_intersection":
            hps = []
            for i, item in enumerate(data["halfplanes"]):
                if not isinstance(item, dict) or set(item) != {"normal", "offset"}:
                    raise RejectedInputError(f"field 'halfplanes[{i}]': expected keys 'normal' and 'offset'")
                try:
                    hps.append(HalfPlane(tuple(item["normal"]), float(item["offset"])))
                except (RejectedInputError, TypeError, ValueError) as exc:
                    raise RejectedInputError(f"field 'halfplanes[{i}]': {exc}") from exc
            return cls.from_halfplanes(hps)
        if kind == "stripe":
            try:
                return cls.stripe(data["width"])
            except (RejectedInputError, TypeError, ValueError) as exc:
                raise RejectedInputError(f"field 'width': {exc}") from exc
        return cls.cusp()

    @classmethod
    def load(cls, path) -> "Region":
        try:
            data = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise RejectedInputError(f"malformed region JSON: {exc}") from exc
        return cls.from_json(data)


# -- linear programs ----------------------------------------------------------

def _lp_matrices(halfplanes):
    n = np.array([H.normal for H in halfplanes])
    c = np.array([H.offset for H in halfplanes])
    return n, c


def _chebyshev(halfplanes, cap: float | None = None):
    """Maximize r subject to n_i . x - c_i >= r.  Returns (center, radius)."""
    n, c = _lp_matrices(halfplanes)
    A = np.column_stack([-n, np.ones(len(n))])
    res = linprog(
        [0.0, 0.0, -1.0],
        A_ub=A,
        b_ub=-c,
        bounds=[(None, None), (None, None), (0.0, cap)],
        method="highs",
    )
    if res.status == 3:
        return None, math.inf
    if res.status == 2:
        raise InfeasibleError("half-planes have empty intersection")
    if res.status != 0:
        raise InfeasibleError(f"Chebyshev LP failed: {res.message}")
    return (float(res.x[0]), float(res.x[1])), float(res.x[2])


def _lp_support(halfplanes, direction) -> float:
    n, c = _lp_matrices(halfplanes)
    res = linprog(
        -np.asarray(direction, dtype=float),
        A_ub=-n,
        b_ub=-c,
        bounds=[(None, None), (None, None)],
        method="highs",
    )
    if res.status == 3:
        return math.inf
    if res.status != 0:
        raise InfeasibleError(f"support LP failed: {res.message}")
    return float(-res.fun)


def _extent(halfplanes):
    vals = [_lp_support(halfplanes, d) for d in ((1, 0), (0, 1), (-1, 0), (0, -1))]
    if any(math.isinf(v) for v in vals):
        return None
    return -vals[2], -vals[3], vals[0], vals[1]


def _center_is_unique(halfplanes, radius: float) -> bool:
    n, c = _lp_matrices(halfplanes)
    slack = 1e-9 * max(1.0, radius)
    spans = []
    for d in ((1, 0), (0, 1)):
        vals = []
        for sign in (1, -1):
            res = linprog(
                -sign * np.asarray(d, dtype=float),
                A_ub=-n,
                b_ub=-(c + radius - slack),
                bounds=[(None, None), (None, None)],
                method="highs",
            )
            if res.status == 3:
                return False
            if res.status != 0:
                return True
            vals.append(-res.fun * sign)
        spans.append(vals[0] - vals[1])
    return max(spans) <= 1e-6 * max(1.0, radius)


# -- public operations ---------------------------------------------------------

def inradius(G: Region) -> Incircle:
    """Incircle of ``G``: Chebyshev-center LP for polygonal kinds."""
    if G.kind == "stripe":
        return Incircle((0.0, G.width / 2), G.width / 2, attained=True, unique=False)
    if G.kind == "cusp":
        return Incircle(None, 1.0, attained=False, unique=False)
    center, radius = _chebyshev(G.halfplanes)
    if math.isinf(radius):
        return Incircle(None, math.inf, attained=False, unique=False)
    if radius <= EPS:
        raise InfeasibleError("region has empty interior")
    return Incircle(center, radius, attained=True, unique=_center_is_unique(G.halfplanes, radius))


def deep_point(G: Region, radius: float) -> tuple[float, float]:
    """Center of some disk of the given radius inside ``G`` (LP with capped radius)."""
    if G.kind == "cusp":
        if radius >= 1.0:
            raise InfeasibleError("the cusp contains no disk of radius >= 1")
        # the disk centered at (0, y) fits once y is large enough
        y = 1.0
        while not _cusp_disk_fits(y, radius):
            y *= 2.0
        return (0.0, y)
    center, r = _chebyshev(G.halfplanes, cap=radius)
    if r < radius * (1 - 1e-12):
        raise InfeasibleError(f"no disk of radius {radius} fits in the region")
    return center


def _cusp_disk_fits(y0: float, r: float) -> bool:
    t = np.linspace(0, 2 * np.pi, 721)
    pts = np.column_stack([r * np.cos(t), y0 + r * np.sin(t)])
    return bool(Region.cusp().contains(pts, tol=0.0).all())


def cusp_polygon(y_top: float, samples: int) -> Polygon:
    """Chord polygon of the cusp below height ``y_top``.

    The curve is sampled at ``samples`` points per side with ``y = y_top s^2``,
    which keeps the chords short near the tip and in the steep upper part.
    Chords of the convex boundary curve lie inside the region.
    """
    s = np.linspace(0.0, 1.0, samples)
    y = y_top * s * s
    x = np.sqrt(y / (1.0 + y))
    right = np.column_stack([x, y])
    left = np.column_stack([-x[::-1], y[::-1]])[:-1]
    return Polygon(np.vstack([right, left]))


def _box(center, k: float) -> list[HalfPlane]:
    cx, cy = center
    return [
        HalfPlane((1.0, 0.0), cx - k),
        HalfPlane((-1.0, 0.0), -(cx + k)),
        HalfPlane((0.0, 1.0), cy - k),
        HalfPlane((0.0, -1.0), -(cy + k)),
    ]


def truncate(G: Region, k: float, center=(0.0, 0.0)) -> Region:
    """Intersect the closure of ``G`` with the square of half-size ``k`` about ``center``.

    The result is always a ``convex_polygon`` region.  For the cusp, the curve is
    replaced by its chord polygon with at least ``64 k`` samples.
    """
    if not k > 0:
        raise RejectedInputError("truncation size must be positive")
    box = _box(center, k)
    if G.kind == "cusp":
        y_top = center[1] + k
        if y_top <= 0:
            raise InfeasibleError("truncation box misses the cusp")
        samples = max(16, int(math.ceil(CUSP_SAMPLES_PER_K * k / 2))) + 1
        P = clip_halfplanes(cusp_polygon(y_top, samples), box)
    elif G.kind == "convex_polygon":
        P = clip_halfplanes(G.boundary, box)
    else:
        cx, cy = center
        P = clip_halfplanes(Polygon.rectangle(cx - k, cy - k, cx + k, cy + k), G.halfplanes)
    if P is None:
        raise InfeasibleError(f"truncation of the {G.kind} region at k={k} is empty")
    return Region.from_polygon(P)


def support_value(G: Region, theta: float) -> float:
    """Support function ``sup_{x in G} x . (cos theta, sin theta)``; may be ``inf``."""
    u = (math.cos(theta), math.sin(theta))
    if G.kind == "cusp":
        raise UnsupportedOperationError("support_value is not available for the cusp; truncate it first")
    if G.kind == "convex_polygon":
        return float((G.boundary.vertices @ np.asarray(u)).max())
    if G.kind == "stripe":
        if abs(u[0]) > EPS:
            return math.inf
        return G.width if u[1] > 0 else 0.0
    return _lp_support(G.halfplanes, u)


def _bounded_polygon(G: Region, k) -> Polygon:
    if G.is_bounded:
        return G.polygon
    if k is None:
        raise RejectedInputError(f"{G.kind} region is unbounded; pass a truncation size k")
    return truncate(G, k).polygon


def region_perimeter(G: Region, k: float | None = None) -> float:
    """Perimeter of ``G`` (bounded kinds) or of its truncation ``G_k``."""
    return polygon_perimeter(_bounded_polygon(G, k))


def region_area(G: Region, k: float | None = None) -> float:
    return polygon_area(_bounded_polygon(G, k))
