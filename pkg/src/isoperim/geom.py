"""Exact planar polygon primitives.

All predicates use the single absolute tolerance :data:`EPS`.  Polygons are
immutable; area and perimeter are recomputed on every call.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import DegenerateInputError, RejectedInputError

EPS = 1e-12


class Point(NamedTuple):
    x: float
    y: float


def _as_array(points) -> np.ndarray:
    arr = np.array(points, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise RejectedInputError(f"expected an (n, 2) array of points, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise RejectedInputError("coordinates must be finite")
    return arr


def signed_area(vertices: np.ndarray) -> float:
    """Shoelace signed area of a closed vertex ring (no validation)."""
    x, y = vertices[:, 0], vertices[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _edges_cross(verts: np.ndarray) -> bool:
    """True if two non-adjacent edges of the ring intersect."""
    n = len(verts)
    a = verts
    b = np.roll(verts, -1, axis=0)
    i, j = np.triu_indices(n, k=2)
    keep = ~((i == 0) & (j == n - 1))
    i, j = i[keep], j[keep]
    p, r = a[i], b[i] - a[i]
    q, s = a[j], b[j] - a[j]

    def orient(o, d, pt):
        return d[:, 0] * (pt[:, 1] - o[:, 1]) - d[:, 1] * (pt[:, 0] - o[:, 0])

    d1 = orient(p, r, q)
    d2 = orient(p, r, q + s)
    d3 = orient(q, s, p)
    d4 = orient(q, s, p + r)
    proper = (d1 * d2 < -EPS) & (d3 * d4 < -EPS)
    if np.any(proper):
        return True
    # touching configurations: an endpoint lying on the other segment
    def on_segment(o, d, pt, orient_val):
        t = ((pt - o) * d).sum(axis=1)
        dd = (d * d).sum(axis=1)
        return (np.abs(orient_val) <= EPS) & (t >= -EPS) & (t <= dd + EPS)

    touch = (
        on_segment(p, r, q, d1)
        | on_segment(p, r, q + s, d2)
        | on_segment(q, s, p, d3)
        | on_segment(q, s, p + r, d4)
    )
    return bool(np.any(touch))


def _is_convex_ring(verts: np.ndarray, tol: float = EPS) -> bool:
    e = np.roll(verts, -1, axis=0) - verts
    en = np.roll(e, -1, axis=0)
    cross = e[:, 0] * en[:, 1] - e[:, 1] * en[:, 0]
    if np.any(cross < -tol):
        return False
    # a convex CCW ring turns exactly once
    ang = np.arctan2(e[:, 1], e[:, 0])
    turn = np.diff(np.concatenate([ang, ang[:1]]))
    turn = (turn + np.pi) % (2 * np.pi) - np.pi
    return abs(turn.sum() - 2 * np.pi) < 1e-6


class Polygon:
    """Simple counterclockwise polygon, closed implicitly.

    Construction validates the invariants: at least three vertices, no two
    consecutive vertices closer than ``EPS``, positive signed area and no
    self-intersection.
    """

    __slots__ = ("_v",)

    def __init__(self, vertices: Iterable[Sequence[float]] | np.ndarray):
        v = _as_array(vertices)
        if len(v) < 3:
            raise RejectedInputError("a polygon needs at least 3 vertices")
        step = np.linalg.norm(np.roll(v, -1, axis=0) - v, axis=1)
        if np.any(step <= EPS):
            raise RejectedInputError("consecutive vertices coincide")
        if signed_area(v) <= 0.0:
            raise RejectedInputError("vertices must be in counterclockwise order")
        if not _is_convex_ring(v) and _edges_cross(v):
            raise RejectedInputError("polygon is not simple")
        v.setflags(write=False)
        self._v = v

    @property
    def vertices(self) -> np.ndarray:
        return self._v

    def __len__(self) -> int:
        return len(self._v)

    def __iter__(self):
        return (Point(float(x), float(y)) for x, y in self._v)

    def __repr__(self) -> str:
        return f"Polygon(n={len(self._v)}, area={self.area:.6g})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Polygon) and np.array_equal(self._v, other._v)

    def __hash__(self) -> int:
        return hash(self._v.tobytes())

    @property
    def area(self) -> float:
        return polygon_area(self)

    @property
    def perimeter(self) -> float:
        return polygon_perimeter(self)

    def is_convex(self, tol: float = EPS) -> bool:
        return _is_convex_ring(self._v, tol)

    def translated(self, dx: float, dy: float) -> "Polygon":
        return Polygon(self._v + np.array([dx, dy]))

    def rotated(self, angle: float, about=(0.0, 0.0)) -> "Polygon":
        c, s = math.cos(angle), math.sin(angle)
        o = np.asarray(about, dtype=float)
        rot = np.array([[c, -s], [s, c]])
        return Polygon((self._v - o) @ rot.T + o)

    def bbox(self) -> tuple[float, float, float, float]:
        lo = self._v.min(axis=0)
        hi = self._v.max(axis=0)
        return float(lo[0]), float(lo[1]), float(hi[0]), float(hi[1])

    def to_json(self) -> dict:
        return {"vertices": self._v.tolist()}

    @classmethod
    def from_json(cls, data: dict) -> "Polygon":
        if not isinstance(data, dict) or set(data) != {"vertices"}:
            raise RejectedInputError("polygon JSON must be an object with exactly the field 'vertices'")
        return cls(data["vertices"])

    @classmethod
    def regular(cls, n: int, radius: float = 1.0, center=(0.0, 0.0), phase: float = 0.0) -> "Polygon":
        t = phase + 2 * np.pi * np.arange(n) / n
        return cls(np.column_stack([center[0] + radius * np.cos(t), center[1] + radius * np.sin(t)]))

    @classmethod
    def rectangle(cls, x0: float, y0: float, x1: float, y1: float) -> "Polygon":
        return cls([(x0, y0), (x1, y0), (x1, y1), (x0, y1)])


@dataclass(frozen=True)
class HalfPlane:
    """The closed set ``{(x, y) : a*x + b*y >= c}`` with ``(a, b)`` a unit vector."""

    normal: tuple[float, float]
    offset: float

    def __post_init__(self):
        a, b = (float(t) for t in self.normal)
        if not (math.isfinite(a) and math.isfinite(b) and math.isfinite(self.offset)):
            raise RejectedInputError("half-plane coefficients must be finite")
        if abs(math.hypot(a, b) - 1.0) > EPS:
            raise RejectedInputError(f"half-plane normal {self.normal} is not a unit vector")
        object.__setattr__(self, "normal", (a, b))
        object.__setattr__(self, "offset", float(self.offset))

    @classmethod
    def from_coefficients(cls, a: float, b: float, c: float) -> "HalfPlane":
        """Normalize ``a*x + b*y >= c`` to unit normal form."""
        norm = math.hypot(a, b)
        if norm <= EPS:
            raise DegenerateInputError("half-plane normal has zero length")
        return cls((a / norm, b / norm), c / norm)

    @classmethod
    def through(cls, point, inward_normal) -> "HalfPlane":
        a, b = inward_normal
        norm = math.hypot(a, b)
        a, b = a / norm, b / norm
        return cls((a, b), a * point[0] + b * point[1])

    def complement(self) -> "HalfPlane":
        return HalfPlane((-self.normal[0], -self.normal[1]), -self.offset)

    def signed_distance(self, pts) -> np.ndarray:
        pts = np.asarray(pts, dtype=float)
        return pts @ np.asarray(self.normal) - self.offset

    def contains(self, pt, tol: float = EPS) -> bool:
        return float(self.signed_distance(pt)) >= -tol

    def to_json(self) -> dict:
        return {"normal": list(self.normal), "offset": self.offset}


def polygon_area(P: Polygon) -> float:
    if not isinstance(P, Polygon):
        raise RejectedInputError("polygon_area expects a Polygon")
    return signed_area(P.vertices)


def polygon_perimeter(P: Polygon) -> float:
    if not isinstance(P, Polygon):
        raise RejectedInputError("polygon_perimeter expects a Polygon")
    v = P.vertices
    return float(np.linalg.norm(np.roll(v, -1, axis=0) - v, axis=1).sum())


def _dedupe_ring(pts: list) -> list:
    out = []
    for p in pts:
        if not out or math.hypot(p[0] - out[-1][0], p[1] - out[-1][1]) > EPS:
            out.append(p)
    while len(out) > 1 and math.hypot(out[0][0] - out[-1][0], out[0][1] - out[-1][1]) <= EPS:
        out.pop()
    return out


def clip_halfplane(P: Polygon, H: HalfPlane) -> Polygon | None:
    """Sutherland-Hodgman clip of ``P`` against one half-plane.

    Returns ``None`` when the intersection has no interior.  Vertices lying on
    the cut line (within ``EPS``) are emitted once.
    """
    if not isinstance(P, Polygon):
        raise RejectedInputError("clip_halfplane expects a Polygon")
    v = P.vertices
    s = H.signed_distance(v)
    if np.all(s >= -EPS):
        return P
    if np.all(s <= EPS):
        return None
    n = len(v)
    out = []
    for i in range(n):
        j = (i + 1) % n
        si, sj = s[i], s[j]
        if si >= -EPS:
            out.append((float(v[i, 0]), float(v[i, 1])))
        if (si > EPS and sj < -EPS) or (si < -EPS and sj > EPS):
            t = si / (si - sj)
            out.append((float(v[i, 0] + t * (v[j, 0] - v[i, 0])), float(v[i, 1] + t * (v[j, 1] - v[i, 1]))))
    out = _dedupe_ring(out)
    if len(out) < 3:
        return None
    arr = np.array(out)
    if signed_area(arr) <= EPS:
        return None
    return Polygon(arr)


def clip_halfplanes(P: Polygon, halfplanes: Iterable[HalfPlane]) -> Polygon | None:
    for H in halfplanes:
        P = clip_halfplane(P, H)
        if P is None:
            return None
    return P


def convex_hull(points) -> Polygon:
    """Counterclockwise hull via Andrew's monotone chain; collinear points dropped."""
    pts = _as_array(points)
    pts = np.unique(pts, axis=0)
    if len(pts) < 3:
        raise DegenerateInputError("convex hull needs at least 3 distinct points")
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    pts = [tuple(p) for p in pts[order]]

    def half(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= EPS:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3 or signed_area(np.array(hull)) <= EPS:
        raise DegenerateInputError("all points are collinear")
    return Polygon(hull)


def diameter(P: Polygon) -> float:
    """Largest vertex-to-vertex distance."""
    v = P.vertices
    if len(v) > 64:
        try:
            v = convex_hull(v).vertices
        except DegenerateInputError:
            pass
    diff = v[:, None, :] - v[None, :, :]
    return float(np.sqrt((diff ** 2).sum(axis=-1)).max())


def point_in_convex(P: Polygon, pt, tol: float = EPS) -> bool:
    v = P.vertices
    e = np.roll(v, -1, axis=0) - v
    w = np.asarray(pt, dtype=float) - v
    cross = e[:, 0] * w[:, 1] - e[:, 1] * w[:, 0]
    lengths = np.linalg.norm(e, axis=1)
    return bool(np.all(cross / lengths >= -tol))


def project_onto_convex(P: Polygon, pt) -> np.ndarray:
    """Closest point of the convex polygon ``P`` to ``pt``."""
    pt = np.asarray(pt, dtype=float)
    if point_in_convex(P, pt, tol=0.0):
        return pt.copy()
    a = P.vertices
    d = np.roll(a, -1, axis=0) - a
    t = np.clip(((pt - a) * d).sum(axis=1) / (d * d).sum(axis=1), 0.0, 1.0)
    cand = a + t[:, None] * d
    k = int(np.argmin(((cand - pt) ** 2).sum(axis=1)))
    return cand[k]


def edge_halfplanes(P: Polygon) -> list[HalfPlane]:
    """Inward half-planes of the edges of a convex CCW polygon."""
    v = P.vertices
    out = []
    for i in range(len(v)):
        a, b = v[i], v[(i + 1) % len(v)]
        d = b - a
        out.append(HalfPlane.through(a, (-d[1], d[0])))
    return out
