"""Convex bodies sampled by their support function on a uniform angle grid.

A body stores ``h_i``, the support value in direction ``theta_i = 2 pi i / N``
measured from ``center``.  The absolute support numbers are
``p_i = h_i + center . u_i`` and the realized shape is the tangent polygon
``{x : x . u_i <= p_i for all i}``.

Two families of measures are provided:

* the Cauchy sums ``body_area`` / ``body_perimeter`` (central differences for
  ``h'``), accurate to ``O(N^-2)`` for smooth support functions;
* the exact area and perimeter of the tangent polygon (``tangent_area`` /
  ``tangent_perimeter``), which are what the solver optimizes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import RejectedInputError
from .geom import EPS, Polygon

MIN_ANGLES = 32
CONVEXITY_TOL = 1e-9


@dataclass(frozen=True)
class Grid:
    """Precomputed trigonometry and linear maps for ``N`` support angles."""

    n: int
    step: float
    theta: np.ndarray
    u: np.ndarray
    # (p_{i-1} + p_{i+1} - 2 cos(step) p_i) / sin(step): edge lengths of the tangent polygon
    edge_matrix: np.ndarray
    # vertex i is the intersection of tangent lines i and i+1
    vx: np.ndarray
    vy: np.ndarray

    @property
    def perimeter_factor(self) -> float:
        """Tangent polygon perimeter per unit of ``sum(p)``."""
        return 2.0 * math.tan(self.step / 2)

    @property
    def mean_eigenvalue(self) -> float:
        """Eigenvalue of ``edge_matrix`` on constant vectors."""
        return (2.0 - 2.0 * math.cos(self.step)) / math.sin(self.step)


@lru_cache(maxsize=16)
def grid(n: int) -> Grid:
    if n < 3:
        raise RejectedInputError("need at least 3 support angles")
    step = 2 * math.pi / n
    theta = step * np.arange(n)
    u = np.column_stack([np.cos(theta), np.sin(theta)])
    eye = np.eye(n)
    nxt = np.roll(eye, 1, axis=1)  # (nxt @ p)_i = p_{i+1}
    prv = nxt.T
    sin_d = math.sin(step)
    edge = (nxt + prv - 2 * math.cos(step) * eye) / sin_d
    c_next = np.roll(u[:, 0], -1)
    s_next = np.roll(u[:, 1], -1)
    vx = (np.diag(s_next) - np.diag(u[:, 1]) @ nxt) / sin_d
    vy = (np.diag(u[:, 0]) @ nxt - np.diag(c_next)) / sin_d
    for arr in (theta, u, edge, vx, vy):
        arr.setflags(write=False)
    return Grid(n, step, theta, u, edge, vx, vy)


@dataclass(frozen=True, eq=False)
class ConvexBody:
    support: np.ndarray
    center: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        h = np.array(self.support, dtype=float)
        if h.ndim != 1 or len(h) < MIN_ANGLES:
            raise RejectedInputError(f"support must be a vector of at least {MIN_ANGLES} values")
        if not np.all(np.isfinite(h)):
            raise RejectedInputError("support values must be finite")
        scale = max(1.0, float(np.abs(h).max()))
        if h.min() < -CONVEXITY_TOL * scale:
            raise RejectedInputError("support values must be nonnegative (center inside the body)")
        g = grid(len(h))
        lengths = g.edge_matrix @ h * math.sin(g.step)
        if lengths.min() < -CONVEXITY_TOL * scale:
            raise RejectedInputError(
                f"support violates discrete convexity (min second difference {lengths.min():.3e})"
            )
        h.setflags(write=False)
        object.__setattr__(self, "support", h)
        object.__setattr__(self, "center", (float(self.center[0]), float(self.center[1])))

    @property
    def n_angles(self) -> int:
        return len(self.support)

    @property
    def grid(self) -> Grid:
        return grid(self.n_angles)

    @property
    def absolute_support(self) -> np.ndarray:
        return self.support + self.grid.u @ np.asarray(self.center)

    def vertices(self) -> np.ndarray:
        """Tangent-line intersections, one per angle (repeated where edges vanish)."""
        p = self.absolute_support
        g = self.grid
        return np.column_stack([g.vx @ p, g.vy @ p])

    def polygon(self) -> Polygon:
        v = self.vertices()
        tol = 1e-9 * max(1.0, float(np.abs(self.support).max()))
        keep = [v[0]]
        for pt in v[1:]:
            if np.hypot(*(pt - keep[-1])) > tol:
                keep.append(pt)
        while len(keep) > 1 and np.hypot(*(keep[0] - keep[-1])) <= tol:
            keep.pop()
        return Polygon(np.array(keep))

    def translated(self, dx: float, dy: float) -> "ConvexBody":
        return ConvexBody(self.support, (self.center[0] + dx, self.center[1] + dy))

    def to_json(self) -> dict:
        return {
            "n_angles": self.n_angles,
            "center": list(self.center),
            "support": self.support.tolist(),
        }

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_absolute_support(cls, p) -> "ConvexBody":
        """Body from absolute support numbers; the center is the vertex mean.

        The vertex mean is the discrete Steiner point of the tangent polygon and
        lies inside it, so the relative support values are nonnegative.
        """
        p = np.asarray(p, dtype=float)
        g = grid(len(p))
        c = np.array([np.mean(g.vx @ p), np.mean(g.vy @ p)])
        h = p - g.u @ c
        h = np.where(np.abs(h) < EPS * max(1.0, np.abs(p).max()), 0.0, h)
        return cls(h, (float(c[0]), float(c[1])))

    @classmethod
    def disk(cls, radius: float, center=(0.0, 0.0), n_angles: int = 256) -> "ConvexBody":
        return cls(np.full(n_angles, float(radius)), center)

    @classmethod
    def stadium(cls, length: float, width: float, center=(0.0, 0.0), axis: float = 0.0,
                n_angles: int = 256) -> "ConvexBody":
        """Convex hull of two disks of diameter ``width`` whose centers are ``length`` apart."""
        theta = grid(n_angles).theta
        h = 0.5 * length * np.abs(np.cos(theta - axis)) + 0.5 * width
        return cls(h, center)


# -- Cauchy sums ----------------------------------------------------------------

def _central_derivative(h: np.ndarray, step: float) -> np.ndarray:
    return (np.roll(h, -1) - np.roll(h, 1)) / (2 * step)


def body_area(B: ConvexBody) -> float:
    """Discrete ``(1/2) integral (h^2 - h'^2) dtheta`` with central differences."""
    h = B.support
    step = B.grid.step
    dh = _central_derivative(h, step)
    return 0.5 * step * float(np.sum(h * h - dh * dh))


def body_perimeter(B: ConvexBody) -> float:
    """Discrete ``integral h dtheta``."""
    return B.grid.step * float(np.sum(B.support))


def body_area_grad(B: ConvexBody) -> np.ndarray:
    """Gradient of :func:`body_area` with respect to the support values."""
    h = B.support
    step = B.grid.step
    dh = _central_derivative(h, step)
    # d/dh_j of sum_i dh_i^2 = 2 (dh_{j-1} - dh_{j+1}) / (2 step)
    return step * h - 0.5 * (np.roll(dh, 1) - np.roll(dh, -1))


def body_perimeter_grad(B: ConvexBody) -> np.ndarray:
    return np.full(B.n_angles, B.grid.step)


# -- tangent polygon measures ----------------------------------------------------

def edge_lengths(p: np.ndarray) -> np.ndarray:
    return grid(len(p)).edge_matrix @ p


def tangent_area(p: np.ndarray) -> float:
    """Exact area of the tangent polygon with support numbers ``p`` (convex case)."""
    p = np.asarray(p, dtype=float)
    return 0.5 * float(p @ edge_lengths(p))


def tangent_area_grad(p: np.ndarray) -> np.ndarray:
    """Gradient of :func:`tangent_area`; the edge-length map is symmetric."""
    return edge_lengths(np.asarray(p, dtype=float))


def tangent_perimeter(p: np.ndarray) -> float:
    p = np.asarray(p, dtype=float)
    return grid(len(p)).perimeter_factor * float(p.sum())
