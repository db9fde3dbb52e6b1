"""Cutting a polygon by a moving half-plane.

For a unit direction ``d`` and level ``alpha`` the cut keeps
``{x : x . d >= alpha}``.  The kept area is continuous and nonincreasing in
``alpha``, so any target area in ``(0, area)`` is reached by bisection, and
replacing the removed boundary by the chord strictly shortens the perimeter.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericalError, RejectedInputError
from .geom import HalfPlane, Polygon, clip_halfplane, polygon_area, polygon_perimeter

MAX_BISECTION_STEPS = 200
AREA_RTOL = 1e-10


@dataclass(frozen=True)
class SliceResult:
    alpha0: float
    clipped: Polygon
    area_achieved: float
    perim_before: float
    perim_after: float
    iterations: int

    @property
    def margin(self) -> float:
        return self.perim_before - self.perim_after

    def to_json(self) -> dict:
        return {
            "alpha0": self.alpha0,
            "area_achieved": self.area_achieved,
            "perim_before": self.perim_before,
            "perim_after": self.perim_after,
            "margin": self.margin,
            "iterations": self.iterations,
            "clipped": self.clipped.to_json(),
        }


def _unit(direction) -> np.ndarray:
    d = np.asarray(direction, dtype=float)
    norm = float(np.hypot(d[0], d[1]))
    if not math.isfinite(norm) or norm == 0.0:
        raise RejectedInputError("cut direction must be a nonzero finite vector")
    if abs(norm - 1.0) > 1e-12:
        raise RejectedInputError("cut direction must be a unit vector")
    return d


def cut_halfplane(direction, alpha: float) -> HalfPlane:
    d = _unit(direction)
    return HalfPlane((float(d[0]), float(d[1])), float(alpha))


def support_interval(F: Polygon, direction) -> tuple[float, float]:
    """Range of ``x . d`` over ``F``; the cut area is full below it and zero above."""
    proj = F.vertices @ _unit(direction)
    return float(proj.min()), float(proj.max())


def volume_cut(F: Polygon, direction, alpha: float) -> float:
    """Area of ``F`` intersected with ``{x . d >= alpha}``."""
    clipped = clip_halfplane(F, cut_halfplane(direction, alpha))
    return 0.0 if clipped is None else polygon_area(clipped)


def slice_to_area(F: Polygon, direction, A: float) -> SliceResult:
    """Find the level whose upper cut of ``F`` has area ``A``.

    Bisection on the support interval; stops once the area error is at most
    ``1e-10 * area(F)``.  On a plateau the smallest admissible level is returned.
    """
    total = polygon_area(F)
    if not (0.0 < A < total):
        raise RejectedInputError(f"target area must lie in (0, {total}), got {A}")
    d = _unit(direction)
    lo, hi = support_interval(F, d)
    tol = AREA_RTOL * total
    alpha = lo
    for it in range(1, MAX_BISECTION_STEPS + 1):
        alpha = 0.5 * (lo + hi)
        h = volume_cut(F, d, alpha)
        if abs(h - A) <= tol:
            # walk down any plateau at level A
            while True:
                lower = 0.5 * (lo + alpha)
                if lower == alpha or abs(volume_cut(F, d, lower) - A) > tol:
                    break
                alpha = lower
            break
        if h > A:
            lo = alpha
        else:
            hi = alpha
        if hi - lo <= 4 * np.spacing(max(abs(lo), abs(hi), 1.0)):
            break
    else:
        raise NumericalError(f"bisection did not converge in {MAX_BISECTION_STEPS} steps")
    clipped = clip_halfplane(F, cut_halfplane(d, alpha))
    if clipped is None:
        raise NumericalError("slice collapsed to an empty set")
    achieved = polygon_area(clipped)
    if abs(achieved - A) > tol:
        raise NumericalError(f"slice area {achieved} misses target {A} by more than {tol}")
    return SliceResult(
        alpha0=float(alpha),
        clipped=clipped,
        area_achieved=achieved,
        perim_before=polygon_perimeter(F),
        perim_after=polygon_perimeter(clipped),
        iterations=it,
    )


def strict_decrease_check(F: Polygon, direction, A: float) -> tuple[bool, float]:
    """Slice ``F`` to area ``A`` and report whether the perimeter dropped.

    Returns ``(perim_after < perim_before, perim_before - perim_after)``.
    """
    res = slice_to_area(F, direction, A)
    return res.margin > 1e-9, res.margin


def boundary_split(F: Polygon, direction, alpha: float) -> tuple[float, float, float]:
    """Boundary length of ``F`` strictly above, strictly below and on the line ``x . d = alpha``.

    The three parts always sum to the perimeter; this is the polygonal form of
    splitting the perimeter into the two open half-planes plus the cut line.
    """
    d = _unit(direction)
    v = F.vertices
    w = np.roll(v, -1, axis=0)
    sa = v @ d - alpha
    sb = w @ d - alpha
    lengths = np.linalg.norm(w - v, axis=1)
    above = below = on = 0.0
    eps = 1e-12
    for a, b, ln in zip(sa, sb, lengths):
        if abs(a) <= eps and abs(b) <= eps:
            on += ln
        elif a >= -eps and b >= -eps:
            above += ln
        elif a <= eps and b <= eps:
            below += ln
        else:
            t = a / (a - b)
            if a > 0:
                above += t * ln
                below += (1 - t) * ln
            else:
                below += t * ln
                above += (1 - t) * ln
    return above, below, on


def chord_length(F: Polygon, direction, alpha: float) -> float:
    """Length of the intersection of the line ``x . d = alpha`` with a convex ``F``."""
    clipped = clip_halfplane(F, cut_halfplane(direction, alpha))
    if clipped is None:
        return 0.0
    return boundary_split(clipped, direction, alpha)[2]
