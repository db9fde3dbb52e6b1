"""Minimal SVG output of a region with solved shapes and its dashed incircle."""
from __future__ import annotations

import math

import numpy as np

from .geom import Polygon
from .region import Incircle, Region, truncate

WIDTH_PX = 800
MARGIN = 0.05


def _fmt(x: float) -> str:
    return f"{x:.6f}"


class _Canvas:
    def __init__(self, bbox):
        x0, y0, x1, y1 = bbox
        w, h = max(x1 - x0, 1e-9), max(y1 - y0, 1e-9)
        self.x0 = x0 - MARGIN * w
        self.y1 = y1 + MARGIN * h
        self.scale = WIDTH_PX / (w * (1 + 2 * MARGIN))
        self.width = WIDTH_PX
        self.height = h * (1 + 2 * MARGIN) * self.scale

    def pt(self, x, y) -> str:
        return f"{_fmt((x - self.x0) * self.scale)},{_fmt((self.y1 - y) * self.scale)}"

    def path(self, vertices) -> str:
        pts = " L ".join(self.pt(x, y) for x, y in vertices)
        return f"M {pts} Z"


def _display_polygon(G: Region, shapes, incircle) -> Polygon:
    if G.is_bounded:
        return G.polygon
    pts = [s.vertices for s in shapes]
    if incircle is not None and incircle.center is not None and not incircle.unbounded:
        c, r = incircle.center, incircle.radius
        pts.append(np.array([[c[0] - r, c[1] - r], [c[0] + r, c[1] + r]]))
    if not pts:
        return truncate(G, 2.0).polygon
    allpts = np.vstack(pts)
    center = allpts.mean(axis=0)
    k = float(np.abs(allpts - center).max()) * 1.5 + 0.5
    return truncate(G, k, center=tuple(center)).polygon


def render_svg(G: Region, shapes=(), incircle: Incircle | None = None, title: str = "") -> str:
    """SVG document showing ``G`` (truncated for display if unbounded) and ``shapes``."""
    shapes = [s for s in shapes if s is not None]
    outline = _display_polygon(G, shapes, incircle)
    boxes = [outline.bbox()] + [s.bbox() for s in shapes]
    bbox = (
        min(b[0] for b in boxes),
        min(b[1] for b in boxes),
        max(b[2] for b in boxes),
        max(b[3] for b in boxes),
    )
    cv = _Canvas(bbox)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(cv.width)}" height="{_fmt(cv.height)}" '
        f'viewBox="0 0 {_fmt(cv.width)} {_fmt(cv.height)}">',
    ]
    if title:
        parts.append(f"<title>{title}</title>")
    parts.append(
        f'<path d="{cv.path(outline.vertices)}" fill="#f2f2f2" stroke="#000000" stroke-width="{_fmt(1.5)}"/>'
    )
    for s in shapes:
        parts.append(
            f'<path d="{cv.path(s.vertices)}" fill="#3b6fb6" fill-opacity="{_fmt(0.35)}" stroke="#1f4e8c" '
            f'stroke-width="{_fmt(1.5)}"/>'
        )
    if incircle is not None and incircle.center is not None and not math.isinf(incircle.radius):
        cx, cy = incircle.center
        x, y = cv.pt(cx, cy).split(",")
        parts.append(
            f'<circle cx="{x}" cy="{y}" r="{_fmt(incircle.radius * cv.scale)}" fill="none" '
            f'stroke="#c0392b" stroke-width="{_fmt(1.0)}" stroke-dasharray="{_fmt(6.0)},{_fmt(4.0)}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
