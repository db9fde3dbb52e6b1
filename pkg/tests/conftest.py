import math

import numpy as np
import pytest
from hypothesis import strategies as st

from isoperim.geom import Polygon, convex_hull


def random_convex_polygon(rng: np.random.Generator, n: int | None = None, scale: float = 1.0) -> Polygon:
    """Hull of random points on a perturbed ellipse; always at least a triangle."""
    n = n or int(rng.integers(3, 12))
    while True:
        t = np.sort(rng.uniform(0, 2 * math.pi, n))
        a, b = rng.uniform(0.5, 2.0, 2)
        r = rng.uniform(0.7, 1.0, n)
        pts = np.column_stack([a * r * np.cos(t), b * r * np.sin(t)]) * scale
        pts += rng.uniform(-3, 3, 2)
        try:
            P = convex_hull(pts)
        except ValueError:
            continue
        if P.area > 1e-3 * scale * scale:
            return P


@st.composite
def convex_polygons(draw, min_points=3, max_points=12):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(min_points, max_points))
    return random_convex_polygon(np.random.default_rng(seed), n)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def unit_square():
    return Polygon.rectangle(0.0, 0.0, 1.0, 1.0)


def polygon_away_from_incircle(rng: np.random.Generator, K: Polygon) -> Polygon:
    """Small random convex polygon inside K that misses K's incircle disk."""
    from isoperim.region import Region, inradius

    G = Region.from_polygon(K)
    inc = inradius(G)
    o = np.asarray(inc.center)
    while True:
        v = K.vertices[rng.integers(len(K))]
        q = v + rng.uniform(0.1, 0.3) * (K.vertices.mean(axis=0) - v)
        C = random_convex_polygon(rng)
        C = C.vertices - C.vertices.mean(axis=0)
        s = 1.0
        for _ in range(60):
            pts = C * s + q
            clear = np.hypot(*(pts - o).T).min() > inc.radius * 1.01
            if clear and G.contains(pts, tol=0.0).all():
                return Polygon(pts)
            s *= 0.8
