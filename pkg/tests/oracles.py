"""Independent reference computations used by the unit and acceptance tests."""
import itertools
import math

import numpy as np

from isoperim.body import ConvexBody
from isoperim.geom import Polygon, edge_halfplanes


def tangent_triple_inradius(P: Polygon) -> float:
    """Largest circle tangent to three edge lines and inside every half-plane."""
    hps = edge_halfplanes(P)
    best = 0.0
    for a, b, c in itertools.combinations(hps, 3):
        M = np.array([[*H.normal, -1.0] for H in (a, b, c)])
        rhs = np.array([H.offset for H in (a, b, c)])
        if abs(np.linalg.det(M)) < 1e-12:
            continue
        x, y, r = np.linalg.solve(M, rhs)
        if r <= best:
            continue
        if all(float(np.min(H.signed_distance([(x, y)]))) >= r - 1e-12 for H in hps):
            best = r
    return best


def chord_width(vertices, d, level):
    """Length of {x . d = level} inside the polygon, by intersecting every edge."""
    v = vertices
    w = np.roll(v, -1, axis=0)
    a, b = v @ d - level, w @ d - level
    perp = np.array([-d[1], d[0]])
    hits = []
    for p, q, sa, sb in zip(v, w, a, b):
        if sa == sb:
            if sa == 0:
                hits += [p @ perp, q @ perp]
            continue
        t = sa / (sa - sb)
        if 0 <= t <= 1:
            hits.append((p + t * (q - p)) @ perp)
    return max(hits) - min(hits) if hits else 0.0


def scan_oracle(P: Polygon, d, A: float, n: int = 10**6) -> float:
    """Level whose upper part has area A, from a dense scan of the area function."""
    d = np.asarray(d, dtype=float)
    v = P.vertices
    lo, hi = float((v @ d).min()), float((v @ d).max())
    knots = np.unique(np.concatenate([[lo, hi], v @ d]))
    widths = np.array([chord_width(v, d, k) for k in knots])
    alpha = np.linspace(lo, hi, n)
    w = np.interp(alpha, knots, widths)  # chord width is piecewise linear between vertex levels
    step = alpha[1] - alpha[0]
    seg = 0.5 * (w[1:] + w[:-1]) * step
    above = np.concatenate([np.cumsum(seg[::-1])[::-1], [0.0]])
    # above is decreasing; interpolate on the reversed (increasing) arrays
    return float(np.interp(A, above[::-1], alpha[::-1]))


def cauchy_area(h) -> float:
    n = len(h)
    step = 2 * math.pi / n
    dh = (np.roll(h, -1) - np.roll(h, 1)) / (2 * step)
    return 0.5 * step * float(np.sum(h * h - dh * dh))


def fd_gradient(f, h, step=1e-6):
    g = np.empty_like(h)
    for i in range(len(h)):
        e = np.zeros_like(h)
        e[i] = step
        g[i] = (f(h + e) - f(h - e)) / (2 * step)
    return g


def random_body(rng, n) -> ConvexBody:
    """Smooth body: unit support plus a few decaying Fourier modes, kept strictly convex."""
    theta = 2 * math.pi * np.arange(n) / n
    h = np.ones(n)
    for k in range(2, 6):
        amp = rng.uniform(-1, 1, 2) * 0.15 / (k * k)
        h += amp[0] * np.cos(k * theta) + amp[1] * np.sin(k * theta)
    return ConvexBody(h * rng.uniform(0.5, 3.0), tuple(rng.uniform(-2, 2, 2)))


def ellipse_body(a, b, n) -> ConvexBody:
    theta = 2 * math.pi * np.arange(n) / n
    return ConvexBody(np.sqrt((a * np.cos(theta)) ** 2 + (b * np.sin(theta)) ** 2))


def rounded_square_area(L: float) -> float:
    """Best area among unit squares with corners rounded to radius rho and perimeter L."""
    rho = (4 - L) / (8 - 2 * math.pi)
    return 1 - (4 - math.pi) * rho * rho
