import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import convex_polygons, random_convex_polygon
from isoperim.errors import DegenerateInputError, RejectedInputError
from isoperim.geom import (
    HalfPlane,
    Polygon,
    clip_halfplane,
    clip_halfplanes,
    convex_hull,
    diameter,
    edge_halfplanes,
    point_in_convex,
    polygon_area,
    polygon_perimeter,
    project_onto_convex,
)


def test_unit_square_measures(unit_square):
    assert polygon_area(unit_square) == pytest.approx(1.0, abs=1e-15)
    assert polygon_perimeter(unit_square) == pytest.approx(4.0, abs=1e-15)
    assert diameter(unit_square) == pytest.approx(math.sqrt(2))


def test_regular_polygon_matches_closed_form():
    for n in (3, 6, 100):
        P = Polygon.regular(n, 2.0)
        assert P.area == pytest.approx(0.5 * n * 4.0 * math.sin(2 * math.pi / n), rel=1e-13)
        assert P.perimeter == pytest.approx(2 * n * 2.0 * math.sin(math.pi / n), rel=1e-13)


def test_rejects_bad_polygons():
    with pytest.raises(RejectedInputError):
        Polygon([(0, 0), (1, 0)])
    with pytest.raises(RejectedInputError):
        Polygon([(0, 0), (0, 1), (1, 1), (1, 0)])  # clockwise
    with pytest.raises(RejectedInputError):
        Polygon([(0, 0), (0, 0), (1, 0), (0, 1)])
    with pytest.raises(RejectedInputError):
        Polygon([(0, 0), (2, 0), (0, 1), (2, 1)][::1] + [(1, -1)])


def test_nonconvex_polygon_is_allowed_but_flagged():
    L = Polygon([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])
    assert not L.is_convex()
    assert L.area == pytest.approx(3.0)


def test_clip_square_in_half(unit_square):
    H = HalfPlane((0.0, 1.0), 0.5)
    top = clip_halfplane(unit_square, H)
    assert top.area == pytest.approx(0.5)
    assert top.perimeter == pytest.approx(3.0)


def test_clip_misses_and_contains(unit_square):
    assert clip_halfplane(unit_square, HalfPlane((0.0, 1.0), 2.0)) is None
    same = clip_halfplane(unit_square, HalfPlane((0.0, 1.0), -1.0))
    assert same.area == pytest.approx(1.0)
    # a line through a vertex only touches the square
    assert clip_halfplane(unit_square, HalfPlane.from_coefficients(1, 1, 2)) is None


def test_clip_through_vertex_emits_it_once(unit_square):
    tri = clip_halfplane(unit_square, HalfPlane.from_coefficients(1, 1, 1))
    assert len(tri) == 3
    assert tri.area == pytest.approx(0.5)


def test_halfplane_normalization():
    H = HalfPlane.from_coefficients(3, 4, 5)
    assert H.normal == pytest.approx((0.6, 0.8))
    assert H.offset == pytest.approx(1.0)
    with pytest.raises(DegenerateInputError):
        HalfPlane.from_coefficients(0, 0, 1)
    with pytest.raises(RejectedInputError):
        HalfPlane((1.0, 1.0), 0.0)
    assert H.complement().contains((0.0, 0.0))


def test_convex_hull_examples():
    pts = [(0, 0), (1, 0), (1, 1), (0, 1), (0.5, 0.5), (0.5, 0.0)]
    H = convex_hull(pts)
    assert len(H) == 4 and H.area == pytest.approx(1.0)
    with pytest.raises(DegenerateInputError):
        convex_hull([(0, 0), (1, 1), (2, 2)])


def test_polygon_json_roundtrip(unit_square):
    data = json.loads(json.dumps(unit_square.to_json()))
    assert Polygon.from_json(data) == unit_square
    with pytest.raises(RejectedInputError):
        Polygon.from_json({"vertices": data["vertices"], "extra": 1})


def test_projection_and_membership(unit_square):
    assert point_in_convex(unit_square, (0.5, 0.5))
    assert not point_in_convex(unit_square, (1.5, 0.5))
    assert project_onto_convex(unit_square, (2.0, 3.0)) == pytest.approx([1.0, 1.0])
    assert project_onto_convex(unit_square, (0.5, -2.0)) == pytest.approx([0.5, 0.0])
    assert project_onto_convex(unit_square, (0.3, 0.4)) == pytest.approx([0.3, 0.4])


# -- properties -------------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(convex_polygons(), st.floats(0, 2 * math.pi), st.floats(-5, 5), st.floats(-5, 5))
def test_rigid_motion_invariance(P, angle, dx, dy):
    Q = P.rotated(angle).translated(dx, dy)
    assert Q.area == pytest.approx(P.area, rel=1e-9)
    assert Q.perimeter == pytest.approx(P.perimeter, rel=1e-9)
    assert diameter(Q) == pytest.approx(diameter(P), rel=1e-9)


@settings(max_examples=60, deadline=None)
@given(convex_polygons(), st.floats(0, 2 * math.pi), st.floats(0.01, 0.99))
def test_clip_area_additivity(P, angle, frac):
    u = np.array([math.cos(angle), math.sin(angle)])
    proj = P.vertices @ u
    c = proj.min() + frac * (proj.max() - proj.min())
    H = HalfPlane(tuple(u), float(c))
    a = clip_halfplane(P, H)
    b = clip_halfplane(P, H.complement())
    total = (0.0 if a is None else a.area) + (0.0 if b is None else b.area)
    assert total == pytest.approx(P.area, rel=1e-9)
    for piece in (a, b):
        if piece is not None:
            assert piece.is_convex(tol=1e-9)


@settings(max_examples=80, deadline=None)
@given(convex_polygons())
def test_isoperimetric_inequality_and_diameter_bound(P):
    assert P.perimeter ** 2 >= 4 * math.pi * P.area
    assert diameter(P) <= P.perimeter / 2 + 1e-12


@settings(max_examples=40, deadline=None)
@given(convex_polygons(), convex_polygons())
def test_intersection_of_convex_polygons_is_convex(P, Q):
    R = clip_halfplanes(P, edge_halfplanes(Q))
    if R is not None:
        assert R.is_convex(tol=1e-9)
        assert R.area <= min(P.area, Q.area) * (1 + 1e-9)


@settings(max_examples=40, deadline=None)
@given(convex_polygons(), st.floats(-10, 10), st.floats(-10, 10))
def test_projection_is_nearest_point(P, x, y):
    q = project_onto_convex(P, (x, y))
    assert point_in_convex(P, q, tol=1e-9)
    # brute-force: no boundary sample is closer
    v = P.vertices
    w = np.roll(v, -1, axis=0)
    t = np.linspace(0, 1, 201)[:, None, None]
    samples = (v + t * (w - v)).reshape(-1, 2)
    best = np.hypot(*(samples - (x, y)).T).min()
    d = math.hypot(q[0] - x, q[1] - y)
    assert d <= best + 1e-9


def test_diameter_matches_brute_force(rng):
    for _ in range(50):
        P = random_convex_polygon(rng)
        v = P.vertices
        brute = max(math.dist(a, b) for a in v for b in v)
        assert diameter(P) == pytest.approx(brute, rel=1e-12)
