import math

import numpy as np
import pytest
from scipy.integrate import quad

from oracles import cauchy_area, ellipse_body, fd_gradient, random_body
from isoperim.body import (
    ConvexBody,
    body_area,
    body_area_grad,
    body_perimeter,
    body_perimeter_grad,
    tangent_area,
    tangent_area_grad,
    tangent_perimeter,
)
from isoperim.errors import RejectedInputError






def ellipse_perimeter(a, b):
    return quad(lambda t: math.hypot(a * math.sin(t), b * math.cos(t)), 0, 2 * math.pi)[0]




def test_disk_measures_are_exact():
    B = ConvexBody.disk(2.0, n_angles=64)
    assert body_area(B) == pytest.approx(4 * math.pi, rel=1e-14)
    assert body_perimeter(B) == pytest.approx(4 * math.pi, rel=1e-14)


def test_stadium_cauchy_sums():
    # unit square with two half-disk caps of radius 1/2; the flat sides put kinks in h,
    # which the central difference resolves only to O(1/N), hence the fine grid
    B = ConvexBody.stadium(1.0, 1.0, n_angles=2048)
    assert body_area(B) == pytest.approx(1.0 + math.pi / 4, abs=1e-3)
    assert body_perimeter(B) == pytest.approx(2.0 + math.pi, abs=1e-3)
    # the realized tangent polygon has no such error
    assert B.polygon().area == pytest.approx(1.0 + math.pi / 4, abs=1e-5)


def test_tangent_measures_equal_realized_polygon(rng):
    for n in (32, 64, 256):
        B = random_body(rng, n)
        P = B.polygon()
        p = B.absolute_support
        assert tangent_area(p) == pytest.approx(P.area, rel=1e-12)
        assert tangent_perimeter(p) == pytest.approx(P.perimeter, rel=1e-12)
    # flat sides (repeated vertices) are handled too
    S = ConvexBody.stadium(3.0, 1.0, n_angles=128)
    assert tangent_area(S.absolute_support) == pytest.approx(S.polygon().area, rel=1e-12)


def test_tangent_area_is_translation_invariant(rng):
    B = random_body(rng, 64)
    assert tangent_area(B.translated(5, -3).absolute_support) == pytest.approx(tangent_area(B.absolute_support))
    assert B.translated(5, -3).polygon().area == pytest.approx(B.polygon().area)


def test_from_absolute_support_roundtrip(rng):
    B = random_body(rng, 128)
    C = ConvexBody.from_absolute_support(B.absolute_support)
    np.testing.assert_allclose(C.absolute_support, B.absolute_support, atol=1e-12)
    assert C.support.min() > 0


def test_invalid_bodies_rejected():
    n = 64
    with pytest.raises(RejectedInputError):
        ConvexBody(np.ones(16))
    with pytest.raises(RejectedInputError):
        ConvexBody(np.full(n, np.nan))
    with pytest.raises(RejectedInputError):
        ConvexBody(-np.ones(n))
    h = np.ones(n)
    h[5] = 2.0  # a spike breaks discrete convexity
    with pytest.raises(RejectedInputError):
        ConvexBody(h)


def test_gradients_match_finite_differences(rng):
    for i in range(20):
        B = random_body(rng, 64 if i % 2 else 128)
        h = np.array(B.support)
        # evaluate the Cauchy sums off the convex cone too: they are polynomials in h
        g = body_area_grad(B)
        fd = fd_gradient(cauchy_area, h)
        assert np.linalg.norm(fd - g) <= 1e-5 * np.linalg.norm(g)
        gp = body_perimeter_grad(B)
        fdp = fd_gradient(lambda x: B.grid.step * x.sum(), h)
        assert np.linalg.norm(fdp - gp) <= 1e-5 * np.linalg.norm(gp)
        p = B.absolute_support
        ga = tangent_area_grad(p)
        assert np.linalg.norm(fd_gradient(tangent_area, p) - ga) <= 1e-5 * np.linalg.norm(ga)




def test_cauchy_helper_agrees_with_body_area(rng):
    B = random_body(rng, 64)
    assert cauchy_area(np.array(B.support)) == pytest.approx(body_area(B), rel=1e-14)


def test_cauchy_area_converges_at_second_order():
    a, b = 1.0, 0.6
    errs = [abs(body_area(ellipse_body(a, b, n)) - math.pi * a * b) for n in (64, 128, 256)]
    orders = [math.log2(e0 / e1) for e0, e1 in zip(errs, errs[1:])]
    assert min(orders) >= 1.8


def test_cauchy_perimeter_converges():
    # the perimeter sum is the trapezoid rule on a smooth periodic integrand, which
    # converges faster than any power: the error is at rounding level already at N = 64
    a, b = 1.0, 0.6
    exact = ellipse_perimeter(a, b)
    errs = [abs(body_perimeter(ellipse_body(a, b, n)) - exact) for n in (64, 128, 256)]
    assert errs[0] < 1e-6
    assert max(errs[1:]) < 1e-10


def test_realized_polygon_converges_to_smooth_body():
    a, b = 1.0, 0.6
    errs = [abs(ellipse_body(a, b, n).polygon().area - math.pi * a * b) for n in (64, 128, 256)]
    orders = [math.log2(e0 / e1) for e0, e1 in zip(errs, errs[1:])]
    assert min(orders) >= 1.8
