"""Cutting a convex polygon down to a target area always shortens it.

Sliding a half-plane across the polygon makes the kept area fall continuously
from the full area to zero, so bisection finds the level for any target.  The
removed boundary is replaced by a straight chord, which is strictly shorter.
"""
import math

import numpy as np

from _common import save
from isoperim import Region, slice_to_area
from isoperim.geom import convex_hull
from isoperim.render import render_svg

rng = np.random.default_rng(1)
P = convex_hull(rng.normal(size=(12, 2)))
d = (math.cos(0.7), math.sin(0.7))

for frac in (0.9, 0.5, 0.1):
    res = slice_to_area(P, d, frac * P.area)
    print(f"keep {frac:.0%}: level {res.alpha0:+.6f}, perimeter {res.perim_before:.4f} -> {res.perim_after:.4f} "
          f"({res.iterations} bisection steps)")
save("slice.svg", render_svg(Region.from_polygon(P), [res.clipped], None, title="slice"))
