"""Sliding a convex set inside a region until it meets the incircle.

Every convex C inside a convex K can be translated, staying inside K, until it
touches the largest inscribed disk.  Truncations can therefore be centered at
the incircle without losing candidates.  Here the translation is found by
projected gradient descent on the distance from the incircle center.
"""
import numpy as np

from _common import save
from isoperim import Polygon, Region, inradius, translate_to_incircle
from isoperim.render import render_svg
from isoperim.solver import translation_residuals

K = Region.from_polygon(Polygon([(0, 0), (6, 0), (7, 2), (2, 4)]))
C = Polygon.regular(5, 0.4, center=(5.8, 0.8))
inc = inradius(K)

t = translate_to_incircle(K, C)
contain, gap = translation_residuals(K, C, t)
print(f"incircle center {np.round(inc.center, 4)}, radius {inc.radius:.4f}")
print(f"translation {np.round(t, 6)}")
print(f"containment residual {contain:.1e}, distance to incircle {gap:.1e}")
moved = C.translated(*t)
save("translation.svg", render_svg(K, [C, moved], inc, title="translation"))
