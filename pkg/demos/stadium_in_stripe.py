"""The area-maximizing set of perimeter pi + 2 in a stripe of width 1.

A disk of perimeter pi + 2 has diameter about 1.64 and does not fit, so the
optimum presses against both walls.  The answer is a stadium: a unit square
flanked by two half-disks of radius 1/2, with area 1 + pi/4.
"""
import math

from _common import save
from isoperim import Region, inradius, solve_unbounded
from isoperim.geom import diameter
from isoperim.render import render_svg

G = Region.stripe(1.0)
L = math.pi + 2

rep = solve_unbounded(G, L)
print(f"area      {rep.area:.6f}   (stadium: {1 + math.pi / 4:.6f})")
print(f"perimeter {rep.perimeter:.6f}")
print(f"diameter  {diameter(rep.polygon):.6f}   (bound L/2 = {L / 2:.6f})")
print(f"truncations {rep.diagnostics['truncation_k']} gave areas "
      + ", ".join(f"{a:.9f}" for a in rep.diagnostics["truncation_areas"]))

ys = rep.polygon.vertices[:, 1]
print(f"touches the walls at y = {ys.min():.6f} and y = {ys.max():.6f}")
save("stadium.svg", render_svg(G, [rep.polygon], inradius(G), title="stadium in a stripe"))
