"""The isoperimetric profile of the unit square.

For small areas the optimal set is a free disk, so ell(A) = 2 sqrt(pi A).  Once
the disk no longer fits, the optimum becomes the square with its corners rounded
off by quarter circles, and ell(A) climbs to the full perimeter 4.  The area
profile a(L) is the inverse function; the round trip is checked at the end.
"""
import math

import numpy as np

from _common import save
from isoperim import Region, inradius, profile_ell, reciprocity_check
from isoperim.profile import default_grid
from isoperim.render import render_svg

G = Region.square()
tab = profile_ell(G, default_grid(1.0, 12))


def rounded_corner_perimeter(A):
    # square with four corners rounded to radius rho: area 1 - (4 - pi) rho^2
    rho = math.sqrt((1 - A) / (4 - math.pi))
    return 4 - (8 - 2 * math.pi) * rho


print("     A      ell(A)    closed form")
for A, ell in tab.rows:
    closed = 2 * math.sqrt(math.pi * A) if A <= math.pi / 4 else rounded_corner_perimeter(A)
    print(f"  {A:.4f}   {ell:.6f}   {closed:.6f}")

save("profile_ell.csv", tab.to_csv())
save("profile.svg", render_svg(G, [r.polygon for r in tab.reports[::3]], inradius(G), title="profile"))

rep = reciprocity_check(G, n=6)
print(f"round trip: area error {rep.area_error:.1e}, perimeter error {rep.perimeter_error:.1e}")
print(f"strictly increasing: {rep.ell_increasing and rep.a_increasing}")
print(f"largest step of ell on the grid: {np.max(np.diff(tab.dependent)):.4f}")
