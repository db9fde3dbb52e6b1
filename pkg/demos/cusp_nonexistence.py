"""No set of perimeter 2 pi maximizes area in the cusp.

The cusp {-1 < x < 1, y >= x^2 / (1 - x^2)} narrows to width 2 only at infinity,
so it contains disks of every radius below 1 but none of radius 1.  A maximizer
of perimeter 2 pi would have area pi, which only the unit disk achieves.  On the
truncations G_k the maximizers creep upward and their areas approach pi from
below without ever reaching it.
"""
import math

from _common import save
from isoperim import cusp_nonexistence_profile

prof = cusp_nonexistence_profile(2 * math.pi, (5, 10, 20, 40))
print("   k      area        pi - area   center y")
for k, area, cy in prof.rows():
    print(f"  {k:3d}   {area:.6f}   {math.pi - area:.2e}   {cy:8.3f}")
print(f"increasing: {prof.increasing}, all below pi: {prof.below_reference}, "
      f"center escapes: {prof.center_diverges}")
save("cusp.csv", prof.to_csv())
