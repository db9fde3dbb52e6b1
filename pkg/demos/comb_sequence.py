"""Why (P) has no solution when L exceeds the perimeter of the region.

The whole unit square has perimeter 4 and area 1, so a set of perimeter 6 can
never beat area 1.  Removing a comb of thin slots near the center adds exactly
2 to the perimeter while costing less and less area as the comb shrinks.  The
supremum is 1, approached but never reached.
"""
from _common import save
from isoperim import Region, comb_sequence, inradius
from isoperim.render import render_svg

G = Region.square()
steps = comb_sequence(G, 6.0)
print("   k   teeth   perimeter   area      1 - 1/k")
for s in steps:
    print(f"  {s.k:2d}   {len(s.teeth):4d}    {s.perimeter:.6f}   {s.area:.6f}   {1 - 1 / s.k:.4f}")
save("comb.svg", render_svg(G, list(steps[0].teeth), inradius(G), title="comb"))
