"""Thin bigons, flat triangles, and the boundary inverse system.

The flat triangular patch carries wide bigons and embedded flat
triangles of every side; the order-7 patch has thin bigons, strictly
nested projections, and a simplicial sphere projection system.  The
side-2 triangle is special: it has no interior vertex, so it embeds even
in the order-7 world.
"""

from weaksys import (
    check_strict_contraction,
    check_thin_bigons,
    export_boundary_system,
    find_flat_triangle,
)
from weaksys.corpus import hexpatch_complex, hyp7patch_complex

print("== flat patch (radius 4) ==")
H = hexpatch_complex(4)
verdict, worst = check_thin_bigons(H, 4)
print(f"bigons thin up to distance 4: {verdict.holds}")
print(f"worst pair (width {worst.max_width}):")
print(f"  {tuple(H.label(v) for v in worst.geodesic_a)}")
print(f"  {tuple(H.label(v) for v in worst.geodesic_b)}")
tri = find_flat_triangle(H, 3)
print(f"flat triangle of side 3 found: {tri is not None}")
print(f"projection nesting from the center: "
      f"{check_strict_contraction(H, 0).holds}")

print()
print("== order-7 patch (radius 3) ==")
P = hyp7patch_complex(3)
verdict, worst = check_thin_bigons(P, P.diameter())
print(f"bigons thin at the diameter {P.diameter()}: {verdict.holds} "
      f"(worst width {worst.max_width})")
print(f"flat triangle of side 3: {find_flat_triangle(P, 3)}")
tri2 = find_flat_triangle(P, 2)
print(f"flat triangle of side 2 (no interior vertex, always embeds): "
      f"{tri2 is not None}")
print(f"projection nesting: {check_strict_contraction(P, 0).holds}")

print()
print("== boundary system ==")
B = hyp7patch_complex(4)
system = export_boundary_system(B, 0, 2)
print(f"levels at sphere radii {[lvl.radius for lvl in system.levels]} "
      f"with {[lvl.size for lvl in system.levels]} barycenters")
sample = list(system.maps[0].items())[:3]
for s, img in sample:
    print(f"  {B.label_set(s)} -> {B.label_set(img)}")
