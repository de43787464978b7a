"""Unrolling complexes into their universal covers.

The cover of the flat 7x7 torus grows sphere by sphere into the flat
triangular lattice; the 4-cycle unrolls into a line; the Klein surface
unrolls into the order-7 tiling.  Validation re-derives the covering data
independently.
"""

from collections import Counter

from weaksys import build_cover, detect_nontrivial_pi1, validate_cover
from weaksys.corpus import (
    cycle_complex,
    flag_torus_complex,
    hexpatch_complex,
    klein_quartic_complex,
    wheel_complex,
)

print("== flat torus ==")
T = flag_torus_complex(7, 7)
pc = build_cover(T, 0, 5)
print(f"cover ball of radius 5: {pc.cover.n} vertices")
print(f"sphere sizes: {pc.sphere_sizes}")
lattice = hexpatch_complex(5)
sizes = Counter(lattice.dist_from(0))
print(f"flat lattice ball:      {[sizes[i] for i in range(6)]}")
print(f"validation: {validate_cover(pc).describe()}")

print()
print("== 4-cycle ==")
C = cycle_complex(4)
pc = build_cover(C, 0, 3)
degrees = sorted(pc.cover.skeleton.degree(v) for v in pc.cover.vertices)
print(f"radius-3 cover has {pc.cover.n} vertices with degrees {degrees}")
print("(a path: the universal cover of a circle is a line)")

print()
print("== Klein surface ==")
K = klein_quartic_complex()
pc = build_cover(K, 0, 3)
print(f"24-vertex surface unrolls: radius-3 cover has {pc.cover.n} vertices,")
print(f"sphere sizes {pc.sphere_sizes} (the order-7 tiling grows 1,7,21,56)")

print()
print("== detecting fundamental groups ==")
for name, X in [("torus", T), ("4-cycle", C), ("klein", K),
                ("5-wheel", wheel_complex(5)),
                ("hexpatch", hexpatch_complex(2))]:
    print(f"  {name}: nontrivial loops = {detect_nontrivial_pi1(X)}")
