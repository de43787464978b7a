"""Convexity of balls and neighborhoods.

Vertex balls are always convex in weakly systolic complexes; balls around
edges can fail at radius one (the wheel counterexample) but recover at
radius two; quasi-convex subcomplexes get convex neighborhoods.
"""

from weaksys import (
    ball,
    check_ball_convexity,
    check_edge_descent,
    find_convex_neighborhood,
    geodesics_between,
    is_convex,
    span,
)
from weaksys.corpus import hexpatch_complex, hyp7patch_complex, wheel_complex

print("== the wheel counterexample ==")
W = wheel_complex(5)
Y = ball(W, (1, 2), 1)
v = is_convex(W, Y)
print(f"radius-1 ball around rim edge (r0, r1): {sorted(Y.label_set())}")
print(f"convex: {v.holds}; violating geodesic: "
      f"{tuple(W.label(x) for x in v.certificate)}")
print(f"radius-2 ball is everything and convex: "
      f"{is_convex(W, ball(W, (1, 2), 2)).holds}")

print()
print("== vertex balls in a flat patch ==")
H = hexpatch_complex(3)
all_convex = all(is_convex(H, ball(H, u, i)).holds
                 for u in H.vertices for i in range(H.ecc(u) + 1))
print(f"every ball around every vertex is convex: {all_convex}")
print(f"edge balls of radius 2 are convex as well: "
      f"{check_ball_convexity(H, (0, 1), 2, weakly_systolic=True).holds}")
print(f"edges on spheres descend: "
      f"{check_edge_descent(H, (0, 1), weakly_systolic=True).holds}")

print()
print("== convex neighborhoods ==")
P = hyp7patch_complex(2)
n, K = find_convex_neighborhood(P, span(P, 0), 3)
print(f"a vertex: convex at radius {n} (quasi-convexity constant {K})")
seg = geodesics_between(P, 0, 27).paths[0]
n, K = find_convex_neighborhood(P, span(P, seg), 4)
print(f"a geodesic segment of length {len(seg) - 1}: convex ball at "
      f"radius {n} (constant {K})")
