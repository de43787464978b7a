"""Thickening cubical complexes into flag complexes.

Vertices of a cell complex joined whenever they share a cell: cubes
become simplices, local largeness is preserved, homotopy type is
preserved (checked through Euler characteristics), and for locally
5-large complexes with the triple intersection property the result
satisfies the wheel conditions of every order.
"""

from weaksys import (
    check_locally_k_large,
    check_locally_k_large_cell,
    check_no_delta,
    check_sd2_star_k,
    euler_characteristic,
    face_complex,
    is_weakly_systolic,
    thicken,
)
from weaksys.corpus import (
    corner_squares_cell,
    cube_cell,
    pentagon_davis_interior,
    three_squares_ring_cell,
    two_cubes_face_cell,
    two_squares_edge_cell,
)

print("== the pipeline on cubical examples ==")
for name, Y in [("single 3-cube", cube_cell(3)),
                ("two squares sharing an edge", two_squares_edge_cell()),
                ("two cubes sharing a face", two_cubes_face_cell()),
                ("Davis ball interior", pentagon_davis_interior(3))]:
    X, flag_verdict = thicken(Y)
    print(f"{name}:")
    print(f"  triple intersections: {check_no_delta(Y).holds}; "
          f"locally 5-large: {check_locally_k_large_cell(Y, 5).holds}")
    print(f"  thickening flag: {flag_verdict.holds}; "
          f"still locally 5-large: {check_locally_k_large(X, 5).holds}")
    print(f"  wheel conditions 6/7: {check_sd2_star_k(X, 6).holds}/"
          f"{check_sd2_star_k(X, 7).holds}; "
          f"weakly systolic: {is_weakly_systolic(X).holds}")
    print(f"  euler characteristic {euler_characteristic(Y)} -> "
          f"{euler_characteristic(X)} (preserved)")

print()
print("== negative examples ==")
ring = three_squares_ring_cell()
v = check_no_delta(ring)
print(f"three squares around a hexagon: triple condition {v.holds}")
print(f"  witness cells: {v.certificate}")

corner = corner_squares_cell()
X, fv = thicken(corner)
print(f"cube corner without the cube: triple condition "
      f"{check_no_delta(corner).holds}, but the vertex link is a hollow "
      f"triangle, so the thickening is not flag: {fv.holds}")
print(f"  clique with no common cell: {fv.certificate}")

print()
print("== face complexes ==")
fc = face_complex(cube_cell(1))
print(f"face complex of one edge: {fc.n} vertices (a triangle)")
