"""Descent and wheel conditions on small complexes.

Walks through the local checkers on the classic test cases: the
octahedron (which fails everything interesting), small cycles (which
separate the wheel conditions from simple descent), the flat torus, and
a hyperbolic-flavored patch.
"""

from weaksys import (
    check_locally_k_large,
    check_sd2_star,
    check_sd2_star_k,
    check_simple_descent,
    collapse_schedule,
    enumerate_wheels,
    is_weakly_systolic,
    project,
    replay_collapse,
)
from weaksys.conditions import render_certificate
from weaksys.corpus import (
    cycle_complex,
    flag_torus_complex,
    hyp7patch_complex,
    octahedron_complex,
    wheel_complex,
)


def show(X, verdict):
    print(f"  {verdict.describe(X)}")


print("== octahedron ==")
X = octahedron_complex()
print("Each vertex has an antipode whose projection inward is a 4-cycle,")
print("so simple descent fails and 4-wheels appear:")
p = project(X, 0, (3,))
print(f"  projection of the antipode: {X.label_set(p.vertices)}, "
      f"simplex: {p.is_simplex}")
show(X, check_simple_descent(X, 0, 1))
show(X, check_sd2_star(X))
print(f"  4-wheels found: {sum(1 for _ in enumerate_wheels(X, 4))}")
show(X, is_weakly_systolic(X))

print()
print("== small cycles ==")
print("The 4- and 5-cycle satisfy the wheel condition vacuously but fail")
print("simple descent at every vertex:")
for k in (4, 5):
    C = cycle_complex(k)
    star = check_sd2_star(C).holds
    descent = all(check_simple_descent(C, v, 2).holds for v in C.vertices)
    print(f"  {k}-cycle: wheel condition {star}, descent anywhere {descent}")

print()
print("== flat torus (49 vertices) ==")
T = flag_torus_complex(7, 7)
show(T, check_locally_k_large(T, 6))
show(T, check_sd2_star(T))
v7 = check_sd2_star_k(T, 7)
print("  order-7 wheel condition fails, the flat hexagon wheel is "
      "undominated:")
print(f"    {render_certificate(v7.certificate, T)}")
print("  weak systolicity fails (the torus is not simply connected):")
show(T, is_weakly_systolic(T))

print()
print("== order-7 patch ==")
H = hyp7patch_complex(2)
show(H, check_locally_k_large(H, 7))
show(H, check_sd2_star_k(H, 7))
show(H, is_weakly_systolic(H))

print()
print("== collapsing a wheel ==")
W = wheel_complex(5)
sched = collapse_schedule(W, 0)
print(f"  schedule for the 5-wheel from its hub: {len(sched.steps)} steps")
for step in sched.steps[:4]:
    print(f"    radius {step.radius} dim {step.dim}: "
          f"{W.label_set(step.simplex)} -> {W.label_set(step.projection)}")
print(f"  replay collapses to the hub: {replay_collapse(W, sched)}")
