"""Right-angled Coxeter systems from nerve graphs.

The pentagon nerve generates the right-angled reflection group of the
hyperbolic plane: its Davis complex is a square tiling whose thickened
interior satisfies the wheel conditions, and the nerve criterion decides
hyperbolicity of the group.
"""

from weaksys import (
    CoxeterNerve,
    check_sd2_star,
    davis_complex,
    moussong_check,
    normal_form,
    thicken,
)
from weaksys.thickening import coxeter_ball, matrix_key, word_matrix
from weaksys.corpus import cycle_complex

nerve = CoxeterNerve.from_graph(cycle_complex(5).skeleton)

print("== words in the pentagon group ==")
print("adjacent generators commute; canonical forms are the")
print("lexicographically least reduced words:")
for word in [(0, 0), (0, 1, 0), (2, 0, 1), (0, 2, 0, 2)]:
    nf = normal_form(nerve, word)
    print(f"  {word} -> {nf}")

sizes = [len(coxeter_ball(nerve, R)) for R in range(5)]
print(f"ball sizes by radius: {sizes}")

print()
print("== exact linear-algebra oracle ==")
w1 = normal_form(nerve, (2, 0, 1))
w2 = normal_form(nerve, (1, 2, 0))
same = matrix_key(word_matrix(nerve, w1)) == matrix_key(word_matrix(nerve, w2))
print(f"(2,0,1) and (1,2,0) are the same group element: {same}")

print()
print("== the Davis complex ==")
ball = davis_complex(nerve, 3)
print(f"radius-3 ball: {ball.complex.n} vertices, "
      f"{len(ball.complex.maximal_cells)} maximal cells")
interior = ball.interior()
print(f"interior (radius 2): {interior.n} vertices, "
      f"{sum(1 for c in interior.maximal_cells if len(c) == 4)} squares")
X, flag_verdict = thicken(interior)
print(f"thickened interior: flag {flag_verdict.holds}, wheel condition "
      f"{check_sd2_star(X).holds}")

print()
print("== nerve criterion for hyperbolicity ==")
for k in (4, 5, 6):
    v = moussong_check(CoxeterNerve.from_graph(cycle_complex(k).skeleton))
    print(f"  {k}-cycle nerve: hyperbolic group = {v.holds}")
