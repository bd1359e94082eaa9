"""Exact Delsarte LP bound next to the closed-form bounds, with a checked certificate."""
from symscheme import bound_additive, bound_even_nonadditive, lp_bound, lp_certificate_check

for m, q, d in ((2, 3, 2), (3, 3, 2), (4, 3, 2), (3, 5, 3)):
    sol = lp_bound(m, q, d)
    line = f"X({m},{q}) d={d}: LP {sol.value}, additive bound {bound_additive(m, q, d)}"
    if d % 2 == 0:
        line += f", even-d bound {bound_even_nonadditive(m, q, d // 2)}"
    print(line, "| certificate ok:", lp_certificate_check(sol.instance, sol))
