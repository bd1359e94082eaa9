"""Inner distribution of the 8-dimensional 2-code Y_1(1,4,3), its closed form,
its dual, and (with --exhaustive) the search over all such subspaces of X(4,3)."""
import sys
import time

from symscheme import closed_form_even, dual_distribution
from symscheme.acceptance import constructed, exhaustive_subspaces

Y, a = constructed(1, 1, 4, 3)
print("|Y| =", len(Y))
print("enumerated :", [int(x) for x in a.vector()])
print("closed form:", [str(x) for x in closed_form_even(4, 3, 1, len(Y)).vector()])
print("dual       :", [str(x) for x in dual_distribution(a).vector()])

if "--exhaustive" in sys.argv:
    t0 = time.perf_counter()
    res = exhaustive_subspaces()
    print(f"\n{res['spanning_pairs']} spanning pairs give a 2-code ({time.perf_counter() - t0:.1f}s)")
    for row in res["distributions"]:
        print(" ", row)
