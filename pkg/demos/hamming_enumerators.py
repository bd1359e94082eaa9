"""Weight enumerators of the Hamming-metric codes built from Y_1(0,3,3):
formula from the inner distribution against brute-force enumeration."""
from symscheme import brute_force_enumerator, code_C1, code_C2, enumerator_C1_formula, enumerator_C2_formula
from symscheme.acceptance import constructed

Y, a = constructed(1, 0, 3, 3)
for name, build, formula in (("C1", code_C1, enumerator_C1_formula), ("C2", code_C2, enumerator_C2_formula)):
    f = formula(a)
    b = brute_force_enumerator(build(Y))
    print(name, "formula:", {w: str(c) for w, c in sorted(f.coeffs.items())})
    print(name, "agrees with brute force:", f == b)
