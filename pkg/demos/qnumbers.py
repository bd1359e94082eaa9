"""Q-numbers of X(2,3) by three independent routes, plus the orthogonality check."""
import numpy as np

from symscheme import q_numbers_charsum_oracle, q_numbers_explicit, q_numbers_recurrence
from symscheme.scheme import pq_orthogonality_check

m, q = 2, 3
E = q_numbers_explicit(m, q)
R = q_numbers_recurrence(m, q)
O = q_numbers_charsum_oracle(m, q, n_reps=2)

print(f"classes of X({m},{q}): {E.labels}")
for row in E.labels:
    print(row, [str(E[row, col]) for col in E.labels])
print("explicit == recurrence:", E == R)
print("max deviation from character sums: %.2e" % np.abs(E.numeric() - O).max())
print("Q.P = |X| I:", pq_orthogonality_check(E))
