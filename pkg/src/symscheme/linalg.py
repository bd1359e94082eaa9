"""Vectorized arithmetic over F_q and exact linear algebra over F_p."""
from __future__ import annotations

import itertools
import os
from functools import lru_cache

import numpy as np

from .errors import BudgetExceeded
from .gf import FiniteField

DEFAULT_BUDGET = 10**8


def budget() -> int:
    """Enumeration budget; ``SYMSCHEME_BUDGET`` overrides the default."""
    return int(os.environ.get("SYMSCHEME_BUDGET", DEFAULT_BUDGET))


def check_budget(n: int, what: str = "enumeration", limit: int | None = None) -> None:
    limit = budget() if limit is None else limit
    if n > limit:
        raise BudgetExceeded(f"{what} of size {n} exceeds budget {limit}")


class FqArith:
    """Elementwise F_q arithmetic on integer code arrays.

    Prime fields use plain modular arithmetic, extension fields use
    ``q x q`` lookup tables.
    """

    def __init__(self, field: FiniteField):
        self.field = field
        self.q = q = field.order
        self.p = field.p
        self.prime = field.base is None
        codes = np.arange(q)
        if not self.prime:
            a, b = np.meshgrid(codes, codes, indexing="ij")
            self.add_tab = field.add_arrays(a, b).astype(np.int64)
            self.mul_tab = field.mul_arrays(a, b).astype(np.int64)
            self.neg_tab = np.array([field.neg(int(x)) for x in codes], dtype=np.int64)
        self.inv_tab = np.array([0] + [field.inv(int(x)) for x in codes[1:]], dtype=np.int64)
        self.eta_tab = np.array([field.eta(int(x)) for x in codes], dtype=np.int64)
        self.trace_tab = np.array([field.absolute_trace(int(x)) for x in codes], dtype=np.int64)

    def add(self, a, b):
        if self.prime:
            return (a + b) % self.q
        return self.add_tab[a, b]

    def neg(self, a):
        if self.prime:
            return (-a) % self.q
        return self.neg_tab[a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.prime:
            return (a * b) % self.q
        return self.mul_tab[a, b]

    def inv(self, a):
        return self.inv_tab[a]

    def scale(self, c: int, a):
        return self.mul(np.int64(c), a)

    def sum(self, a, axis):
        """Sum along ``axis``."""
        if self.prime:
            return a.sum(axis=axis) % self.q
        a = np.moveaxis(a, axis, 0)
        acc = a[0]
        for x in a[1:]:
            acc = self.add_tab[acc, x]
        return acc

    def matmul(self, A, B):
        """Batched matrix product over F_q (broadcasts leading axes)."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.prime:
            return (A @ B) % self.q
        prod = self.mul_tab[A[..., :, :, None], B[..., None, :, :]]
        return self.sum(prod, axis=-2)


@lru_cache(maxsize=None)
def arith(field: FiniteField) -> FqArith:
    return FqArith(field)


# ---------------------------------------------------------------------------
# F_p linear algebra on integer arrays


def fp_rref(M, p: int):
    """Reduced row echelon form over F_p; returns ``(R, pivot_columns)``."""
    R = np.array(M, dtype=np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, p)) % p
        others = np.nonzero(R[:, c])[0]
        others = others[others != r]
        if others.size:
            R[others] = (R[others] - np.outer(R[others, c], R[r])) % p
        pivots.append(c)
        r += 1
    return R[:r], pivots


def fp_rank(M, p: int) -> int:
    return len(fp_rref(M, p)[1])


def fp_nullspace(M, p: int) -> np.ndarray:
    """Basis (as rows) of ``{x : M x = 0}`` over F_p."""
    M = np.asarray(M, dtype=np.int64)
    cols = M.shape[1]
    R, pivots = fp_rref(M, p) if M.shape[0] else (np.zeros((0, cols), dtype=np.int64), [])
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for row, pc in enumerate(pivots):
            basis[k, pc] = (-R[row, f]) % p
    return basis


def fp_basis(rows, p: int) -> np.ndarray:
    """Independent rows spanning the same F_p-space."""
    rows = np.asarray(rows, dtype=np.int64)
    if rows.shape[0] == 0:
        return rows
    return fp_rref(rows, p)[0]


def coefficient_grid(k: int, p: int) -> np.ndarray:
    """All ``p**k`` coefficient vectors in lexicographic order."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grid = np.indices((p,) * k, dtype=np.int64).reshape(k, -1).T
    return grid


def fp_span(gens, p: int, limit: int | None = None) -> np.ndarray:
    """All F_p-combinations of the rows of ``gens`` (assumed independent)."""
    gens = np.asarray(gens, dtype=np.int64)
    k = gens.shape[0]
    check_budget(p**k, "span enumeration", limit)
    coeffs = coefficient_grid(k, p)
    if k == 0:
        return np.zeros((1, gens.shape[1]), dtype=np.int64)
    return (coeffs @ gens) % p


def fq_rank(field: FiniteField, M) -> int:
    """Rank of a matrix over F_q by plain row reduction (scalar code)."""
    A = [list(map(int, row)) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = field.inv(A[r][c])
        A[r] = [field.mul(inv, x) for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(A[i], A[r])]
        r += 1
    return r


def fq_row_space_rrefs(field: FiniteField, t: int, m: int):
    """All ``t x m`` reduced echelon matrices over F_q, one per t-dim subspace."""
    q = field.order
    for pivots in itertools.combinations(range(m), t):
        free = [(r, c) for r in range(t) for c in range(pivots[r] + 1, m) if c not in pivots]
        for vals in itertools.product(range(q), repeat=len(free)):
            G = np.zeros((t, m), dtype=np.int64)
            for r, c in enumerate(pivots):
                G[r, c] = 1
            for (r, c), v in zip(free, vals):
                G[r, c] = v
            yield G
