"""Symmetric bilinear forms as symmetric matrices over F_q.

A form on ``F_q^m`` is stored by its packed upper triangle, row-major:
``(a_00, a_01, ..., a_0m, a_11, ..., a_mm)``.  Bulk routines work on integer
arrays of shape ``(N, m(m+1)/2)`` holding element codes.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, NamedTuple

import numpy as np

from .errors import DimensionMismatch, NotABasis
from .gf import FieldElement, FiniteField, as_field
from .linalg import arith, check_budget, fq_rank


class RankType(NamedTuple):
    rank: int
    type: int


def n_entries(m: int) -> int:
    return m * (m + 1) // 2


@lru_cache(maxsize=None)
def packed_index(m: int) -> tuple[np.ndarray, np.ndarray]:
    I, J = np.triu_indices(m)
    return I, J


@lru_cache(maxsize=None)
def trace_weights(m: int) -> np.ndarray:
    """Multiplicity of each packed entry in ``tr(AB)``: 1 on, 2 off the diagonal."""
    I, J = packed_index(m)
    return np.where(I == J, 1, 2).astype(np.int64)


def to_matrices(packed, m: int) -> np.ndarray:
    packed = np.asarray(packed, dtype=np.int64)
    lead = packed.shape[:-1]
    out = np.zeros(lead + (m, m), dtype=np.int64)
    I, J = packed_index(m)
    out[..., I, J] = packed
    out[..., J, I] = packed
    return out


def to_packed(mats) -> np.ndarray:
    mats = np.asarray(mats, dtype=np.int64)
    I, J = packed_index(mats.shape[-1])
    return mats[..., I, J]


@dataclass(frozen=True)
class SymForm:
    field: FiniteField
    m: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != n_entries(self.m):
            raise DimensionMismatch(f"expected {n_entries(self.m)} packed entries")

    @classmethod
    def from_matrix(cls, field, M) -> "SymForm":
        M = np.asarray(M, dtype=np.int64)
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise DimensionMismatch("matrix must be square")
        F = as_field(field)
        M = M % F.order if F.base is None else M
        if not np.array_equal(M, M.T):
            raise ValueError("matrix is not symmetric")
        return cls(F, M.shape[0], tuple(int(x) for x in to_packed(M)))

    @classmethod
    def zero(cls, field, m: int) -> "SymForm":
        return cls(as_field(field), m, (0,) * n_entries(m))

    def matrix(self) -> np.ndarray:
        return to_matrices(np.array(self.entries), self.m)

    def __getitem__(self, ij):
        i, j = sorted(ij)
        return self.entries[i * self.m - i * (i - 1) // 2 + (j - i)]

    def _check(self, other):
        if self.m != other.m or self.field is not other.field:
            raise DimensionMismatch("forms live in different spaces")

    def __add__(self, other: "SymForm") -> "SymForm":
        self._check(other)
        F = self.field
        return SymForm(F, self.m, tuple(F.add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "SymForm") -> "SymForm":
        self._check(other)
        F = self.field
        return SymForm(F, self.m, tuple(F.sub(a, b) for a, b in zip(self.entries, other.entries)))

    def congruent(self, L) -> "SymForm":
        """The form ``L^T A L``."""
        ar = arith(self.field)
        L = np.asarray(L, dtype=np.int64)
        M = ar.matmul(ar.matmul(L.T, self.matrix()), L)
        return SymForm(self.field, L.shape[1], tuple(int(x) for x in to_packed(M)))

    def rank_type(self) -> RankType:
        return rank_type(self)

    def __repr__(self):
        return f"SymForm(m={self.m}, q={self.field.order}, {list(self.entries)})"


# ---------------------------------------------------------------------------
# classification


def rank_type(A: SymForm) -> RankType:
    """Rank and type of ``A`` via symmetric congruence diagonalization."""
    F = A.field
    m = A.m
    M = [[int(x) for x in row] for row in A.matrix()]
    active = list(range(m))
    pivots = []
    while active:
        piv = next((i for i in active if M[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i < j and M[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # add row/col j to row/col i: new diagonal entry 2 a_ij != 0
            M[i] = [F.add(x, y) for x, y in zip(M[i], M[j])]
            for r in range(m):
                M[r][i] = F.add(M[r][i], M[r][j])
            piv = i
        d = M[piv][piv]
        pivots.append(d)
        col = [M[r][piv] for r in range(m)]
        dinv = F.inv(d)
        for a in active:
            if col[a] == 0:
                continue
            fa = F.mul(col[a], dinv)
            for b in active:
                if col[b]:
                    M[a][b] = F.sub(M[a][b], F.mul(fa, col[b]))
        active.remove(piv)
    prod = 1
    for d in pivots:
        prod = F.mul(prod, d)
    return RankType(len(pivots), F.eta(prod))


def classify(field: FiniteField, packed, m: int, chunk: int = 1 << 16) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized rank/type of many forms; returns ``(ranks, types)``."""
    packed = np.asarray(packed, dtype=np.int64)
    N = packed.shape[0]
    ranks = np.empty(N, dtype=np.int64)
    types = np.empty(N, dtype=np.int64)
    for lo in range(0, N, chunk):
        r, t = _classify_block(field, to_matrices(packed[lo : lo + chunk], m))
        ranks[lo : lo + chunk] = r
        types[lo : lo + chunk] = t
    return ranks, types


def _classify_block(field, A):
    ar = arith(field)
    N, m, _ = A.shape
    A = A.copy()
    rank = np.zeros(N, dtype=np.int64)
    prod = np.ones(N, dtype=np.int64)
    rows = np.arange(N)
    diag_idx = np.arange(m)
    for _ in range(m):
        nonzero = A != 0
        active = nonzero.reshape(N, -1).any(axis=1)
        if not active.any():
            break
        diag = A[:, diag_idx, diag_idx]
        need_fix = active & ~(diag != 0).any(axis=1)
        if need_fix.any():
            sel = np.nonzero(need_fix)[0]
            flat = np.argmax(nonzero[sel].reshape(sel.size, -1), axis=1)
            i, j = np.divmod(flat, m)
            A[sel, i, :] = ar.add(A[sel, i, :], A[sel, j, :])
            A[sel, :, i] = ar.add(A[sel, :, i], A[sel, :, j])
            diag = A[:, diag_idx, diag_idx]
        sel = np.nonzero(active)[0]
        piv = np.argmax(diag[sel] != 0, axis=1)
        d = A[sel, piv, piv]
        col = A[sel, :, piv]
        f = ar.mul(col, ar.inv(d)[:, None])
        A[sel] = ar.sub(A[sel], ar.mul(f[:, :, None], col[:, None, :]))
        prod[sel] = ar.mul(prod[sel], d)
        rank[sel] += 1
    types = ar.eta_tab[prod]
    return rank, types


# ---------------------------------------------------------------------------
# pairing


def pairing(A: SymForm, B: SymForm) -> FieldElement:
    """``tr(AB)`` as an element of F_q."""
    if A.m != B.m or A.field is not B.field:
        raise DimensionMismatch("forms live in different spaces")
    F = A.field
    acc = 0
    for a, b, w in zip(A.entries, B.entries, trace_weights(A.m)):
        acc = F.add(acc, F.mul(F.mul(a, b), int(w) % F.p))
    return FieldElement(F, acc)


def pairing_char(A: SymForm, B: SymForm) -> complex:
    return A.field.character(pairing(A, B).code)


def trace_products(field: FiniteField, packed_A, packed_B, m: int) -> np.ndarray:
    """``tr(A B)`` for every row ``A`` of ``packed_A`` and a single ``B``."""
    ar = arith(field)
    w = ar.mul(np.asarray(packed_B, dtype=np.int64), trace_weights(m) % field.p)
    prod = ar.mul(np.asarray(packed_A, dtype=np.int64), w[None, :])
    return ar.sum(prod, axis=1)


# ---------------------------------------------------------------------------
# enumeration


def all_forms(m: int, q, limit: int | None = None) -> np.ndarray:
    """Every symmetric ``m x m`` matrix, packed, in lexicographic order."""
    F = as_field(q)
    D = n_entries(m)
    check_budget(F.order**D, "form enumeration", limit)
    if D == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.indices((F.order,) * D, dtype=np.int64).reshape(D, -1).T


def enumerate_forms(m: int, q, filter: RankType | tuple | None = None, limit: int | None = None) -> Iterator[SymForm]:
    """Yield every symmetric form once, optionally only one rank/type class."""
    F = as_field(q)
    D = n_entries(m)
    check_budget(F.order**D, "form enumeration", limit)
    for entries in itertools.product(range(F.order), repeat=D):
        A = SymForm(F, m, entries)
        if filter is None or rank_type(A) == tuple(filter):
            yield A


def representative(m: int, q, i: int, tau: int) -> SymForm:
    """``diag(z, 1, ..., 1, 0, ..., 0)`` of rank ``i`` with ``eta(z) = tau``."""
    F = as_field(q)
    if i == 0:
        return SymForm.zero(F, m)
    z = 1 if tau == 1 else F.smallest_nonsquare
    M = np.zeros((m, m), dtype=np.int64)
    M[0, 0] = z
    for k in range(1, i):
        M[k, k] = 1
    return SymForm.from_matrix(F, M)


def random_invertible(field: FiniteField, m: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        L = rng.integers(0, field.order, size=(m, m))
        if fq_rank(field, L) == m:
            return L


def gram_matrix(B: Callable, basis, field: FiniteField) -> SymForm:
    """Gram matrix ``(B(a_i, a_j))`` of a symmetric F_q-valued bilinear map.

    ``basis`` lists codes of elements of ``field`` (a tower over F_q); ``B``
    takes two codes and returns an F_q code or FieldElement.
    """
    Fq = field.base
    basis = [b.code if isinstance(b, FieldElement) else int(b) for b in basis]
    m = field.degree
    if len(basis) != m or fq_rank(Fq, [field.coords(b) for b in basis]) != m:
        raise NotABasis("elements do not form a basis over the base field")
    M = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        for j in range(i, m):
            v = B(basis[i], basis[j])
            v = v.code if isinstance(v, FieldElement) else int(v)
            M[i, j] = M[j, i] = v
    return SymForm.from_matrix(Fq, M)
