"""Trace constructions of maximal additive d-codes, puncturing and duals."""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .dist import (
    Distribution,
    bound_additive,
    dual_distribution,
    inner_distribution,
    minimum_rank,
)
from .errors import NotABasis, NotAHyperplaneBasis, PreconditionViolated, InvalidParams
from .formset import FormSet, from_prime_coords, to_prime_coords
from .gf import FieldSpec, FiniteField, default_tower
from .linalg import arith, fp_nullspace, fq_rank
from .symform import SymForm, gram_matrix, n_entries, to_matrices, to_packed, trace_products


@dataclass(frozen=True)
class ConstructionParams:
    s: int
    t: int
    m: int
    q: int

    def __post_init__(self):
        if self.m < 1 or self.s < 1 or math.gcd(self.s, self.m) != 1:
            raise InvalidParams(f"s={self.s} must be a positive integer coprime to m={self.m}")
        if not 0 <= self.t or 2 * self.t + 1 > self.m:
            raise InvalidParams(f"need 0 <= t <= (m-1)/2, got t={self.t}, m={self.m}")

    @property
    def d(self) -> int:
        return self.m - 2 * self.t

    @property
    def size(self) -> int:
        return self.q ** (self.m * (self.t + 1))

    @classmethod
    def parse(cls, text: str) -> "ConstructionParams":
        s, t, m, q = (int(x) for x in text.split(","))
        return cls(s, t, m, q)


def bilinear_form(params: ConstructionParams, lam, tower: FiniteField):
    """``(x, y) -> Tr(lam_0 x y + sum_j lam_j (x^{q^{sj}} y + x y^{q^{sj}}))``."""
    F = tower
    s = params.s

    def B(x: int, y: int) -> int:
        acc = F.mul(lam[0], F.mul(x, y))
        for j in range(1, params.t + 1):
            k = s * j
            inner = F.add(F.mul(F.frobenius(x, k), y), F.mul(x, F.frobenius(y, k)))
            acc = F.add(acc, F.mul(lam[j], inner))
        return F.trace(acc)

    return B


def linearized_map(params: ConstructionParams, lam, tower: FiniteField):
    """``L_lam`` with ``B_lam(x, y) = Tr(y L_lam(x))``."""
    F = tower
    m, s = params.m, params.s

    def L(x: int) -> int:
        acc = F.mul(lam[0], x)
        for j in range(1, params.t + 1):
            k = s * j
            acc = F.add(acc, F.mul(lam[j], F.frobenius(x, k)))
            acc = F.add(acc, F.frobenius(F.mul(lam[j], x), (m - k) % m))
        return acc

    return L


def polynomial_basis(tower: FiniteField) -> list[int]:
    """``1, theta, ..., theta^{m-1}`` for the tower generator ``theta``."""
    b = tower.base.order
    return [b**k for k in range(tower.degree)]


def form_of(params: ConstructionParams, lam, tower: FiniteField, basis=None) -> SymForm:
    return gram_matrix(bilinear_form(params, lam, tower), basis or polynomial_basis(tower), tower)


@dataclass
class Construction:
    params: ConstructionParams
    spec: FieldSpec
    forms: FormSet
    lambdas: list = dc_field(repr=False, default_factory=list)


def construct_Y(params: ConstructionParams, spec: FieldSpec | None = None, basis=None) -> FormSet:
    """The additive set ``Y_s(t, m, q)`` given by the images of an F_p-basis of
    ``V^{t+1}`` (unit coordinate vectors of each ``lambda_j``)."""
    spec = spec or default_tower(params.q, params.m)
    T = spec.tower
    if T.base.order != params.q or T.degree != params.m:
        raise InvalidParams("tower does not match (q, m)")
    units = [T.p**k for k in range(T.absolute_degree)]
    gens = []
    for j in range(params.t + 1):
        for u in units:
            lam = [0] * (params.t + 1)
            lam[j] = u
            gens.append(form_of(params, lam, T, basis).entries)
    Y = FormSet.additive(params.m, spec.field, gens)
    Y.spec = spec
    if len(Y) != params.size:
        raise AssertionError("lambda -> B_lambda is not injective")  # pragma: no cover
    return Y


@dataclass
class CodeReport:
    passed: bool
    size: int
    expected_size: int
    min_rank: int | None
    expected_d: int
    meets_additive_bound: bool
    kernel_dims: list
    kernel_ok: bool
    notes: list = dc_field(default_factory=list)


def verify_code_parameters(
    Y: FormSet,
    params: ConstructionParams,
    samples: int = 20,
    seed: int = 0,
    spec: FieldSpec | None = None,
    limit: int | None = None,
) -> CodeReport:
    """Check size, minimum rank and (for sampled lambda) ``dim ker L_lam <= 2t``."""
    notes = []
    a = inner_distribution(Y, limit)
    mr = minimum_rank(a)
    d = params.d
    size_ok = len(Y) == params.size
    rank_ok = mr is None or mr >= d
    if not size_ok:
        notes.append(f"size {len(Y)} != {params.size}")
    if not rank_ok:
        notes.append(f"minimum rank {mr} < {d}")
    spec = spec or default_tower(params.q, params.m)
    T = spec.tower
    rng = np.random.default_rng(seed)
    dims = []
    kernel_ok = True
    for _ in range(samples):
        lam = [int(x) for x in rng.integers(0, T.order, size=params.t + 1)]
        if not any(lam):
            continue
        L = linearized_map(params, lam, T)
        zeros = sum(1 for x in range(T.order) if L(x) == 0)
        k = round(math.log(zeros, params.q))
        dims.append(k)
        rank = form_of(params, lam, T).rank_type().rank
        if params.q**k != zeros or k > 2 * params.t or rank != params.m - k:
            kernel_ok = False
            notes.append(f"lambda={lam}: {zeros} zeros, rank {rank}")
    meets = len(Y) == bound_additive(params.m, params.q, d)
    return CodeReport(
        passed=size_ok and rank_ok and kernel_ok,
        size=len(Y),
        expected_size=params.size,
        min_rank=mr,
        expected_d=d,
        meets_additive_bound=meets,
        kernel_dims=dims,
        kernel_ok=kernel_ok,
        notes=notes,
    )


def check_code(Y: FormSet, d: int, limit: int | None = None) -> bool:
    """Whether every nonzero difference in ``Y`` has rank at least ``d``."""
    mr = minimum_rank(inner_distribution(Y, limit))
    return mr is None or mr >= d


# ---------------------------------------------------------------------------
# puncturing and duality


def default_hyperplane(m_plus_1: int) -> np.ndarray:
    """Span of the first ``m`` basis vectors of ``F_q^{m+1}``."""
    return np.eye(m_plus_1, dtype=np.int64)[:-1]


def restrict(field: FiniteField, packed, W) -> np.ndarray:
    """Gram matrices ``W B W^T`` of the forms restricted to the row space of ``W``."""
    ar = arith(field)
    W = np.asarray(W, dtype=np.int64)
    M = to_matrices(np.asarray(packed, dtype=np.int64), W.shape[1])
    R = ar.matmul(ar.matmul(W[None, :, :], M), W.T[None, :, :])
    return to_packed(R)


def puncture(Y: FormSet, hyperplane=None) -> FormSet:
    """Restrict every form of ``Y`` to an ``m``-dimensional subspace given by
    the rows of ``hyperplane`` (an ``m x (m+1)`` matrix)."""
    m1, F = Y.m, Y.field
    W = default_hyperplane(m1) if hyperplane is None else np.asarray(hyperplane, dtype=np.int64) % F.order
    if W.shape != (m1 - 1, m1) or fq_rank(F, W) != m1 - 1:
        raise NotAHyperplaneBasis(f"need {m1 - 1} independent vectors of length {m1}")
    if Y.is_additive:
        out = FormSet.additive(m1 - 1, F, restrict(F, Y.generators, W))
    else:
        rows = {tuple(r) for r in restrict(F, Y.elements(), W).tolist()}
        out = FormSet.explicit(m1 - 1, F, sorted(rows))
    out.spec = Y.spec
    return out


def additive_dual(Y: FormSet) -> FormSet:
    """``{B : chi(tr(AB)) = 1 for all A in Y}`` as an F_p null space."""
    Y.require_additive()
    m, F = Y.m, Y.field
    D, e = n_entries(m), F.absolute_degree
    units = from_prime_coords(F, np.eye(D * e, dtype=np.int64), m)
    ar = arith(F)
    M = np.zeros((len(Y.generators), D * e), dtype=np.int64)
    for col, E in enumerate(units):
        M[:, col] = ar.trace_tab[trace_products(F, Y.generators, E, m)]
    null = fp_nullspace(M, F.p)
    out = FormSet.additive(m, F, from_prime_coords(F, null, m))
    out.spec = Y.spec
    return out


def punctured_design_inheritance_check(Y: FormSet, Y_star: FormSet, limit: int | None = None) -> bool:
    """``a'_{k,eps} = 0 => b'_{k,eps} = 0`` for a d-code ``Y`` (d >= 3) and a
    punctured set ``Y*``."""
    a = inner_distribution(Y, limit)
    mr = minimum_rank(a)
    if mr is not None and mr < 3:
        raise PreconditionViolated(f"Y has minimum rank {mr}; the implication needs d >= 3")
    if Y_star.m != Y.m - 1:
        raise ValueError("Y* must live one dimension lower")
    ad = dual_distribution(a)
    bd = dual_distribution(inner_distribution(Y_star, limit))
    return all(bd[c] == 0 for c in bd.labels if c[0] <= Y_star.m and ad[c] == 0)
