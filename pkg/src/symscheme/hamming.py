"""Hamming-metric codes of length ``q^m - 1`` built from quadratic forms.

``C1(Y)`` holds the value vectors ``(Q(1), Q(theta), ..., Q(theta^{q^m-2}))``
of the quadratic forms ``Q(x) = B(x, x)``, ``B`` in ``Y``; ``C2(Y)`` adds all
linear functions.  ``V`` is identified with ``F_{q^m}`` through the
polynomial basis of the default tower and ``theta`` is its smallest
primitive element.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .construct import ConstructionParams
from .dist import Distribution
from .errors import InvalidParams, NoPrimitiveElement
from .formset import FormSet
from .gf import FieldSpec, FiniteField, as_field, default_tower
from .linalg import arith, check_budget, coefficient_grid
from .scheme import classes, eta_minus_one
from .symform import SymForm, packed_index, trace_weights


# ---------------------------------------------------------------------------
# enumerators


class Enumerator:
    """Sparse polynomial ``sum_w c_w z^w`` with exact coefficients."""

    def __init__(self, coeffs=None):
        self.coeffs = {}
        for w, c in (coeffs or {}).items():
            self._add(int(w), c)

    def _add(self, w, c):
        c = Fraction(c)
        v = self.coeffs.get(w, Fraction(0)) + c
        if v:
            self.coeffs[w] = v
        else:
            self.coeffs.pop(w, None)

    def __add__(self, other: "Enumerator") -> "Enumerator":
        out = Enumerator(self.coeffs)
        for w, c in other.coeffs.items():
            out._add(w, c)
        return out

    def scaled(self, factor) -> "Enumerator":
        return Enumerator({w: c * factor for w, c in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, Enumerator) and self.coeffs == other.coeffs

    def __getitem__(self, w) -> Fraction:
        return self.coeffs.get(w, Fraction(0))

    def total(self) -> Fraction:
        return sum(self.coeffs.values(), Fraction(0))

    def weights(self) -> list[int]:
        return sorted(self.coeffs)

    def min_nonzero_weight(self) -> int | None:
        return min((w for w in self.coeffs if w > 0), default=None)

    def evaluate(self, z):
        return sum(c * z**w for w, c in self.coeffs.items())

    def to_json(self) -> list:
        return [[w, str(self.coeffs[w])] for w in self.weights()]

    @classmethod
    def from_json(cls, obj) -> "Enumerator":
        return cls({int(w): Fraction(c) for w, c in obj})

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def __repr__(self):
        return " + ".join(f"{c}*z^{w}" for w, c in sorted(self.coeffs.items())) or "0"


# ---------------------------------------------------------------------------
# solution counts and weights


def _v(h: int, q: int) -> int:
    return q - 1 if h == 0 else -1


def n_of_h(m: int, q: int, i: int, tau: int, h: int, field: FiniteField | None = None) -> int:
    """Number of ``x`` in ``F_q^m`` with ``Q(x) = h`` for ``Q`` of rank ``i``, type ``tau``.

    ``h`` is an element code of F_q.
    """
    if not 0 <= i <= m:
        raise ValueError("rank out of range")
    F = field or as_field(q)
    e = eta_minus_one(q)
    Q = Fraction(q)
    if i % 2:
        val = Q ** (m - 1) + tau * e ** ((i - 1) // 2) * F.eta(h) * Q ** (m - (i + 1) // 2)
    else:
        val = Q ** (m - 1) + tau * e ** (i // 2) * _v(h, q) * Q ** (m - i // 2 - 1)
    assert val.denominator == 1
    return int(val)


def count_solutions(B: SymForm, h: int) -> int:
    """Direct count of ``x`` with ``x^T B x = h`` (exhaustive over ``F_q^m``)."""
    return int((quadratic_values(B.field, np.array([B.entries]), all_vectors(B.field, B.m))[0] == h).sum())


def weight_of_class(m: int, q: int, i: int, tau: int) -> int:
    """Hamming weight of the value vector of a rank ``i``, type ``tau`` form."""
    e = eta_minus_one(q)
    if i % 2:
        return q ** (m - 1) * (q - 1)
    w = (Fraction(q) ** (m - 1) - tau * e ** (i // 2) * Fraction(q) ** (m - i // 2 - 1)) * (q - 1)
    return int(w)


def enumerator_C1_formula(a: Distribution) -> Enumerator:
    out = Enumerator()
    for (i, t) in classes(a.m):
        if a[i, t]:
            out._add(weight_of_class(a.m, a.q, i, t), a[i, t])
    return out


@dataclass(frozen=True)
class CosetTrinomial:
    i: int
    tau: int
    terms: tuple  # ((u, n_u), (v, n_v), (w, n_w))

    def enumerator(self) -> Enumerator:
        return Enumerator({w: c for w, c in self.terms if c})


def coset_trinomial(m: int, q: int, i: int, tau: int) -> CosetTrinomial:
    """Weight enumerator of ``Q + L`` for ``Q`` of rank ``i`` and type ``tau``."""
    Q = Fraction(q)
    base = q ** (m - 1) * (q - 1)
    if i % 2:
        shift = Q ** (m - (i + 1) // 2)
        half = Q ** ((i - 1) // 2)
        terms = (
            (base - shift, (Q ** (i - 1) + half) * (q - 1) / 2),
            (base, Q**m - Q ** (i - 1) * (q - 1)),
            (base + shift, (Q ** (i - 1) - half) * (q - 1) / 2),
        )
    else:
        sg = tau * eta_minus_one(q) ** (i // 2)
        shift = Q ** (m - i // 2 - 1)
        half = Q ** (i // 2 - 1)
        terms = (
            ((Q ** (m - 1) - sg * shift) * (q - 1), Q ** (i - 1) + sg * half * (q - 1)),
            (base, Q**m - Q**i),
            (base + sg * shift, (Q ** (i - 1) - sg * half) * (q - 1)),
        )
    out = []
    for w, c in terms:
        if Fraction(w).denominator != 1 or Fraction(c).denominator != 1 or c < 0:
            raise AssertionError(f"non-integral coset enumerator term {(w, c)}")  # pragma: no cover
        out.append((int(w), int(c)))
    return CosetTrinomial(i, tau, tuple(out))


def enumerator_C2_formula(a: Distribution) -> Enumerator:
    out = Enumerator()
    for (i, t) in classes(a.m):
        if a[i, t]:
            out = out + coset_trinomial(a.m, a.q, i, t).enumerator().scaled(a[i, t])
    return out


# ---------------------------------------------------------------------------
# explicit codes


def all_vectors(field: FiniteField, m: int) -> np.ndarray:
    return coefficient_grid(m, field.order)


def primitive_powers(spec: FieldSpec) -> np.ndarray:
    """Coordinates over F_q of ``theta^k``, ``k = 0..q^m-2``, one row each."""
    T = spec.tower
    if T.order - 1 <= 0:
        raise NoPrimitiveElement("trivial field")  # pragma: no cover
    return np.array([T.coords(T.exp(k)) for k in range(T.order - 1)], dtype=np.int64)


def quadratic_values(field: FiniteField, packed, points) -> np.ndarray:
    """``x^T B x`` for every form (rows of ``packed``) and point (rows of ``points``)."""
    ar = arith(field)
    packed = np.asarray(packed, dtype=np.int64)
    points = np.asarray(points, dtype=np.int64)
    m = points.shape[1]
    I, J = packed_index(m)
    mono = ar.mul(points[:, I], points[:, J])  # (P, D)
    mono = ar.mul(mono, (trace_weights(m) % field.p)[None, :])
    coef = packed[:, None, :]  # (N, 1, D)
    return ar.sum(ar.mul(coef, mono[None, :, :]), axis=2)


def quad_values(B: SymForm, spec: FieldSpec | None = None) -> np.ndarray:
    """C1 codeword of ``B``: ``Q(theta^k)`` for ``k = 0..q^m-2``."""
    spec = spec or default_tower(B.field.order, B.m)
    return quadratic_values(B.field, np.array([B.entries]), primitive_powers(spec))[0]


def linear_code(spec: FieldSpec) -> np.ndarray:
    """All ``q^m`` linear functions as value vectors on ``theta^k``."""
    T = spec.tower
    Fq = T.base
    ar = arith(Fq)
    P = primitive_powers(spec)
    B = all_vectors(Fq, T.degree)
    return ar.sum(ar.mul(B[:, None, :], P[None, :, :]), axis=2)


def _tower_spec(Y: FormSet, spec: FieldSpec | None) -> FieldSpec:
    if spec is not None:
        return spec
    if Y.spec is not None and Y.spec.tower_m == Y.m:
        return Y.spec
    return default_tower(Y.q, Y.m)


def code_C1(Y: FormSet, spec: FieldSpec | None = None, limit: int | None = None) -> np.ndarray:
    spec = _tower_spec(Y, spec)
    return quadratic_values(Y.field, Y.elements(limit), primitive_powers(spec))


def code_C2(Y: FormSet, spec: FieldSpec | None = None, limit: int | None = None) -> np.ndarray:
    spec = _tower_spec(Y, spec)
    C1 = code_C1(Y, spec, limit)
    L = linear_code(spec)
    check_budget(len(C1) * len(L), "C2 materialization", limit)
    ar = arith(Y.field)
    return ar.add(C1[:, None, :], L[None, :, :]).reshape(-1, C1.shape[1])


def brute_force_enumerator(C, mode: str = "weight", limit: int | None = None) -> Enumerator:
    """Histogram of weights, or of pairwise distances divided by ``|C|``."""
    C = np.asarray(C, dtype=np.int64)
    N = C.shape[0]
    if mode == "weight":
        check_budget(N, "weight enumeration", limit)
        w = (C != 0).sum(axis=1)
        return Enumerator({int(k): int(v) for k, v in zip(*np.unique(w, return_counts=True))})
    if mode != "distance":
        raise ValueError("mode is 'weight' or 'distance'")
    check_budget(N * N, "distance enumeration", limit)
    hist = np.zeros(C.shape[1] + 1, dtype=np.int64)
    block = max(1, (1 << 18) // max(N * C.shape[1], 1))
    for lo in range(0, N, block):
        d = (C[None, :, :] != C[lo : lo + block, None, :]).sum(axis=2)
        hist += np.bincount(d.ravel(), minlength=C.shape[1] + 1)
    return Enumerator({k: Fraction(int(v), N) for k, v in enumerate(hist) if v})


# ---------------------------------------------------------------------------
# cyclic structure


def cyclic_zeros(params: ConstructionParams, which: str = "C1") -> list[int]:
    """Exponents ``-2, -(q^s+1), ..., -(q^{ts}+1)`` mod ``q^m - 1`` (and ``-1``
    for C2), in the order listed.

    These are the exponents ``e`` with ``theta^e`` a root of the check
    polynomial: a codeword ``c`` has ``sum_k c_k theta^{uk} = 0`` for every
    ``u`` outside the union of the q-cyclotomic cosets of these exponents.
    """
    q, m, s, t = params.q, params.m, params.s, params.t
    n = q**m - 1
    out = [(-2) % n] + [(-(q ** (s * j) + 1)) % n for j in range(1, t + 1)]
    if which.upper() == "C2":
        out = [(-1) % n] + out
    elif which.upper() != "C1":
        raise ValueError("which is C1 or C2")
    return out


def cyclotomic_closure(exponents, q: int, m: int) -> set[int]:
    n = q**m - 1
    out = set()
    for e in exponents:
        x = e % n
        for _ in range(m):
            out.add(x)
            x = (x * q) % n
    return out


def spectrum(codeword, spec: FieldSpec) -> list[int]:
    """``c(theta^u) = sum_k c_k theta^{uk}`` for ``u = 0..n-1`` as F_{q^m} codes."""
    T = spec.tower
    n = T.order - 1
    c = [int(x) for x in codeword]
    out = []
    for u in range(n):
        acc = 0
        for k, ck in enumerate(c):
            if ck:
                acc = T.add(acc, T.mul(ck, T.exp(u * k)))
        out.append(acc)
    return out


def cyclic_check(codewords, params: ConstructionParams, which: str = "C1", spec: FieldSpec | None = None) -> dict:
    """Check that each codeword's spectrum vanishes off the cyclotomic cosets
    of :func:`cyclic_zeros`, and record where it is supported."""
    spec = spec or default_tower(params.q, params.m)
    allowed = cyclotomic_closure(cyclic_zeros(params, which), params.q, params.m)
    support = set()
    ok = True
    for c in codewords:
        sp = spectrum(c, spec)
        nz = {u for u, v in enumerate(sp) if v}
        support |= nz
        if not nz <= allowed:
            ok = False
    return {"ok": ok, "allowed": sorted(allowed), "support": sorted(support), "exact": ok and support == allowed}


def is_cyclic(C) -> bool:
    """Whether the row set of ``C`` is closed under cyclic shift."""
    rows = {tuple(r) for r in np.asarray(C).tolist()}
    return all(tuple(r[-1:] + r[:-1]) in rows for r in map(list, rows))


# ---------------------------------------------------------------------------
# minimum distances


def min_distance_formulas(params: ConstructionParams, which: str = "C1") -> int:
    """Minimum distance of ``C1``/``C2`` of ``Y_s(t, m, q)``, or of ``C1*``/``C2*``
    built from the punctured set of ``Y_s(t, m, q)`` (forms on ``m - 1``
    coordinates).

    The starred values need ``m - 2t >= 3`` so that puncturing is injective.
    For ``C1`` with odd ``m`` and ``t = 0`` every nonzero form has odd rank
    ``m``; the minimum is then ``q^{m-1}(q-1)``.
    """
    q, t = params.q, params.t
    w = which.upper()
    if w in ("C1", "C2"):
        m = params.m
        if w == "C1":
            if m % 2 and t == 0:
                return q ** (m - 1) * (q - 1)
            return (q ** (m - 1) - q ** (m // 2 + t - 1)) * (q - 1)
        if m % 2:
            return q ** (m - 1) * (q - 1) - q ** ((m - 1) // 2 + t)
        return (q ** (m - 1) - q ** (m // 2 + t - 1)) * (q - 1)
    if w in ("C1*", "C2*"):
        if params.d < 3:
            raise InvalidParams("puncturing keeps the code size only when m - 2t >= 3")
        m = params.m - 1
        if w == "C1*":
            return (q ** (m - 1) - q ** ((m - 1) // 2 + t)) * (q - 1)
        if m % 2:
            return (q ** (m - 1) - q ** ((m - 1) // 2 + t)) * (q - 1)
        return q ** (m - 1) * (q - 1) - q ** (m // 2 + t)
    raise ValueError("which is one of C1, C2, C1*, C2*")
