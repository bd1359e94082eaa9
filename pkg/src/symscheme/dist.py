"""Inner and dual distributions of sets of symmetric forms.

Counts are exact: ``Fraction`` in general, and ``GaussInt`` for dual
distributions over fields with ``q = 1 mod 4`` (there the Gauss sum is the
real number ``sqrt(q)`` and dual counts may be irrational).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import (
    InconsistentParameters,
    InvalidParams,
    NegativeDual,
    NonRealDual,
    PreconditionViolated,
)
from .formset import FormSet
from .linalg import arith, check_budget, fq_row_space_rrefs
from .scheme import (
    GaussInt,
    QNumberTable,
    classes,
    eta_minus_one,
    gauss_ring,
    krawtchouk,
    krawtchouk_c,
    q_numbers_explicit,
    qbinom,
)
from .symform import classify, n_entries, to_matrices, to_packed

Number = Fraction | GaussInt


def _exact(x) -> Number:
    if isinstance(x, GaussInt):
        return x.a if x.b == 0 else x
    return Fraction(x)


def is_nonnegative(x) -> bool:
    """Exact sign test; ``GaussInt`` must be real (``gamma = sqrt(q)``)."""
    if not isinstance(x, GaussInt) or x.b == 0:
        return _exact(x if not isinstance(x, GaussInt) else x.a) >= 0
    if x.ring.sign != 1:
        raise NonRealDual(f"{x} is not real")
    a, b, q = x.a, x.b, x.ring.q
    if a >= 0 and b >= 0:
        return True
    if a <= 0 and b <= 0:
        return False
    return (a * a >= b * b * q) if a > 0 else (b * b * q >= a * a)


@lru_cache(maxsize=None)
def q_table(m: int, q: int) -> QNumberTable:
    return q_numbers_explicit(m, q)


# ---------------------------------------------------------------------------
# distributions


@dataclass
class Distribution:
    """Map ``(rank, type) -> count``; missing classes count zero."""

    m: int
    q: int
    counts: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, t), v in self.counts.items():
            i, t = int(i), int(t)
            if i == 0 and t != 1:
                if v != 0:
                    raise ValueError("rank 0 only has type +1")
                continue
            if not 0 <= i <= self.m or t not in (1, -1):
                raise ValueError(f"bad class {(i, t)}")
            clean[(i, t)] = _exact(v)
        self.counts = clean

    def __getitem__(self, key) -> Number:
        i, t = key
        if i == 0 and t == -1:
            return Fraction(0)
        return self.counts.get((i, t), Fraction(0))

    @property
    def labels(self):
        return classes(self.m)

    def vector(self) -> list:
        """Counts in the column order ``(0,1),(1,1),(1,-1),...``."""
        return [self[c] for c in self.labels]

    @classmethod
    def from_vector(cls, m: int, q: int, values) -> "Distribution":
        return cls(m, q, dict(zip(classes(m), values)))

    def total(self) -> Number:
        return _exact(sum(self.vector(), Fraction(0)))

    def scaled(self, factor) -> "Distribution":
        return Distribution(self.m, self.q, {c: v * factor for c, v in self.counts.items()})

    def __eq__(self, other):
        if not isinstance(other, Distribution):
            return NotImplemented
        return (self.m, self.q) == (other.m, other.q) and all(
            self[c] == other[c] for c in self.labels
        )

    def support(self) -> list:
        return [c for c in self.labels if self[c] != 0]

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, GaussInt):
                return v.to_json()
            return str(v)

        return {
            "m": self.m,
            "q": self.q,
            "classes": [list(c) for c in self.labels],
            "counts": [enc(v) for v in self.vector()],
        }

    @classmethod
    def from_json(cls, obj) -> "Distribution":
        ring = gauss_ring(obj["q"])

        def dec(v):
            if isinstance(v, dict):
                return GaussInt.from_json(v, ring)
            return Fraction(v)

        return cls(obj["m"], obj["q"], {tuple(c): dec(v) for c, v in zip(obj["classes"], obj["counts"])})

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    def __repr__(self):
        body = ", ".join(f"{c}: {self[c]}" for c in self.support())
        return f"Distribution(m={self.m}, q={self.q}, {{{body}}})"


def valency_distribution(m: int, q: int) -> Distribution:
    from .scheme import valency

    return Distribution(m, q, {c: valency(m, q, *c) for c in classes(m)})


def inner_distribution(Y: FormSet, limit: int | None = None) -> Distribution:
    """``a_{i,tau} = |{(A,B) in Y^2 : A - B in X_{i,tau}}| / |Y|``.

    Additive sets need one pass over ``Y``; explicit sets enumerate pairs.
    """
    m, F = Y.m, Y.field
    L = classes(m)
    counts = np.zeros(len(L), dtype=object)

    def tally(packed):
        ranks, types = classify(F, packed, m)
        idx = np.where(ranks == 0, 0, 2 * ranks - 1 + (types == -1))
        for k, c in enumerate(np.bincount(idx, minlength=len(L))):
            counts[k] += int(c)

    if Y.is_additive:
        tally(Y.elements(limit))
        return Distribution.from_vector(m, F.order, [Fraction(int(c)) for c in counts])
    X = Y.elements()
    N = X.shape[0]
    check_budget(N * N, "pair enumeration", limit)
    ar = arith(F)
    block = max(1, (1 << 16) // max(N, 1))
    for lo in range(0, N, block):
        diffs = ar.sub(X[None, :, :], X[lo : lo + block, None, :]).reshape(-1, X.shape[1])
        tally(diffs)
    return Distribution.from_vector(m, F.order, [Fraction(int(c), N) for c in counts])


def dual_distribution(a: Distribution, table: QNumberTable | None = None, check: bool = True) -> Distribution:
    """``a'_{k,eps} = sum_{i,tau} Q_{k,eps}(i,tau) a_{i,tau}``, exactly.

    With ``check`` the result must be real and nonnegative, otherwise
    :class:`NonRealDual` or :class:`NegativeDual` is raised.
    """
    table = table or q_table(a.m, a.q)
    if (table.m, table.q) != (a.m, a.q):
        raise ValueError("Q-number table does not match the distribution")
    ring = table.ring
    out = {}
    for row in table.labels:
        acc = ring(0)
        for col in table.labels:
            v = a[col]
            if v != 0:
                acc = acc + table[row, col] * v
        if check:
            if acc.b != 0 and ring.sign == -1:
                raise NonRealDual(f"dual entry {row} = {acc} is not real")
            if not is_nonnegative(acc):
                raise NegativeDual(f"dual entry {row} = {acc} is negative")
        out[row] = acc
    return Distribution(a.m, a.q, out)


# ---------------------------------------------------------------------------
# A/B/C/D transforms


@dataclass
class ABCDProfile:
    m: int
    q: int
    A: list
    B: list
    C: list
    D: list

    def __eq__(self, other):
        return isinstance(other, ABCDProfile) and (self.m, self.q, self.A, self.B, self.C, self.D) == (
            other.m,
            other.q,
            other.A,
            other.B,
            other.C,
            other.D,
        )


def profile_lengths(m: int) -> tuple[int, int, int, int]:
    return (m + 1) // 2 + 1, m // 2 + 1, m // 2 + 1, (m - 1) // 2 + 1 if m >= 1 else 0


def abcd(a: Distribution) -> ABCDProfile:
    """Sums and signed differences of adjacent rank classes."""
    m, q = a.m, a.q
    h = eta_minus_one(q)
    nA, nB, nC, nD = profile_lengths(m)

    def tot(i):
        return a[i, 1] + a[i, -1] if 0 <= i <= m else Fraction(0)

    def diff(i, s):
        return _exact((a[i, 1] - a[i, -1]) * Fraction(h**s, q**s))

    A = [_exact(tot(2 * s) + tot(2 * s - 1)) for s in range(nA)]
    B = [_exact(tot(2 * s) + tot(2 * s + 1)) for s in range(nB)]
    C = [diff(2 * s, s) for s in range(nC)]
    D = [diff(2 * s + 1, s) for s in range(nD)]
    return ABCDProfile(m, q, A, B, C, D)


abcd_dual = abcd


def distribution_from_abcd(P: ABCDProfile) -> Distribution:
    """Inverse of :func:`abcd`."""
    m, q = P.m, P.q
    h = eta_minus_one(q)
    tot = [Fraction(0)] * (m + 1)
    for i in range(m + 1):
        s = i // 2
        if i % 2 == 0:
            tot[i] = P.A[s] - (tot[i - 1] if i else 0)
        else:
            tot[i] = P.B[s] - tot[i - 1]
    counts = {}
    for i in range(m + 1):
        s = i // 2
        seq = P.C if i % 2 == 0 else P.D
        d = seq[s] * Fraction(q**s, h**s)
        counts[(i, 1)] = (tot[i] + d) / 2
        if i:
            counts[(i, -1)] = (tot[i] - d) / 2
        elif (tot[0] - d) != 0:
            raise ValueError("profile is inconsistent at rank 0")
    return Distribution(m, q, counts)


def four_equations(P: ABCDProfile) -> ABCDProfile:
    """Transform of a profile under the Krawtchouk kernels (exact, gamma symbolic)."""
    m, q = P.m, P.q
    g = gauss_ring(q).gamma
    nA, nB, nC, nD = profile_lengths(m)
    A2 = [_exact(sum((krawtchouk(m + 1, r, s, q) * P.A[s] for s in range(nA)), Fraction(0))) for r in range(nA)]
    C2 = [_exact(sum((krawtchouk(m, r, s, q) * P.B[s] for s in range(nB)), Fraction(0))) for r in range(nC)]
    B2 = [_exact(q**m * sum((krawtchouk(m, r, s, q) * P.C[s] for s in range(nC)), Fraction(0))) for r in range(nB)]
    D2 = [
        _exact(g * (Fraction(q) ** (m - 1) * sum((krawtchouk(m - 1, r, s, q) * P.D[s] for s in range(nD)), Fraction(0))))
        for r in range(nD)
    ]
    return ABCDProfile(m, q, A2, B2, C2, D2)


def four_equations_check(a: Distribution, a_dual: Distribution) -> bool:
    """Whether ``(a, a')`` satisfy the four Krawtchouk transform identities."""
    lhs = abcd_dual(a_dual)
    rhs = four_equations(abcd(a))
    return lhs == rhs


# ---------------------------------------------------------------------------
# predicates


def is_d_code(a: Distribution, d: int) -> bool:
    return all(a[i, t] == 0 for i in range(1, min(d, a.m + 1)) for t in (1, -1))


def is_t_design(a_dual: Distribution, t: int) -> bool:
    return all(a_dual[k, e] == 0 for k in range(1, min(t, a_dual.m) + 1) for e in (1, -1))


def is_design_eps(a_dual: Distribution, t: int, eps: int) -> bool:
    """``t``-design with additionally ``a'_{t+1,eps} = 0`` (``t`` odd in practice)."""
    return is_t_design(a_dual, t) and (t + 1 > a_dual.m or a_dual[t + 1, eps] == 0)


def minimum_rank(a: Distribution) -> int | None:
    for i in range(1, a.m + 1):
        if a[i, 1] or a[i, -1]:
            return i
    return None


def design_strength(a_dual: Distribution) -> int:
    t = 0
    while t < a_dual.m and a_dual[t + 1, 1] == 0 and a_dual[t + 1, -1] == 0:
        t += 1
    return t


# ---------------------------------------------------------------------------
# bounds


def _check_range(m, d, lo=1):
    if m < 1 or not lo <= d <= m:
        raise InvalidParams(f"need 1 <= d <= m, got m={m}, d={d}")


def bound_additive(m: int, q: int, d: int) -> int:
    """Largest size of an additive d-code."""
    _check_range(m, d)
    if (m - d) % 2 == 0:
        return q ** (m * (m - d + 2) // 2)
    return q ** ((m + 1) * (m - d + 1) // 2)


def bound_odd(m: int, q: int, delta: int) -> int:
    """Largest size of any ``(2 delta - 1)``-code."""
    _check_range(m, 2 * delta - 1)
    if m % 2:
        return q ** (m * ((m + 1) // 2 - delta + 1))
    return q ** ((m + 1) * (m // 2 - delta + 1))


def bound_even_additive(m: int, q: int, delta: int) -> int:
    _check_range(m, 2 * delta)
    if m % 2 == 0:
        return q ** (m * (m // 2 - delta + 1))
    return q ** ((m + 1) * ((m - 1) // 2 - delta + 1))


def bound_even_nonadditive(m: int, q: int, delta: int) -> Fraction:
    """Upper bound for arbitrary ``(2 delta)``-codes."""
    _check_range(m, 2 * delta)
    Q = Fraction(q)
    if m % 2:
        return Q ** (m * ((m + 1) // 2 - delta + 1)) * (1 + Q ** (-m + 1)) / (q + 1)
    return Q ** ((m + 1) * (m // 2 - delta + 1)) * (1 + Q ** (-m + 2 * delta - 1)) / (q + 1)


def bounds_all(m: int, q: int, d: int) -> dict:
    out = {"additive": bound_additive(m, q, d)}
    if d % 2:
        out["odd"] = bound_odd(m, q, (d + 1) // 2)
    else:
        out["even_additive"] = bound_even_additive(m, q, d // 2)
        out["even_nonadditive"] = bound_even_nonadditive(m, q, d // 2)
    return out


# ---------------------------------------------------------------------------
# inverting the Krawtchouk transform


def krawtchouk_transform(w, m: int, q: int) -> list:
    n = m // 2
    return [_exact(sum((krawtchouk(m, r, s, q) * w[s] for s in range(n + 1)), Fraction(0))) for r in range(n + 1)]


def invert_distribution(w, w_dual, m: int, delta: int, q: int) -> list:
    """Recover ``w_1..w_n`` from ``w_0`` and ``w'_r = sum_s F^(m)_r(s) w_s``.

    Requires ``w_1 = ... = w_{delta-1} = 0``; only ``w[0]`` is otherwise read.
    """
    n = m // 2
    if delta < 1:
        raise PreconditionViolated("delta must be positive")
    w = list(w) + [0] * (n + 1 - len(w))
    if any(w[i] != 0 for i in range(1, min(delta, n + 1))):
        raise PreconditionViolated("w_1, ..., w_{delta-1} must vanish")
    wp = [Fraction(x) if not isinstance(x, GaussInt) else x for x in w_dual]
    c = Fraction(krawtchouk_c(m, q))
    w0 = Fraction(w[0])
    simple = all(wp[r] == 0 for r in range(1, n - delta + 1))
    out = [w0]
    for i in range(1, n + 1):
        acc = Fraction(0)
        for j in range(0, i - delta + 1):
            sign = (-1) ** j * Fraction(q) ** (j * (j - 1))
            ck = c ** (n + j - i)
            term = qbinom(n, i, q) * qbinom(i, j, q) * (wp[0] / ck - w0)
            if not simple:
                inner = sum((qbinom(n - r, i - j, q) * wp[r] for r in range(1, n + j - i + 1)), Fraction(0))
                term += qbinom(n + j - i, n - i, q) * inner / ck
            acc += sign * term
        out.append(_exact(acc))
    return out


# ---------------------------------------------------------------------------
# closed-form inner distributions


def _alt_sum(i: int, upper: int, q: int, f, top: int | None = None):
    """``sum_{j=0}^{upper} (-1)^j q^{j(j-1)} [top j] f(j)`` with ``top = i`` by default."""
    top = i if top is None else top
    return sum(
        ((-1) ** j * Fraction(q) ** (j * (j - 1)) * qbinom(top, j, q) * f(j) for j in range(0, upper + 1)),
        Fraction(0),
    )


def _finish(m, q, counts, size, what):
    dist = Distribution(m, q, counts)
    if any(v < 0 for v in dist.vector()):
        raise InconsistentParameters(f"{what}: parameters give negative counts {dist}")
    if dist.total() != size:
        raise InconsistentParameters(f"{what}: counts sum to {dist.total()}, not {size}")
    if any((v * size).denominator != 1 for v in dist.vector()):
        raise InconsistentParameters(f"{what}: pair counts |Y| a_(i,tau) are not integers")
    if not all(is_nonnegative(v) for v in dual_distribution(dist, check=False).vector()):
        raise InconsistentParameters(f"{what}: no set has this distribution (negative dual entry)")
    return dist


def _validate(m, q, delta, size, d):
    if m < 1 or delta < 1 or d > m:
        raise InconsistentParameters(f"no {d}-codes in X({m},{q})")
    if Fraction(size) <= 0:
        raise InconsistentParameters("size must be positive")


def closed_form_odd(m: int, q: int, delta: int, size) -> Distribution:
    """Inner distribution of a ``(2 delta - 1)``-code with the matching design
    strength (``2n - 2 delta + 3`` for ``m = 2n + 1``, ``2n - 2 delta + 2``
    for ``m = 2n``).  For even ``m`` the size is forced to be the bound.
    """
    _validate(m, q, delta, size, 2 * delta - 1)
    Y = Fraction(size)
    Q = Fraction(q)
    h = eta_minus_one(q)
    counts = {(0, 1): Fraction(1)}
    if m % 2:
        n = (m - 1) // 2
        for i in range(1, n + 2):
            base = _alt_sum(i, i - delta, q, lambda j: Y / Q ** ((2 * n + 1) * (n + 1 + j - i)) - 1)
            odd = base * qbinom(n, i - 1, q) / 2
            counts[(2 * i - 1, 1)] = counts[(2 * i - 1, -1)] = odd
            if 2 * i <= m:
                for t in (1, -1):
                    counts[(2 * i, t)] = (Q ** (2 * i) + t * h**i * Q**i) * qbinom(n, i, q) * base / 2
    else:
        n = m // 2
        if Y != bound_odd(m, q, delta):
            raise InconsistentParameters("for even m the size must equal the odd-distance bound")
        for i in range(1, n + 1):
            odd = (Q ** (2 * i) - 1) * qbinom(n, i, q) / 2 * _alt_sum(
                i, i - delta, q, lambda j: Y * Q ** (2 * j) / Q ** ((2 * n + 1) * (n + 1 + j - i)), top=i - 1
            )
            counts[(2 * i - 1, 1)] = counts[(2 * i - 1, -1)] = odd
            s1 = _alt_sum(i, i - delta + 1, q, lambda j: Y * Q ** (2 * j) / Q ** ((2 * n + 1) * (n + j - i)) - 1)
            s2 = _alt_sum(i, i - delta, q, lambda j: Y / (Q ** ((2 * n - 1) * (n + j - i)) * Q ** (2 * n)) - 1)
            for t in (1, -1):
                counts[(2 * i, t)] = qbinom(n, i, q) * s1 / 2 + Fraction(t, 2) * h**i * Q**i * qbinom(n, i, q) * s2
    return _finish(m, q, counts, Y, "closed_form_odd")


def closed_form_even(m: int, q: int, delta: int, size) -> Distribution:
    """Inner distribution of a ``(2 delta)``-code that is a
    ``(2n - 2 delta + 1)``-design (``m = 2n``) or a
    ``(2n - 2 delta + 1, eta(-1)^(n - delta + 1))``-design (``m = 2n + 1``).
    """
    _validate(m, q, delta, size, 2 * delta)
    Y = Fraction(size)
    Q = Fraction(q)
    h = eta_minus_one(q)
    counts = {(0, 1): Fraction(1)}
    if m % 2 == 0:
        n = m // 2
        for i in range(1, n + 1):
            odd = (Q ** (2 * i) - 1) * qbinom(n, i, q) / 2 * _alt_sum(
                i, i - delta - 1, q, lambda j: Y * Q ** (2 * j) / Q ** ((2 * n + 1) * (n + 1 + j - i)), top=i - 1
            )
            counts[(2 * i - 1, 1)] = counts[(2 * i - 1, -1)] = odd
            s1 = _alt_sum(i, i - delta, q, lambda j: Y * Q ** (2 * j) / Q ** ((2 * n + 1) * (n + j - i)) - 1)
            s2 = _alt_sum(i, i - delta, q, lambda j: Y / (Q ** ((2 * n - 1) * (n + j - i)) * Q ** (2 * n)) - 1)
            for t in (1, -1):
                counts[(2 * i, t)] = qbinom(n, i, q) * s1 / 2 + Fraction(t, 2) * h**i * Q**i * qbinom(n, i, q) * s2
    else:
        n = (m - 1) // 2
        excess = Y / Q ** ((2 * n + 1) * (n - delta + 1)) - 1
        for i in range(1, n + 2):
            k = i - delta
            base = _alt_sum(i, k, q, lambda j: Y / Q ** ((2 * n + 1) * (n + 1 + j - i)) - 1)
            extra = (
                Fraction((-1) ** k)
                * Q ** (k * (k - 1))
                * qbinom(n, delta - 1, q)
                * excess
                * (qbinom(n - delta, n - i + 1, q) * (Q ** (n - delta + 1) + 1) - qbinom(n - delta + 1, n - i + 1, q))
            )
            odd = qbinom(n, i - 1, q) * base / 2 + extra / 2
            counts[(2 * i - 1, 1)] = counts[(2 * i - 1, -1)] = odd
            if 2 * i <= m:
                extra2 = (
                    Fraction((-1) ** k)
                    * Q ** ((k + 1) * k)
                    * qbinom(n, delta - 1, q)
                    * qbinom(n - delta, n - i, q)
                    * (Q ** (n - delta + 1) + 1)
                    * excess
                )
                for t in (1, -1):
                    counts[(2 * i, t)] = (
                        (Q ** (2 * i) + t * h**i * Q**i) * qbinom(n, i, q) * base / 2 + extra2 / 2
                    )
    return _finish(m, q, counts, Y, "closed_form_even")


def closed_form_profile(m: int, q: int, d: int, size) -> ABCDProfile:
    """The A/B/C/D sequences of the extremal codes, obtained by inverting the
    Krawtchouk transforms with the design zeros imposed.

    This is an independent route to :func:`closed_form_odd` and
    :func:`closed_form_even`: ``distribution_from_abcd`` of the result must
    agree with them.
    """
    Y = Fraction(size)
    Q = Fraction(q)
    nA, nB, nC, nD = profile_lengths(m)
    delta = (d + 1) // 2
    n = m // 2

    def seq(length, top, upper_shift, expo):
        out = [Fraction(1)]
        for i in range(1, length):
            out.append(qbinom(top, i, q) * _alt_sum(i, i - delta + upper_shift, q, lambda j: Y / expo(i, j) - 1))
        return out

    odd_m = m % 2 == 1
    if d % 2:
        if odd_m:
            A = seq(nA, n + 1, 0, lambda i, j: Q ** ((2 * n + 1) * (n + 1 + j - i)))
            B = seq(nB, n, 1, lambda i, j: Q ** ((2 * n + 1) * (n + j - i)))
            C = seq(nC, n, 0, lambda i, j: Q ** ((2 * n + 1) * (n + 1 + j - i)))
        else:
            A = seq(nA, n, 0, lambda i, j: Q ** ((2 * n + 1) * (n + j - i)))
            B = seq(nB, n, 1, lambda i, j: Q ** ((2 * n - 1) * (n + j - i)))
            C = seq(nC, n, 0, lambda i, j: Q ** ((2 * n - 1) * (n + j - i) + 2 * n))
    else:
        if odd_m:
            A = seq(nA, n + 1, 0, lambda i, j: Q ** ((2 * n + 1) * (n + 1 + j - i)))
            Cp = qbinom(n, delta - 1, q) * (Q ** ((2 * n + 1) * (n - delta + 1)) - Y)
            Ap = -(Q ** (n - delta + 1)) * Cp
            for i in range(1, nA):
                k = i - delta
                A[i] += (
                    Fraction((-1) ** k)
                    * Q ** (k * (k - 1))
                    * qbinom(n - delta + 1, n - i + 1, q)
                    * Ap
                    / Q ** ((2 * n + 1) * (n - delta + 1))
                )
            B = seq(nB, n, 0, lambda i, j: Q ** ((2 * n + 1) * (n + j - i)))
            C = seq(nC, n, 0, lambda i, j: Q ** ((2 * n + 1) * (n + 1 + j - i)))
        else:
            A = seq(nA, n, 0, lambda i, j: Q ** ((2 * n + 1) * (n + j - i)))
            B = seq(nB, n, 0, lambda i, j: Q ** ((2 * n - 1) * (n + j - i)))
            C = seq(nC, n, 0, lambda i, j: Q ** ((2 * n - 1) * (n + j - i) + 2 * n))
    if d == 1:
        # B_0 = 1 + a_{1,1} + a_{1,-1} is not 1 here; recover the rank-1 total
        # from the top of the chains A_s = e_{2s} + e_{2s-1}, B_s = e_{2s} + e_{2s+1}.
        e = [Fraction(0)] * (m + 2)
        for i in range(m, 0, -1):
            e[i] = (B[i // 2] if i % 2 == 0 else A[(i + 1) // 2]) - e[i + 1]
        B[0] = 1 + e[1]
    D = [Fraction(0)] * nD
    return ABCDProfile(m, q, A, B, C, D)


# ---------------------------------------------------------------------------
# combinatorial design test


@dataclass
class ExtensionProfile:
    t: int
    counts: dict  # (rref generator tuple, packed restricted form) -> count
    constant: bool
    value: int | None


def design_extension_profile(Y: FormSet, t: int, limit: int | None = None) -> ExtensionProfile:
    """For every t-dimensional subspace ``U`` (reduced echelon generator) and
    every form ``A`` on ``U``, count the forms of ``Y`` restricting to ``A``.
    """
    m, F = Y.m, Y.field
    q = F.order
    if not 0 <= t <= m:
        raise InvalidParams("t must lie in 0..m")
    n_sub = qbinom_plain(m, t, q)
    n_forms = q ** n_entries(t)
    check_budget(n_sub * max(len(Y), n_forms), "extension profile", limit)
    ar = arith(F)
    mats = to_matrices(Y.elements(limit), m)
    weights = q ** np.arange(n_entries(t), dtype=np.int64)[::-1]
    counts = {}
    values = set()
    for G in fq_row_space_rrefs(F, t, m):
        R = ar.matmul(ar.matmul(G[None, :, :], mats), G.T[None, :, :])
        codes = to_packed(R) @ weights if t else np.zeros(len(mats), dtype=np.int64)
        hist = np.bincount(codes, minlength=n_forms)
        key = tuple(map(tuple, G.tolist()))
        for code, c in enumerate(hist):
            counts[(key, code)] = int(c)
        values.update(np.unique(hist).tolist())
    constant = len(values) == 1
    return ExtensionProfile(t, counts, constant, values.pop() if constant else None)


def qbinom_plain(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den
