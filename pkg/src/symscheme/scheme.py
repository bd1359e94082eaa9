"""Eigenvalues of the association scheme of symmetric bilinear forms.

Q-numbers live in the ring ``Q[gamma]`` with ``gamma**2 = eta(-1) q`` where
``gamma`` is the quadratic Gauss sum of F_q for the canonical additive
character.  They are produced by a closed formula, by a recurrence in the
dimension, and (numerically) by summing characters over all forms.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .gf import FiniteField, as_field, gauss_sum_numeric, prime_power
from .linalg import arith
from .symform import (
    SymForm,
    all_forms,
    classify,
    random_invertible,
    representative,
    trace_products,
)


def classes(m: int) -> list[tuple[int, int]]:
    """Relation labels ``(0,1), (1,1), (1,-1), ..., (m,1), (m,-1)``."""
    return [(0, 1)] + [(i, t) for i in range(1, m + 1) for t in (1, -1)]


def eta_minus_one(q: int) -> int:
    return 1 if q % 4 == 1 else -1


# ---------------------------------------------------------------------------
# q^2-binomials and Krawtchouk numbers


@lru_cache(maxsize=None)
def qbinom(n: int, k: int, q: int):
    """Gaussian binomial in ``q**2``; an int whenever the value is integral."""
    if k < 0:
        return 0
    num = Fraction(1)
    for i in range(1, k + 1):
        num *= Fraction(q) ** (2 * n - 2 * i + 2) - 1
        num /= q ** (2 * i) - 1
    return num.numerator if num.denominator == 1 else num


@lru_cache(maxsize=None)
def krawtchouk(m: int, r: int, s: int, q: int) -> int:
    """Generalized Krawtchouk number ``F^(m)_r(s)``.

    ``n = m // 2`` and ``c = q**(m(m-1)/(2n))``.  Indices outside
    ``0 <= r, s <= n`` give 0; for ``n = 0`` only ``F_0(0) = 1`` survives.
    """
    n = m // 2
    if m < 0 or r < 0 or s < 0 or r > n or s > n:
        return 0
    if n == 0:
        return 1
    c = q ** (m * (m - 1) // (2 * n))
    total = 0
    for j in range(r + 1):
        total += (
            (-1) ** (r - j)
            * q ** ((r - j) * (r - j - 1))
            * qbinom(n - j, n - r, q)
            * qbinom(n - s, j, q)
            * c**j
        )
    return int(total)


def krawtchouk_c(m: int, q: int) -> int:
    n = m // 2
    return q ** (m * (m - 1) // (2 * n)) if n else 1


@lru_cache(maxsize=None)
def valency(m: int, q: int, i: int, tau: int) -> int:
    """Number of symmetric ``m x m`` matrices of rank ``i`` and type ``tau``."""
    if i < 0 or i > m:
        return 0
    if i == 0:
        return 1 if tau == 1 else 0
    e = eta_minus_one(q)
    s = i // 2
    den = 1
    for j in range(s):
        den *= q ** (2 * s) - q ** (2 * j)
    num = 1
    for j in range(i):
        num *= q**m - q**j
    if i % 2 == 0:
        val = Fraction(q**s + e**s * tau, 2) * Fraction(num, den)
    else:
        val = Fraction(num, 2 * q**s * den)
    assert val.denominator == 1
    return int(val)


# ---------------------------------------------------------------------------
# the ring Q[gamma]


@dataclass(frozen=True)
class GaussRing:
    """``Q[gamma]`` with ``gamma**2 = sign * q``.

    When ``q`` is a perfect square the Gauss sum is the rational integer
    ``root`` and elements are kept with zero ``gamma`` part.
    """

    q: int
    sign: int
    root: int | None = None

    @property
    def gamma(self) -> "GaussInt":
        return GaussInt(Fraction(0), Fraction(1), self)

    def __call__(self, a=0, b=0) -> "GaussInt":
        return GaussInt(Fraction(a), Fraction(b), self)

    def numeric_gamma(self) -> complex:
        return numeric_gauss_sum(self.q)


@lru_cache(maxsize=None)
def numeric_gauss_sum(q: int) -> complex:
    return gauss_sum_numeric(as_field(q))


@lru_cache(maxsize=None)
def gauss_ring(q: int) -> GaussRing:
    prime_power(q)
    sign = eta_minus_one(q)
    r = math.isqrt(q)
    root = None
    if r * r == q:
        g = numeric_gauss_sum(q)
        root = r if g.real > 0 else -r
    return GaussRing(q, sign, root)


class GaussInt:
    """``a + b*gamma`` with rational ``a, b``."""

    __slots__ = ("a", "b", "ring")

    def __init__(self, a, b, ring: GaussRing):
        a = Fraction(a)
        b = Fraction(b)
        if ring.root is not None and b:
            a += b * ring.root
            b = Fraction(0)
        self.a = a
        self.b = b
        self.ring = ring

    def _lift(self, other):
        if isinstance(other, GaussInt):
            if other.ring != self.ring:
                raise ValueError("elements of different Gauss rings")
            return other
        if isinstance(other, (int, Fraction)):
            return GaussInt(other, 0, self.ring)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussInt(self.a + o.a, self.b + o.b, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return GaussInt(-self.a, -self.b, self.ring)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussInt(self.a - o.a, self.b - o.b, self.ring)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        g2 = self.ring.sign * self.ring.q
        return GaussInt(self.a * o.a + self.b * o.b * g2, self.a * o.b + self.b * o.a, self.ring)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussInt(self.a / other, self.b / other, self.ring)
        return NotImplemented

    def __pow__(self, n: int):
        out = GaussInt(1, 0, self.ring)
        for _ in range(n):
            out = out * self
        return out

    def conj(self) -> "GaussInt":
        """Complex conjugate: ``gamma`` is real iff ``eta(-1) = 1``."""
        return GaussInt(self.a, self.b * self.ring.sign, self.ring)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, self.ring))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_complex(self, gamma: complex | None = None) -> complex:
        g = self.ring.numeric_gamma() if gamma is None else gamma
        return float(self.a) + float(self.b) * g

    def to_json(self) -> dict:
        return {
            "a_num": str(self.a.numerator),
            "a_den": str(self.a.denominator),
            "b_num": str(self.b.numerator),
            "b_den": str(self.b.denominator),
        }

    @classmethod
    def from_json(cls, obj, ring):
        return cls(
            Fraction(int(obj["a_num"]), int(obj["a_den"])),
            Fraction(int(obj["b_num"]), int(obj["b_den"])),
            ring,
        )

    def __repr__(self):
        if self.b == 0:
            return f"{self.a}"
        return f"({self.a} + {self.b}*g)"

    def tex(self) -> str:
        def frac(x):
            return str(x.numerator) if x.denominator == 1 else rf"\tfrac{{{x.numerator}}}{{{x.denominator}}}"

        if self.b == 0:
            return frac(self.a)
        sgn = "+" if self.b > 0 else "-"
        head = "" if self.a == 0 else frac(self.a) + " "
        return rf"{head}{sgn} {frac(abs(self.b))}\gamma_{{{self.ring.q}}}"


# ---------------------------------------------------------------------------
# tables


@dataclass
class QNumberTable:
    """``entries[(k, eps)][(i, tau)] = Q_{k,eps}(i, tau)``; rows are eigenspaces."""

    m: int
    q: int
    entries: dict

    @property
    def ring(self) -> GaussRing:
        return gauss_ring(self.q)

    @property
    def labels(self) -> list[tuple[int, int]]:
        return classes(self.m)

    def __getitem__(self, key):
        row, col = key
        return self.entries[tuple(row)][tuple(col)]

    def matrix(self) -> list[list[GaussInt]]:
        L = self.labels
        return [[self.entries[r][c] for c in L] for r in L]

    def __eq__(self, other):
        if not isinstance(other, QNumberTable):
            return NotImplemented
        return (self.m, self.q) == (other.m, other.q) and all(
            self[r, c] == other[r, c] for r in self.labels for c in self.labels
        )

    def numeric(self, gamma: complex | None = None) -> np.ndarray:
        return np.array([[x.to_complex(gamma) for x in row] for row in self.matrix()])

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "q": self.q,
            "eta_minus_one": self.ring.sign,
            "convention": "entries[row][col] = Q_{row}(col); rows (k,eps), cols (i,tau)",
            "rows": [list(x) for x in self.labels],
            "cols": [list(x) for x in self.labels],
            "entries": [[x.to_json() for x in row] for row in self.matrix()],
        }

    @classmethod
    def from_json(cls, obj) -> "QNumberTable":
        ring = gauss_ring(obj["q"])
        rows = [tuple(x) for x in obj["rows"]]
        cols = [tuple(x) for x in obj["cols"]]
        entries = {
            r: {c: GaussInt.from_json(obj["entries"][a][b], ring) for b, c in enumerate(cols)}
            for a, r in enumerate(rows)
        }
        return cls(obj["m"], obj["q"], entries)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True)

    def to_tex(self) -> str:
        L = self.labels
        head = " & ".join(f"$({i},{t:+d})$" for i, t in L)
        lines = [
            r"\begin{tabular}{c" + "c" * len(L) + "}",
            r"\hline",
            rf"$(k,\epsilon)\backslash(i,\tau)$ & {head} \\ \hline",
        ]
        for r in L:
            cells = " & ".join(f"${self.entries[r][c].tex()}$" for c in L)
            lines.append(f"$({r[0]},{r[1]:+d})$ & {cells} \\\\")
        lines += [r"\hline", r"\end{tabular}"]
        return "\n".join(lines)


def q_numbers_explicit(m: int, q: int) -> QNumberTable:
    """Q-numbers from the closed formula (symmetric and antisymmetric parts)."""
    ring = gauss_ring(q)
    g = ring.gamma
    h = ring.sign
    F = lambda mm, r, s: krawtchouk(mm, r, s, q)  # noqa: E731
    Fq = Fraction(q)
    entries = {}
    for k, eps in classes(m):
        row = {}
        for i, tau in classes(m):
            if k == 0:
                row[(i, tau)] = ring(1)
                continue
            if i == 0:
                row[(i, tau)] = ring(valency(m, q, k, eps))
                continue
            r, s = k // 2, i // 2
            if k % 2 and i % 2:
                sym = ring(-(Fq ** (2 * r)) * F(m - 1, r, s))
                anti = g * (tau * h ** (s + r) * Fq ** (m - s + r - 1) * F(m - 1, r, s))
            elif i % 2:
                sym = ring(Fq ** (2 * r) * F(m - 1, r, s))
                anti = ring(h**r * Fq**r * F(m, r, s))
            elif k % 2:
                sym = ring(-(Fq ** (2 * r)) * F(m - 1, r, s - 1) + tau * h**s * Fq ** (m - s + 2 * r) * F(m - 2, r, s - 1))
                anti = ring(0)
            else:
                sym = ring(
                    Fq ** (2 * r) * F(m - 1, r, s - 1)
                    - tau * h**s * Fq ** (m - s + 2 * r - 2) * F(m - 2, r - 1, s - 1)
                )
                anti = ring(h**r * Fq**r * F(m, r, s))
            row[(i, tau)] = (sym + anti * eps) / 2
        entries[(k, eps)] = row
    return QNumberTable(m, q, entries)


def q_numbers_recurrence(m: int, q: int) -> QNumberTable:
    """Q-numbers built up one dimension at a time from X(0, q)."""
    ring = gauss_ring(q)
    g = ring.gamma
    zero = ring(0)
    prev = {(0, 1): {(0, 1): ring(1)}}
    for mm in range(1, m + 1):
        cur = {}

        def old(k, eps, i):
            return prev.get((k, eps), {}).get((i, 1), zero)

        for k, eps in classes(mm):
            row = {}
            for i, tau in classes(mm):
                if k == 0:
                    row[(i, tau)] = ring(1)
                elif i == 0:
                    row[(i, tau)] = ring(valency(mm, q, k, eps))
                else:
                    bracket = old(k - 1, eps, i - 1) * (q - g * tau) - (-1) ** i * old(k - 1, -eps, i - 1) * (q + g * tau)
                    row[(i, tau)] = row[(i - 1, 1)] - (g ** (i - 1)) * bracket * Fraction(q ** (mm - i), 2)
            cur[(k, eps)] = row
        prev = cur
    return QNumberTable(m, q, prev)


def q_numbers_charsum_oracle(m: int, q, n_reps: int = 3, seed: int = 0, limit: int | None = None, return_deviation=False):
    """Numeric Q-numbers ``Q_{k,eps}(i,tau) = sum_{A in X_{k,eps}} chi(tr(A B))``.

    ``B`` is the canonical diagonal representative of class ``(i, tau)`` and
    ``n_reps - 1`` random congruent copies of it; the largest spread between
    representatives is reported when ``return_deviation`` is set.
    """
    F = as_field(q)
    L = classes(m)
    X = all_forms(m, F, limit)
    ranks, types = classify(F, X, m)
    label = {c: n for n, c in enumerate(L)}
    cls = np.array([label[(int(r), int(t) if r else 1)] for r, t in zip(ranks, types)])
    rng = np.random.default_rng(seed)
    ar = arith(F)
    out = np.zeros((len(L), len(L)), dtype=complex)
    spread = 0.0
    for col, (i, tau) in enumerate(L):
        base = representative(m, F, i, tau)
        reps = [base] + [base.congruent(random_invertible(F, m, rng)) for _ in range(n_reps - 1)]
        values = []
        for B in reps:
            tr = trace_products(F, X, np.array(B.entries), m)
            chi = np.exp(2j * np.pi * ar.trace_tab[tr] / F.p)
            col_vals = np.bincount(cls, weights=chi.real, minlength=len(L)) + 1j * np.bincount(
                cls, weights=chi.imag, minlength=len(L)
            )
            values.append(col_vals)
        for v in values[1:]:
            spread = max(spread, float(np.abs(v - values[0]).max()))
        out[:, col] = values[0]
    if return_deviation:
        return out, spread
    return out


def p_numbers(table: QNumberTable) -> dict:
    """``P_{k,eps}(i,tau) = conj(Q_{k,eps}(i,tau))``."""
    return {r: {c: v.conj() for c, v in row.items()} for r, row in table.entries.items()}


def pq_orthogonality_check(table: QNumberTable) -> bool:
    """Exact check of ``Q . P = |X| I`` with ``P`` the entrywise conjugate."""
    L = table.labels
    P = p_numbers(table)
    size = table.q ** (table.m * (table.m + 1) // 2)
    ring = table.ring
    for a in L:
        for b in L:
            acc = ring(0)
            for j in L:
                acc = acc + table[a, j] * P[j][b]
            if acc != (size if a == b else 0):
                return False
    return True
