"""Finite fields of odd characteristic.

Elements of every field are encoded as nonnegative integers.  For an
extension of a field ``K`` of order ``b`` with polynomial modulus of degree
``d``, the element ``c_0 + c_1 x + ... + c_{d-1} x^{d-1}`` has code
``c_0 + c_1 b + ... + c_{d-1} b^{d-1}``.  Unrolling a tower this is the same
as listing the coordinates over the prime field as base-``p`` digits, so
addition is always digitwise addition mod ``p``.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import (
    EvenCharacteristic,
    NoPrimitiveElement,
    NotPrime,
    NoTowerConfigured,
    ReducibleModulus,
)

# Fields up to this order get exp/log tables; larger ones fall back to
# polynomial arithmetic.
TABLE_LIMIT = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``; raise NotPrime otherwise."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    fs = prime_factors(q)
    if len(fs) != 1:
        raise NotPrime(f"{q} is not a prime power")
    p = fs[0]
    e = round(math.log(q, p))
    while p**e < q:
        e += 1
    while p**e > q:
        e -= 1
    if p**e != q:
        raise NotPrime(f"{q} is not a prime power")
    return p, e


# ---------------------------------------------------------------------------
# polynomials over a field, as coefficient lists (constant term first)


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(F, a, b):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([F.sub(x, y) for x, y in zip(a, b)])


def _poly_mul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _trim(out)


def _poly_divmod(F, a, b):
    a = list(a)
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = F.inv(b[-1])
    quot = [0] * max(len(a) - len(b) + 1, 0)
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = F.mul(a[-1], inv_lead)
        quot[shift] = c
        for j, y in enumerate(b):
            a[shift + j] = F.sub(a[shift + j], F.mul(c, y))
        a.pop()
    return _trim(quot), _trim(a)


def _poly_mod(F, a, b):
    return _poly_divmod(F, a, b)[1]


def _poly_powmod(F, a, n, mod):
    result = [1]
    a = _poly_mod(F, a, mod)
    while n:
        if n & 1:
            result = _poly_mod(F, _poly_mul(F, result, a), mod)
        a = _poly_mod(F, _poly_mul(F, a, a), mod)
        n >>= 1
    return result


def _poly_gcd(F, a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(F, a, b)
    return a


def is_irreducible(F, modulus) -> bool:
    """Irreducibility of a monic polynomial over ``F``.

    Checks ``gcd(x^(r^k) - x, f) = 1`` for ``0 < k < deg f`` and
    ``x^(r^deg f) = x mod f`` where ``r = |F|``.
    """
    f = _trim(list(modulus))
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    h = x
    for k in range(1, d):
        h = _poly_powmod(F, h, F.order, f)
        g = _poly_gcd(F, _poly_sub(F, h, x), f)
        if len(g) != 1:
            return False
    h = _poly_powmod(F, h, F.order, f)
    return _poly_sub(F, h, x) == []


def smallest_irreducible(F, degree: int) -> list[int]:
    """Smallest monic irreducible of the given degree over ``F``.

    Candidates ``x^d + sum c_i x^i`` are ordered by the code
    ``sum c_i |F|^i``, i.e. by the coefficient of ``x^(d-1)`` first.
    """
    if degree == 1:
        return [0, 1]
    for code in range(F.order**degree):
        coeffs = _digits(code, F.order, degree) + [1]
        if coeffs[0] == 0:
            continue
        if is_irreducible(F, coeffs):
            return coeffs
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def _digits(code: int, base: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        code, r = divmod(code, base)
        out.append(r)
    return out


# ---------------------------------------------------------------------------
# fields


class FiniteField:
    """Common interface of prime fields and extension fields."""

    p: int
    order: int
    degree: int
    base: "FiniteField | None"

    # subclasses implement add/sub/neg/mul
    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if n == 0 else 0
        return self._exp[(self._log[a] * n) % (self.order - 1)]

    def log(self, a: int) -> int:
        """Discrete logarithm to the base of :attr:`primitive`."""
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def exp(self, k: int) -> int:
        return self._exp[k % (self.order - 1)]

    @property
    def prime_digits(self) -> int:
        """Number of coordinates over the prime field."""
        return self.absolute_degree

    @property
    def absolute_degree(self) -> int:
        return self.degree * (self.base.absolute_degree if self.base else 1)

    def is_square(self, a: int) -> bool:
        return a != 0 and self._log[a] % 2 == 0

    def eta(self, a: int) -> int:
        """Quadratic character with ``eta(0) = 0``."""
        if a == 0:
            return 0
        return 1 if self._log[a] % 2 == 0 else -1

    def frobenius(self, a: int, k: int = 1) -> int:
        """``a ** (b ** k)`` where ``b`` is the order of the base field."""
        if a == 0:
            return 0
        b = self.base.order if self.base else self.p
        return self._exp[(self._log[a] * pow(b, k, self.order - 1)) % (self.order - 1)]

    def trace(self, a: int) -> int:
        if self.base is None:
            raise NoTowerConfigured("prime field has no relative trace")
        acc = 0
        for k in range(self.degree):
            acc = self.add(acc, self.frobenius(a, k))
        if acc >= self.base.order:  # pragma: no cover - would be a bug
            raise AssertionError("trace left the base field")
        return acc

    def absolute_trace(self, a: int) -> int:
        if self.base is None:
            return a
        return self.base.absolute_trace(self.trace(a))

    def character(self, a: int) -> complex:
        return cmath.exp(2j * math.pi * self.absolute_trace(a) / self.p)

    @cached_property
    def smallest_nonsquare(self) -> int:
        return next(a for a in range(1, self.order) if not self.is_square(a))

    @property
    def primitive(self) -> int:
        return self._exp[1] if self.order > 2 else 1

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, code % self.order if code < 0 else code)

    def elements(self):
        return [FieldElement(self, c) for c in range(self.order)]

    def coords(self, a: int) -> list[int]:
        """Coordinates over the immediate base field (polynomial basis)."""
        b = self.base.order if self.base else self.order
        return _digits(a, b, self.degree)

    def from_coords(self, cs) -> int:
        b = self.base.order if self.base else self.order
        code = 0
        for c in reversed(list(cs)):
            code = code * b + int(c)
        return code

    def prime_coords(self, a: int) -> list[int]:
        return _digits(a, self.p, self.absolute_degree)

    def _build_tables(self, slow_mul):
        n = self.order
        if n > TABLE_LIMIT:
            raise NotImplementedError(f"field of order {n} is too large for tables")
        factors = prime_factors(n - 1)
        for g in range(1, n):
            ok = True
            for r in factors:
                acc, base, e = 1, g, (n - 1) // r
                while e:
                    if e & 1:
                        acc = slow_mul(acc, base)
                    base = slow_mul(base, base)
                    e >>= 1
                if acc == 1:
                    ok = False
                    break
            if ok or n == 2:
                break
        else:  # pragma: no cover
            raise NoPrimitiveElement(f"no primitive element in field of order {n}")
        exp = [0] * (n - 1)
        log = [0] * n
        x = 1
        for k in range(n - 1):
            exp[k] = x
            log[x] = k
            x = slow_mul(x, g)
        if x != 1:  # pragma: no cover
            raise NoPrimitiveElement("generator search failed")
        self._exp = exp
        self._log = log

    @cached_property
    def exp_array(self) -> np.ndarray:
        return np.array(self._exp, dtype=np.int64)

    @cached_property
    def log_array(self) -> np.ndarray:
        return np.array(self._log, dtype=np.int64)

    @cached_property
    def digit_array(self) -> np.ndarray:
        """``(order, absolute_degree)`` array of prime-field coordinates."""
        codes = np.arange(self.order, dtype=np.int64)
        out = np.empty((self.order, self.absolute_degree), dtype=np.int64)
        for k in range(self.absolute_degree):
            codes, out[:, k] = np.divmod(codes, self.p)
        return out

    @cached_property
    def _p_powers(self) -> np.ndarray:
        return self.p ** np.arange(self.absolute_degree, dtype=np.int64)

    def add_arrays(self, a, b):
        da = self.digit_array[a]
        db = self.digit_array[b]
        return ((da + db) % self.p) @ self._p_powers

    def mul_arrays(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        la = self.log_array[a]
        lb = self.log_array[b]
        out = self.exp_array[(la + lb) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, out)


class PrimeField(FiniteField):
    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p == 2:
            raise EvenCharacteristic("characteristic 2 is not supported")
        self.p = p
        self.order = p
        self.degree = 1
        self.base = None
        self.modulus = (0, 1)
        self._build_tables(lambda a, b: (a * b) % p)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def add_arrays(self, a, b):
        return (np.asarray(a) + np.asarray(b)) % self.p

    def mul_arrays(self, a, b):
        return (np.asarray(a) * np.asarray(b)) % self.p

    def __repr__(self):
        return f"GF({self.p})"


class ExtensionField(FiniteField):
    def __init__(self, base: FiniteField, modulus):
        mod = _trim([int(c) for c in modulus])
        if not mod or mod[-1] != 1:
            raise ReducibleModulus("modulus must be monic")
        if not is_irreducible(base, mod):
            raise ReducibleModulus(f"{mod} is reducible over {base!r}")
        self.base = base
        self.p = base.p
        self.modulus = tuple(mod)
        self.degree = len(mod) - 1
        self.order = base.order**self.degree
        self._build_tables(self._slow_mul)

    def _slow_mul(self, a, b):
        F = self.base
        pa = _trim(self.coords(a))
        pb = _trim(self.coords(b))
        r = _poly_mod(F, _poly_mul(F, pa, pb), list(self.modulus))
        return self.from_coords(r + [0] * (self.degree - len(r)))

    def add(self, a, b):
        p = self.p
        out, scale = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * scale
            scale *= p
        return out

    def neg(self, a):
        p = self.p
        out, scale = 0, 1
        while a:
            a, x = divmod(a, p)
            out += ((-x) % p) * scale
            scale *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    @property
    def gen(self) -> int:
        """Code of the class of ``x``, the root of the modulus."""
        if self.degree == 1:
            return self.base.neg(self.modulus[0])
        return self.base.order

    def __repr__(self):
        return f"GF({self.order}; {self.base!r}, mod={list(self.modulus)})"


@dataclass(frozen=True)
class FieldElement:
    field: FiniteField
    code: int

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other.code
        if isinstance(other, int):
            return self.field.element(other % self.field.p).code
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.sub(self.code, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.sub(o, self.code))

    def __mul__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.code, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.div(self.code, o))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.code, n))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.code == self.field.element(other % self.field.p).code
        return isinstance(other, FieldElement) and other.field is self.field and other.code == self.code

    def __hash__(self):
        return hash((id(self.field), self.code))

    def __bool__(self):
        return self.code != 0

    @property
    def coords(self) -> list[int]:
        return self.field.prime_coords(self.code)

    def __repr__(self):
        return f"{self.code}@{self.field.order}"


# ---------------------------------------------------------------------------
# specifications


@dataclass(frozen=True)
class FieldSpec:
    """Serializable description of ``F_q = F_p[x]/(modulus)`` and optionally
    the tower ``F_{q^m} = F_q[y]/(tower_modulus)``."""

    p: int
    e: int
    modulus: tuple[int, ...]
    tower_m: int | None = None
    tower_modulus: tuple[int, ...] | None = None

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def field(self) -> FiniteField:
        return _build_base(self.p, self.e, self.modulus)

    @property
    def tower(self) -> FiniteField:
        if self.tower_m is None:
            raise NoTowerConfigured("no tower configured on this field spec")
        return _build_tower(self.p, self.e, self.modulus, self.tower_modulus)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "e": self.e,
            "modulus": list(self.modulus),
            "tower_m": self.tower_m,
            "tower_modulus": None if self.tower_modulus is None else list(self.tower_modulus),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "FieldSpec":
        spec = field_create(obj["p"], obj["e"], obj.get("modulus"))
        if obj.get("tower_m"):
            spec = tower_create(spec, obj["tower_m"], obj.get("tower_modulus"))
        return spec


@lru_cache(maxsize=None)
def _build_base(p, e, modulus):
    F = PrimeField(p)
    if e == 1:
        return F
    return ExtensionField(F, modulus)


@lru_cache(maxsize=None)
def _build_tower(p, e, modulus, tower_modulus):
    return ExtensionField(_build_base(p, e, modulus), tower_modulus)


def field_create(p: int, e: int = 1, modulus=None) -> FieldSpec:
    """Describe ``F_{p^e}``; searches the smallest irreducible if no modulus."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if e < 1:
        raise ValueError("extension degree must be positive")
    F = PrimeField(p)
    if e == 1:
        mod = (0, 1)
    elif modulus is None:
        mod = tuple(smallest_irreducible(F, e))
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != e + 1 or mod[-1] != 1 or not is_irreducible(F, list(mod)):
            raise ReducibleModulus(f"{list(mod)} is not a monic irreducible of degree {e}")
    return FieldSpec(p, e, mod)


def tower_create(spec: FieldSpec, m: int, modulus=None) -> FieldSpec:
    """Attach ``F_{q^m}`` to ``spec``."""
    Fq = spec.field
    if modulus is None:
        mod = tuple(smallest_irreducible(Fq, m))
    else:
        mod = tuple(int(c) for c in modulus)
        if len(mod) != m + 1 or mod[-1] != 1 or not is_irreducible(Fq, list(mod)):
            raise ReducibleModulus(f"{list(mod)} is not a monic irreducible of degree {m} over F_{Fq.order}")
    return FieldSpec(spec.p, spec.e, spec.modulus, m, mod)


@lru_cache(maxsize=None)
def default_field(q: int) -> FieldSpec:
    p, e = prime_power(q)
    return field_create(p, e)


@lru_cache(maxsize=None)
def default_tower(q: int, m: int) -> FieldSpec:
    return tower_create(default_field(q), m)


def as_field(q_or_field) -> FiniteField:
    """Accept an order, a FieldSpec or a field and return the field."""
    if isinstance(q_or_field, FiniteField):
        return q_or_field
    if isinstance(q_or_field, FieldSpec):
        return q_or_field.field
    return default_field(int(q_or_field)).field


# ---------------------------------------------------------------------------
# functions on elements


def eta(x: FieldElement) -> int:
    """Quadratic character of ``x`` in its own field, with ``eta(0) = 0``."""
    return x.field.eta(x.code)


def trace(x: FieldElement) -> FieldElement:
    """Relative trace down to the immediate base field."""
    F = x.field
    if F.base is None:
        raise NoTowerConfigured("prime field has no relative trace")
    return FieldElement(F.base, F.trace(x.code))


def absolute_trace(x: FieldElement) -> int:
    return x.field.absolute_trace(x.code)


def canonical_character(x: FieldElement) -> complex:
    """``exp(2 pi i Tr(x) / p)``; only for floating point cross-checks."""
    return x.field.character(x.code)


def gauss_sum_numeric(F: FiniteField) -> complex:
    return sum(F.eta(y) * F.character(y) for y in range(1, F.order))

