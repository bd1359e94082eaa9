"""Sets of symmetric forms: explicit lists or F_p-spans of generators."""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import DimensionMismatch, NotAdditive
from .gf import FieldSpec, FiniteField, as_field, default_field
from .linalg import check_budget, fp_basis, fp_rank, fp_span
from .symform import SymForm, n_entries


def to_prime_coords(F: FiniteField, packed) -> np.ndarray:
    """Packed forms ``(N, D)`` over F_q -> vectors ``(N, D*e)`` over F_p."""
    packed = np.asarray(packed, dtype=np.int64)
    digits = F.digit_array[packed]
    return digits.reshape(packed.shape[0], packed.shape[1] * F.absolute_degree)


def from_prime_coords(F: FiniteField, vecs, m: int) -> np.ndarray:
    vecs = np.asarray(vecs, dtype=np.int64)
    e = F.absolute_degree
    powers = F.p ** np.arange(e, dtype=np.int64)
    return vecs.reshape(vecs.shape[0], n_entries(m), e) @ powers


@dataclass
class FormSet:
    """Forms on ``F_q^m``.

    Additive sets keep an F_p-basis in ``generators`` (packed F_q codes) and
    are enumerated on demand; other sets keep the explicit ``forms`` array.
    """

    m: int
    field: FiniteField
    forms: np.ndarray | None = None
    generators: np.ndarray | None = None
    spec: FieldSpec | None = dc_field(default=None, repr=False)

    # -- constructors ------------------------------------------------------

    @classmethod
    def explicit(cls, m: int, q, forms) -> "FormSet":
        F = as_field(q)
        rows = []
        for A in forms:
            rows.append(list(A.entries) if isinstance(A, SymForm) else [int(x) for x in A])
        arr = np.array(rows, dtype=np.int64).reshape(len(rows), n_entries(m))
        if arr.size and (arr.min() < 0 or arr.max() >= F.order):
            raise ValueError("form entries are not field element codes")
        if len({tuple(r) for r in arr.tolist()}) != len(arr):
            raise ValueError("explicit form lists must be duplicate-free")
        return cls(m, F, forms=arr, spec=_spec_of(q, F))

    @classmethod
    def additive(cls, m: int, q, generators) -> "FormSet":
        F = as_field(q)
        gens = np.array(
            [list(g.entries) if isinstance(g, SymForm) else [int(x) for x in g] for g in generators],
            dtype=np.int64,
        ).reshape(-1, n_entries(m))
        basis = fp_basis(to_prime_coords(F, gens), F.p)
        return cls(m, F, generators=from_prime_coords(F, basis, m), spec=_spec_of(q, F))

    @classmethod
    def zero(cls, m: int, q) -> "FormSet":
        return cls.additive(m, q, [])

    @classmethod
    def full(cls, m: int, q) -> "FormSet":
        F = as_field(q)
        D, e = n_entries(m), F.absolute_degree
        units = np.eye(D * e, dtype=np.int64)
        return cls.additive(m, F, from_prime_coords(F, units, m))

    # -- queries -----------------------------------------------------------

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def is_additive(self) -> bool:
        return self.generators is not None

    @property
    def rank_over_prime_field(self) -> int:
        self.require_additive()
        return self.generators.shape[0]

    def require_additive(self):
        if not self.is_additive:
            raise NotAdditive("operation needs an additive set given by generators")

    def __len__(self) -> int:
        if self.is_additive:
            return self.field.p ** self.generators.shape[0]
        return self.forms.shape[0]

    size = property(__len__)

    def elements(self, limit: int | None = None) -> np.ndarray:
        """All forms as a packed array (span in lexicographic coefficient order)."""
        if not self.is_additive:
            return self.forms
        F = self.field
        check_budget(len(self), "form-set enumeration", limit)
        span = fp_span(to_prime_coords(F, self.generators), F.p, limit)
        return from_prime_coords(F, span, self.m)

    def symforms(self, limit: int | None = None) -> list[SymForm]:
        return [SymForm(self.field, self.m, tuple(int(x) for x in row)) for row in self.elements(limit)]

    def contains(self, form) -> bool:
        entries = np.array(list(form.entries) if isinstance(form, SymForm) else form, dtype=np.int64)
        if self.is_additive:
            F = self.field
            G = to_prime_coords(F, self.generators)
            v = to_prime_coords(F, entries[None, :])
            return fp_rank(np.vstack([G, v]), F.p) == G.shape[0]
        return bool((self.forms == entries[None, :]).all(axis=1).any())

    def same_set(self, other: "FormSet") -> bool:
        if self.m != other.m or self.field is not other.field or len(self) != len(other):
            return False
        if self.is_additive and other.is_additive:
            return all(self.contains(g) for g in other.generators)
        a = {tuple(r) for r in self.elements().tolist()}
        b = {tuple(r) for r in other.elements().tolist()}
        return a == b

    # -- serialization -----------------------------------------------------

    def to_json(self, include_forms: bool = True, limit: int | None = None) -> dict:
        spec = self.spec or _spec_of(self.q, self.field)
        if spec is None:
            raise ValueError("field of this set has no serializable spec")
        out = {"m": self.m, "q": self.q, "field": spec.to_json()}
        if self.is_additive:
            out["generators"] = self.generators.tolist()
        if include_forms:
            out["forms"] = self.elements(limit).tolist()
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "FormSet":
        spec = FieldSpec.from_json(obj["field"]) if "field" in obj else default_field(obj["q"])
        F = spec.field
        if F.order != obj["q"]:
            raise DimensionMismatch("field spec does not match q")
        if obj.get("generators") is not None:
            fs = cls.additive(obj["m"], F, obj["generators"])
        else:
            fs = cls.explicit(obj["m"], F, obj["forms"])
        fs.spec = spec
        return fs

    def dumps(self, **kw) -> str:
        return json.dumps(self.to_json(**kw))


def _spec_of(q, F: FiniteField) -> FieldSpec | None:
    if isinstance(q, FieldSpec):
        return q
    spec = default_field(F.order)
    return spec if spec.field is F else None

