import json

import numpy as np
import pytest

from symscheme.errors import NotAdditive
from symscheme.formset import FormSet, from_prime_coords, to_prime_coords
from symscheme.gf import default_field
from symscheme.symform import SymForm, n_entries


def test_additive_reduces_to_basis():
    Y = FormSet.additive(2, 3, [[1, 0, 0], [2, 0, 0], [0, 1, 1], [1, 1, 1]])
    assert Y.rank_over_prime_field == 2 and len(Y) == 9
    assert Y.contains([2, 2, 2]) and not Y.contains([0, 0, 1])
    elems = {tuple(r) for r in Y.elements().tolist()}
    assert len(elems) == 9 and (0, 0, 0) in elems


def test_explicit_duplicates_rejected():
    with pytest.raises(ValueError):
        FormSet.explicit(1, 3, [[1], [1]])
    with pytest.raises(ValueError):
        FormSet.explicit(1, 3, [[3]])


def test_zero_and_full():
    assert len(FormSet.zero(3, 3)) == 1
    full = FormSet.full(2, 9)
    assert len(full) == 9**3
    assert full.rank_over_prime_field == 6


def test_require_additive():
    Y = FormSet.explicit(1, 3, [[0], [1]])
    with pytest.raises(NotAdditive):
        Y.require_additive()


@pytest.mark.parametrize("q", [3, 9, 25])
def test_prime_coordinates_round_trip(q):
    F = default_field(q).field
    rng = np.random.default_rng(q)
    packed = rng.integers(0, q, size=(7, n_entries(3)))
    assert np.array_equal(from_prime_coords(F, to_prime_coords(F, packed), 3), packed)
    assert to_prime_coords(F, packed[:0]).shape == (0, n_entries(3) * F.absolute_degree)


def test_json_round_trip():
    Y = FormSet.additive(2, 9, [[1, 0, 3], [0, 4, 0]])
    Z = FormSet.from_json(json.loads(Y.dumps()))
    assert Z.is_additive and Z.same_set(Y)
    E = FormSet.explicit(2, 5, [[0, 0, 0], [1, 2, 3]])
    E2 = FormSet.from_json(E.to_json())
    assert not E2.is_additive and E2.same_set(E)


def test_symforms():
    Y = FormSet.additive(1, 5, [[1]])
    assert sorted(f.entries for f in Y.symforms()) == [(k,) for k in range(5)]
    assert all(isinstance(f, SymForm) for f in Y.symforms())
