import numpy as np
import pytest
from hypothesis import given, strategies as st

from symscheme.errors import BudgetExceeded, DimensionMismatch, NotABasis
from symscheme.gf import FieldElement, default_field, default_tower, field_create, tower_create
from symscheme.linalg import fq_rank
from symscheme.scheme import classes, valency
from symscheme.symform import (
    SymForm,
    all_forms,
    classify,
    enumerate_forms,
    gram_matrix,
    n_entries,
    pairing,
    pairing_char,
    random_invertible,
    rank_type,
    representative,
)

F3 = default_field(3).field


def form(q, M):
    return SymForm.from_matrix(default_field(q).field, M)


def test_rank_type_examples():
    assert rank_type(SymForm.zero(F3, 3)) == (0, 1)
    assert rank_type(form(3, np.eye(2, dtype=int))) == (2, 1)
    assert rank_type(form(3, [[1, 0], [0, 2]])) == (2, -1)
    # no nonzero diagonal: needs the off-diagonal pivot
    assert rank_type(form(3, [[0, 1], [1, 0]])) == (2, -1)  # det = -1, a nonsquare mod 3
    assert rank_type(form(5, [[0, 1], [1, 0]])).rank == 2


def test_hyperbolic_plane_type_matches_class_of_minus_one():
    # diag(1,-1) and [[0,1],[1,0]] are congruent
    for q in (3, 5, 7):
        assert rank_type(form(q, [[0, 1], [1, 0]])) == rank_type(form(q, [[1, 0], [0, q - 1]]))


@pytest.mark.parametrize("m", [2, 3])
def test_rank_matches_gaussian_elimination(m):
    X = all_forms(m, F3)
    r, _ = classify(F3, X, m)
    for k in range(len(X)):
        A = SymForm(F3, m, tuple(int(x) for x in X[k]))
        assert int(r[k]) == fq_rank(F3, A.matrix()) == rank_type(A).rank


@pytest.mark.parametrize("q", [3, 5])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_class_sizes_equal_valencies(q, m):
    F = default_field(q).field
    r, t = classify(F, all_forms(m, F), m)
    counts = {}
    for a, b in zip(r.tolist(), t.tolist()):
        key = (a, b if a else 1)
        counts[key] = counts.get(key, 0) + 1
    assert counts == {c: valency(m, q, *c) for c in classes(m)}
    assert sum(counts.values()) == q ** n_entries(m)


def test_two_by_two_over_f3_split():
    r, t = classify(F3, all_forms(2, F3), 2)
    assert ((r == 2) & (t == 1)).sum() == 6
    assert ((r == 2) & (t == -1)).sum() == 12


def test_classify_agrees_with_scalar_routine():
    F = default_field(9).field
    X = all_forms(2, F)
    r, t = classify(F, X, 2)
    for k in range(0, len(X), 37):
        A = SymForm(F, 2, tuple(int(x) for x in X[k]))
        assert rank_type(A) == (int(r[k]), int(t[k]) if r[k] else 1)


@pytest.mark.parametrize("q,m", [(3, 3), (5, 3), (9, 2), (3, 5)])
def test_congruence_invariance(q, m):
    F = default_field(q).field
    rng = np.random.default_rng(7)
    for _ in range(100):
        A = SymForm(F, m, tuple(int(x) for x in rng.integers(0, q, n_entries(m))))
        L = random_invertible(F, m, rng)
        assert rank_type(A.congruent(L)) == rank_type(A)


def test_representatives():
    for q in (3, 5, 9):
        for m in (1, 2, 3):
            for i, tau in classes(m):
                assert rank_type(representative(m, q, i, tau)) == (i, tau)


def test_pairing_examples_and_additivity():
    I2 = form(3, np.eye(2, dtype=int))
    assert pairing(I2, I2) == 2
    rng = np.random.default_rng(1)
    for _ in range(100):
        A, A2, B = (SymForm(F3, 3, tuple(int(x) for x in rng.integers(0, 3, 6))) for _ in range(3))
        assert pairing(A, B) == pairing(B, A)
        assert pairing(SymForm.zero(F3, 3), B) == 0
        assert abs(pairing_char(A + A2, B) - pairing_char(A, B) * pairing_char(A2, B)) < 1e-12
        # tr(AB) from the full matrices
        assert pairing(A, B).code == int(np.trace(A.matrix() @ B.matrix())) % 3
    with pytest.raises(DimensionMismatch):
        pairing(I2, SymForm.zero(F3, 3))


def test_enumerate_forms():
    assert len(list(enumerate_forms(1, 3))) == 3
    forms = list(enumerate_forms(2, 3))
    assert len(forms) == 27 and len(set(forms)) == 27
    assert [f.entries for f in forms] == sorted(f.entries for f in forms)
    assert len(list(enumerate_forms(2, 3, (1, 1)))) == 4 == valency(2, 3, 1, 1)
    with pytest.raises(BudgetExceeded):
        list(enumerate_forms(3, 3, limit=100))
    with pytest.raises(BudgetExceeded):
        all_forms(4, 5, limit=10**6)


def test_gram_matrix_trace_form_on_f9():
    spec = tower_create(field_create(3), 2, [1, 0, 1])
    T = spec.tower
    B = lambda x, y: T.trace(T.mul(x, y))
    G = gram_matrix(B, [1, T.gen], T)
    assert G.matrix().tolist() == [[2, 0], [0, 1]]
    assert gram_matrix(lambda x, y: 0, [1, T.gen], T).entries == (0, 0, 0)
    with pytest.raises(NotABasis):
        gram_matrix(B, [1, 2], T)


@given(st.integers(0, 10**6))
def test_gram_matrix_basis_independent_rank_type(seed):
    T = default_tower(3, 3).tower
    rng = np.random.default_rng(seed)
    lam = int(rng.integers(1, T.order))
    B = lambda x, y: T.trace(T.mul(lam, T.mul(x, y)))
    while True:
        basis = [int(v) for v in rng.integers(1, T.order, 3)]
        if fq_rank(T.base, [T.coords(b) for b in basis]) == 3:
            break
    assert gram_matrix(B, basis, T).rank_type() == gram_matrix(B, [1, 3, 9], T).rank_type()


@given(st.sampled_from([3, 5, 9]), st.integers(1, 4), st.data())
def test_matrix_round_trip(q, m, data):
    F = default_field(q).field
    entries = tuple(data.draw(st.integers(0, q - 1)) for _ in range(n_entries(m)))
    A = SymForm(F, m, entries)
    assert SymForm.from_matrix(F, A.matrix()) == A
    assert (A - A).entries == (0,) * n_entries(m)
