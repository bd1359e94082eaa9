from fractions import Fraction

import numpy as np
import pytest

from symscheme.acceptance import constructed
from symscheme.construct import ConstructionParams, puncture
from symscheme.dist import Distribution, inner_distribution
from symscheme.errors import InvalidParams
from symscheme.formset import FormSet
from symscheme.gf import default_field, default_tower
from symscheme.hamming import (
    Enumerator,
    all_vectors,
    brute_force_enumerator,
    code_C1,
    code_C2,
    coset_trinomial,
    count_solutions,
    cyclic_check,
    cyclic_zeros,
    cyclotomic_closure,
    enumerator_C1_formula,
    enumerator_C2_formula,
    is_cyclic,
    min_distance_formulas,
    n_of_h,
    quad_values,
    quadratic_values,
    weight_of_class,
)
from symscheme.scheme import classes
from symscheme.symform import SymForm, all_forms, classify

F3 = default_field(3).field


def test_n_of_h_examples():
    assert n_of_h(1, 3, 1, 1, 0) == 1
    assert n_of_h(1, 3, 1, 1, 1) == 2
    for m in (1, 2, 3):
        for i, tau in classes(m):
            assert sum(n_of_h(m, 3, i, tau, h) for h in range(3)) == 3**m


@pytest.mark.parametrize("q,m", [(3, 1), (3, 2), (3, 3), (5, 2), (9, 2)])
def test_n_of_h_direct(q, m):
    F = default_field(q).field
    X = all_forms(m, F)
    r, t = classify(F, X, m)
    vals = quadratic_values(F, X, all_vectors(F, m))
    for k in range(len(X)):
        c = (int(r[k]), int(t[k]) if r[k] else 1)
        for h in range(q):
            assert int((vals[k] == h).sum()) == n_of_h(m, q, *c, h)


def test_count_solutions():
    B = SymForm.from_matrix(F3, [[1]])
    assert [count_solutions(B, h) for h in range(3)] == [1, 2, 0]


def test_quad_values_examples():
    spec = default_tower(3, 1)
    B = SymForm.from_matrix(F3, [[1]])
    v = quad_values(B, spec)
    assert sorted(v.tolist()) == [1, 1]
    assert not quad_values(SymForm.zero(F3, 2), default_tower(3, 2)).any()


@pytest.mark.parametrize("m", [2, 3])
def test_codeword_weights_from_classes(m):
    spec = default_tower(3, m)
    X = all_forms(m, F3)
    r, t = classify(F3, X, m)
    for k in range(len(X)):
        B = SymForm(F3, m, tuple(int(x) for x in X[k]))
        c = (int(r[k]), int(t[k]) if r[k] else 1)
        wt = int(np.count_nonzero(quad_values(B, spec)))
        assert wt == (3**m - 1) - (n_of_h(m, 3, *c, 0) - 1) == weight_of_class(m, 3, *c)


def test_coset_trinomials():
    T = coset_trinomial(3, 3, 0, 1).enumerator()
    assert T == Enumerator({0: 1, 18: 26})
    assert coset_trinomial(1, 3, 1, 1).enumerator() == Enumerator({1: 2, 2: 1})
    for q in (3, 5):
        for m in range(1, 5):
            for i, tau in classes(m):
                ct = coset_trinomial(m, q, i, tau)
                assert all(c >= 0 for _, c in ct.terms)
                assert ct.enumerator().total() == q**m


def test_c1_formula_examples(y1143):
    e = enumerator_C1_formula(Distribution(1, 3, {(0, 1): 1}))
    assert e == Enumerator({0: 1})
    e = enumerator_C1_formula(y1143[1])
    assert e.min_nonzero_weight() == 36
    assert enumerator_C2_formula(y1143[1]).min_nonzero_weight() == 36


@pytest.mark.parametrize("key", [(1, 0, 3, 3), (1, 1, 4, 3), (1, 0, 4, 3), (1, 0, 2, 5), (1, 1, 5, 3)])
def test_c1_formula_vs_brute_force(key):
    Y, a = constructed(*key)
    assert brute_force_enumerator(code_C1(Y)) == enumerator_C1_formula(a)


def test_c1_full_space():
    Y = FormSet.full(2, 3)
    assert brute_force_enumerator(code_C1(Y)) == enumerator_C1_formula(inner_distribution(Y))


@pytest.mark.parametrize("key", [(1, 0, 3, 3), (1, 0, 2, 5), (1, 0, 4, 3)])
def test_c2_formula_vs_brute_force(key):
    Y, a = constructed(*key)
    C = code_C2(Y)
    assert C.shape[0] == len(Y) * Y.q**Y.m
    assert brute_force_enumerator(C) == enumerator_C2_formula(a)


def test_c2_y1143_full():
    Y, a = constructed(1, 1, 4, 3)
    assert brute_force_enumerator(code_C2(Y)) == enumerator_C2_formula(a)


def test_distance_mode_nonadditive():
    Y = FormSet.explicit(2, 3, all_forms(2, 3)[[0, 5, 13, 20]])
    a = inner_distribution(Y)
    assert brute_force_enumerator(code_C1(Y), mode="distance") == enumerator_C1_formula(a)
    assert enumerator_C1_formula(a).total() == len(Y)


def test_brute_force_trivial():
    assert brute_force_enumerator(np.zeros((1, 8), dtype=np.int64)) == Enumerator({0: 1})


def test_enumerator_json():
    e = Enumerator({0: 1, 15: Fraction(312), 18: 260})
    assert Enumerator.from_json(e.to_json()) == e
    assert e.to_json()[0] == [0, "1"]


def test_cyclic_zeros_examples():
    assert cyclic_zeros(ConstructionParams(1, 1, 4, 3)) == [78, 76]
    assert cyclic_zeros(ConstructionParams(1, 0, 3, 3)) == [24]
    z1 = set(cyclic_zeros(ConstructionParams(1, 1, 4, 3), "C1"))
    z2 = set(cyclic_zeros(ConstructionParams(1, 1, 4, 3), "C2"))
    assert z2 >= z1 | {79}


@pytest.mark.parametrize("key", [(1, 0, 3, 3), (1, 1, 4, 3), (2, 1, 5, 3), (1, 0, 2, 5)])
def test_spectrum_supported_on_listed_exponents(key):
    P = ConstructionParams(*key)
    Y, _ = constructed(*key)
    C1 = code_C1(Y)
    res = cyclic_check(C1[:12], P, "C1")
    assert res["ok"]
    assert set(res["support"]) <= cyclotomic_closure(cyclic_zeros(P, "C1"), P.q, P.m)
    assert is_cyclic(C1)


def test_c2_cyclic():
    P = ConstructionParams(1, 0, 3, 3)
    Y, _ = constructed(1, 0, 3, 3)
    C2 = code_C2(Y)
    assert is_cyclic(C2) and cyclic_check(C2[::50], P, "C2")["ok"]


@pytest.mark.parametrize(
    "key,which",
    [((1, 0, 3, 3), "C1"), ((1, 0, 3, 3), "C2"), ((1, 1, 4, 3), "C1"), ((1, 1, 4, 3), "C2"),
     ((1, 0, 4, 3), "C1"), ((1, 0, 4, 3), "C2"), ((1, 1, 5, 3), "C1"), ((1, 1, 5, 3), "C2"),
     ((1, 0, 2, 5), "C1"), ((1, 0, 2, 5), "C2")],
)
def test_min_distance_formulas(key, which):
    P = ConstructionParams(*key)
    _, a = constructed(*key)
    e = enumerator_C1_formula(a) if which == "C1" else enumerator_C2_formula(a)
    assert e.min_nonzero_weight() == min_distance_formulas(P, which)


def test_min_distance_examples():
    assert min_distance_formulas(ConstructionParams(1, 1, 4, 3), "C1") == 36
    assert min_distance_formulas(ConstructionParams(1, 0, 3, 3), "C2") == 15


@pytest.mark.parametrize("key", [(1, 0, 4, 3), (1, 1, 5, 3), (1, 0, 5, 3), (1, 0, 3, 3)])
def test_starred_min_distances(key):
    P = ConstructionParams(*key)
    Y, _ = constructed(*key)
    b = inner_distribution(puncture(Y))
    assert enumerator_C1_formula(b).min_nonzero_weight() == min_distance_formulas(P, "C1*")
    assert enumerator_C2_formula(b).min_nonzero_weight() == min_distance_formulas(P, "C2*")


def test_starred_needs_injective_puncturing():
    with pytest.raises(InvalidParams):
        min_distance_formulas(ConstructionParams(1, 1, 4, 3), "C1*")
