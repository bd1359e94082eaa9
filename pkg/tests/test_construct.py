import numpy as np
import pytest

from symscheme.acceptance import constructed
from symscheme.construct import (
    ConstructionParams,
    additive_dual,
    check_code,
    construct_Y,
    form_of,
    linearized_map,
    polynomial_basis,
    puncture,
    punctured_design_inheritance_check,
    verify_code_parameters,
)
from symscheme.dist import (
    bound_additive,
    dual_distribution,
    inner_distribution,
    is_d_code,
    is_design_eps,
    is_t_design,
    minimum_rank,
)
from symscheme.errors import InvalidParams, NotAdditive, NotAHyperplaneBasis, PreconditionViolated
from symscheme.formset import FormSet
from symscheme.gf import default_tower
from symscheme.linalg import fq_rank
from symscheme.scheme import eta_minus_one
from symscheme.symform import n_entries

MATRIX = [(1, 0, 3, 3), (1, 1, 4, 3), (1, 0, 4, 3), (1, 1, 5, 3), (2, 1, 5, 3), (1, 0, 2, 5)]


def test_params_validation():
    with pytest.raises(InvalidParams):
        ConstructionParams(2, 0, 4, 3)
    with pytest.raises(InvalidParams):
        ConstructionParams(1, 2, 4, 3)
    P = ConstructionParams.parse("1,1,4,3")
    assert (P.d, P.size) == (2, 3**8)


@pytest.mark.parametrize("key", MATRIX)
def test_construction_matrix(key):
    P = ConstructionParams(*key)
    Y, a = constructed(*key)
    assert len(Y) == P.size == bound_additive(P.m, P.q, P.d)
    assert is_d_code(a, P.d) and minimum_rank(a) == P.d
    ad = dual_distribution(a)
    if P.m % 2 == 0:
        assert is_design_eps(ad, 2 * P.t + 1, eta_minus_one(P.q) ** (P.t + 1))
    else:
        assert is_t_design(ad, 2 * P.t + 2)


@pytest.mark.parametrize("key", [(1, 0, 2, 9), (1, 0, 3, 9), (1, 0, 3, 5)])
def test_construction_other_fields(key):
    P = ConstructionParams(*key)
    Y = construct_Y(P)
    rep = verify_code_parameters(Y, P, samples=5)
    assert rep.passed and rep.meets_additive_bound


def test_y0333_ranks(y0333):
    Y, a = y0333
    assert len(Y) == 27
    assert a[3, 1] == a[3, -1] == 13


def test_zero_lambda_gives_zero_form():
    P = ConstructionParams(1, 1, 4, 3)
    T = default_tower(3, 4).tower
    assert form_of(P, [0, 0], T).entries == (0,) * n_entries(4)


def test_verify_code_parameters(y0333, y1143):
    rep = verify_code_parameters(y1143[0], ConstructionParams(1, 1, 4, 3), samples=10)
    assert rep.passed and rep.min_rank == 2 and max(rep.kernel_dims) <= 2
    rep = verify_code_parameters(y0333[0], ConstructionParams(1, 0, 3, 3), samples=10)
    assert rep.passed and rep.min_rank == 3
    bad = FormSet.explicit(2, 3, [[0, 0, 0], [1, 0, 0]])
    assert not check_code(bad, 2)


def test_linearized_map_represents_form():
    P = ConstructionParams(1, 1, 5, 3)
    T = default_tower(3, 5).tower
    rng = np.random.default_rng(0)
    lam = [int(x) for x in rng.integers(1, T.order, 2)]
    from symscheme.construct import bilinear_form

    B, L = bilinear_form(P, lam, T), linearized_map(P, lam, T)
    for _ in range(30):
        x, y = (int(v) for v in rng.integers(0, T.order, 2))
        assert B(x, y) == T.trace(T.mul(y, L(x))) == B(y, x)


def test_basis_independence():
    P = ConstructionParams(1, 1, 4, 3)
    T = default_tower(3, 4).tower
    rng = np.random.default_rng(5)
    while True:
        basis = [int(v) for v in rng.integers(1, T.order, 4)]
        if fq_rank(T.base, [T.coords(b) for b in basis]) == 4:
            break
    a1 = inner_distribution(construct_Y(P))
    a2 = inner_distribution(construct_Y(P, basis=basis))
    assert a1 == a2
    lam = [int(v) for v in rng.integers(0, T.order, 2)]
    assert form_of(P, lam, T, basis).rank_type() == form_of(P, lam, T, polynomial_basis(T)).rank_type()


def test_puncture_examples(y1143):
    Y, _ = constructed(1, 1, 5, 3)
    Z = puncture(Y)
    assert Z.m == 4 and len(Z) == 3**10 == 3 ** n_entries(4)
    assert len(puncture(FormSet.zero(3, 3))) == 1
    with pytest.raises(NotAHyperplaneBasis):
        puncture(y1143[0], np.zeros((3, 4), dtype=int))


def test_puncture_y1163():
    Y, _ = constructed(1, 1, 6, 3)
    Z = puncture(Y)
    b = inner_distribution(Z)
    assert len(Z) == 3**12 == bound_additive(5, 3, 2)
    assert minimum_rank(b) == 2


def test_puncture_arbitrary_hyperplane(y1143):
    Y, _ = y1143
    W = np.array([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 2], [0, 0, 0, 1]])[:3]
    Z = puncture(Y, W)
    assert Z.m == 3


def test_additive_dual_sizes_and_involution(y1143):
    Y, a = y1143
    D = additive_dual(Y)
    assert len(D) == 9 and len(Y) * len(D) == 3 ** n_entries(4)
    assert inner_distribution(D).scaled(len(Y)) == dual_distribution(a)
    assert additive_dual(D).same_set(Y)
    assert len(additive_dual(FormSet.zero(2, 3))) == 27
    assert len(additive_dual(FormSet.full(2, 3))) == 1
    with pytest.raises(NotAdditive):
        additive_dual(FormSet.explicit(1, 3, [[0], [1]]))


@pytest.mark.parametrize("key", [(1, 0, 3, 3), (1, 0, 4, 3), (1, 1, 5, 3), (1, 0, 2, 5), (1, 0, 2, 9)])
def test_double_dual(key):
    Y = construct_Y(ConstructionParams(*key))
    assert additive_dual(additive_dual(Y)).same_set(Y)


def test_design_inheritance():
    for key in [(1, 1, 6, 3), (1, 0, 5, 3)]:
        Y, _ = constructed(*key)
        assert punctured_design_inheritance_check(Y, puncture(Y))
    Y, _ = constructed(1, 1, 4, 3)
    with pytest.raises(PreconditionViolated):
        punctured_design_inheritance_check(Y, puncture(Y))
