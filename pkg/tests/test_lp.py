from fractions import Fraction

import pytest

from symscheme.construct import ConstructionParams
from symscheme.dist import bound_even_nonadditive, dual_distribution, is_nonnegative
from symscheme.errors import InvalidParams, LimitExceeded
from symscheme.lp import LPSolution, lp_bound, lp_certificate_check, lp_instance, simplex
from symscheme.symform import n_entries


def test_small_values():
    assert lp_bound(2, 3, 1).value == 27
    s = lp_bound(2, 3, 2)
    assert s.value == 9 and lp_certificate_check(s.instance, s)
    s = lp_bound(3, 3, 3)
    assert s.value >= 27


@pytest.mark.parametrize("m,q", [(1, 3), (2, 3), (3, 3), (4, 3), (2, 5), (3, 5), (2, 9)])
def test_d1_is_whole_space(m, q):
    assert lp_bound(m, q, 1).value == q ** n_entries(m)


@pytest.mark.parametrize("m", [2, 4])
@pytest.mark.parametrize("q", [3, 5])
def test_even_m_matches_nonadditive_bound(m, q):
    # recorded per (m, q, d): the even-m closed form is the LP optimum here
    for delta in range(1, m // 2 + 1):
        s = lp_bound(m, q, 2 * delta)
        assert s.value == bound_even_nonadditive(m, q, delta), (m, q, delta)


@pytest.mark.parametrize("key", [(1, 0, 3, 3), (1, 1, 4, 3), (1, 0, 4, 3), (1, 1, 5, 3), (2, 1, 5, 3), (1, 0, 2, 5)])
def test_constructions_below_lp(key):
    P = ConstructionParams(*key)
    assert P.size <= lp_bound(P.m, P.q, P.d).value


@pytest.mark.parametrize("m,q,d", [(2, 3, 2), (3, 3, 2), (4, 3, 3), (3, 5, 2), (4, 5, 2)])
def test_optimum_is_a_valid_distribution(m, q, d):
    s = lp_bound(m, q, d)
    a = s.distribution
    assert a.total() == s.value
    assert all(a[c] == 0 for c in a.labels if 0 < c[0] < d)
    ad = dual_distribution(a)  # raises if non-real or negative
    assert all(is_nonnegative(v) for v in ad.vector())
    assert lp_certificate_check(s.instance, s)


def test_certificate_rejects_perturbations():
    s = lp_bound(4, 3, 2)
    assert lp_certificate_check(s.instance, s)
    k = next(i for i, y in enumerate(s.duals) if y > 0)
    bad = list(s.duals)
    bad[k] += Fraction(1, 3)
    forged = LPSolution(s.value, s.x, bad, s.distribution, s.instance)
    assert not lp_certificate_check(s.instance, forged)
    zero = LPSolution(s.value, s.x, [Fraction(0)] * len(s.duals), s.distribution, s.instance)
    assert not lp_certificate_check(s.instance, zero)
    unit = LPSolution(Fraction(1), [Fraction(0)] * len(s.x), s.duals, s.distribution, s.instance)
    assert not lp_certificate_check(s.instance, unit)


def test_simplex_textbook():
    # max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18  ->  36 at (2, 6)
    x, y, v, _ = simplex([[1, 0], [0, 2], [3, 2]], [4, 12, 18], [3, 5])
    assert v == 36 and x == [2, 6]
    assert sum(b * yi for b, yi in zip([4, 12, 18], y)) == 36


def test_simplex_degenerate_cycling_example():
    # Beale's example cycles under the largest-coefficient rule
    A = [
        [Fraction(1, 4), -60, Fraction(-1, 25), 9],
        [Fraction(1, 2), -90, Fraction(-1, 50), 3],
        [0, 0, 1, 0],
    ]
    x, _, v, _ = simplex(A, [0, 0, 1], [Fraction(3, 4), -150, Fraction(1, 50), -6])
    assert v == Fraction(1, 20)


def test_gamma_rows_only_for_irrational_gamma():
    kinds = {k for _, k in lp_instance(3, 3, 1).row_labels}
    assert "gamma<=0" in kinds
    kinds = {k for _, k in lp_instance(3, 9, 1).row_labels}
    assert kinds == {"real>=0"}


def test_errors():
    with pytest.raises(InvalidParams):
        lp_bound(3, 3, 4)
    with pytest.raises(LimitExceeded):
        lp_bound(40, 3, 2)
