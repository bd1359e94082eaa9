import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from symscheme.scheme import (
    GaussInt,
    QNumberTable,
    classes,
    gauss_ring,
    krawtchouk,
    krawtchouk_c,
    p_numbers,
    pq_orthogonality_check,
    q_numbers_charsum_oracle,
    q_numbers_explicit,
    q_numbers_recurrence,
    qbinom,
    valency,
)
from symscheme.symform import n_entries


def test_qbinom_examples():
    assert qbinom(5, 0, 3) == 1
    assert qbinom(2, 1, 3) == 10
    assert qbinom(3, -1, 3) == 0
    assert qbinom(2, 3, 3) == 0


@pytest.mark.parametrize("q", [3, 5])
def test_qbinom_pascal(q):
    for n in range(1, 9):
        for k in range(1, 9):
            assert qbinom(n, k, q) == q ** (2 * k) * qbinom(n - 1, k, q) + qbinom(n - 1, k - 1, q)


def test_krawtchouk_examples():
    assert krawtchouk(2, 1, 0, 3) == 2
    for m in range(0, 7):
        for s in range(m // 2 + 1):
            assert krawtchouk(m, 0, s, 3) == 1
    assert krawtchouk(1, 1, 0, 3) == 0
    assert krawtchouk(4, -1, 0, 3) == 0


@pytest.mark.parametrize("q", [3, 5])
@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_krawtchouk_defining_equations(m, q):
    n, c = m // 2, krawtchouk_c(m, q)
    for s in range(n + 1):
        for j in range(n + 1):
            lhs = sum(qbinom(n - r, n - j, q) * krawtchouk(m, r, s, q) for r in range(j + 1))
            assert lhs == qbinom(n - s, j, q) * c**j


def test_valency_examples():
    assert valency(2, 3, 0, 1) == 1 and valency(2, 3, 0, -1) == 0
    assert valency(2, 3, 2, 1) == 6 and valency(2, 3, 2, -1) == 12


@pytest.mark.parametrize("q", [3, 5])
@pytest.mark.parametrize("m", range(1, 6))
def test_valencies_partition(m, q):
    assert sum(valency(m, q, *c) for c in classes(m)) == q ** n_entries(m)


# -- Gauss ring ---------------------------------------------------------------

RINGS = [3, 5, 7, 9, 11, 13]
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@given(st.sampled_from(RINGS), rationals, rationals, rationals, rationals, rationals, rationals)
def test_gauss_ring_axioms(q, a, b, c, d, e, f):
    R = gauss_ring(q)
    x, y, z = R(a, b), R(c, d), R(e, f)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == R(0)


@pytest.mark.parametrize("q", RINGS)
def test_gamma_squared(q):
    R = gauss_ring(q)
    eta = 1 if q % 4 == 1 else -1
    assert R.gamma * R.gamma == eta * q
    assert abs(R.numeric_gamma() ** 2 - eta * q) < 1e-9


def test_gauss_int_conj_and_json():
    R = gauss_ring(3)
    x = R(Fraction(1, 2), Fraction(-3, 4))
    assert x.conj() == R(Fraction(1, 2), Fraction(3, 4))
    assert abs(x.to_complex() - (0.5 - 0.75 * R.numeric_gamma())) < 1e-12
    assert GaussInt.from_json(x.to_json(), R) == x
    assert set(x.to_json()) == {"a_num", "a_den", "b_num", "b_den"}
    assert all(isinstance(v, str) for v in x.to_json().values())


def test_square_q_folds_gamma():
    R = gauss_ring(9)
    assert R.gamma.is_rational
    assert R.gamma == 3 or R.gamma == -3
    assert abs(R.gamma.to_complex() - R.numeric_gamma()) < 1e-9


# -- Q-numbers ----------------------------------------------------------------

ROUTE_CASES = [(1, 3), (2, 3), (3, 3), (4, 3), (1, 5), (2, 5), (3, 5), (1, 7), (2, 7), (1, 9), (2, 9)]


@pytest.mark.parametrize("m,q", ROUTE_CASES)
def test_explicit_equals_recurrence(m, q):
    assert q_numbers_explicit(m, q) == q_numbers_recurrence(m, q)


@pytest.mark.parametrize("m,q", [(1, 3), (2, 3), (3, 3), (1, 5), (2, 5), (1, 7), (2, 9)])
def test_explicit_matches_character_sums(m, q):
    oracle, spread = q_numbers_charsum_oracle(m, q, n_reps=3, return_deviation=True)
    assert spread < 1e-6
    assert np.abs(q_numbers_explicit(m, q).numeric() - oracle).max() < 1e-6


def test_single_character_value():
    T = q_numbers_explicit(1, 3)
    R = T.ring
    assert T[(1, 1), (1, 1)] == R(Fraction(-1, 2), Fraction(1, 2))
    for eps in (1, -1):
        for tau in (1, -1):
            assert T[(1, eps), (1, tau)] == R(Fraction(-1, 2), Fraction(eps * tau, 2))
    oracle = q_numbers_charsum_oracle(1, 3)
    assert abs(oracle[1, 1] - complex(-0.5, 0.8660254037844386)) < 1e-9
    assert np.allclose(oracle[0], 1.0)


@pytest.mark.parametrize("m,q", [(2, 3), (4, 3), (3, 5)])
def test_boundary_rows(m, q):
    T = q_numbers_explicit(m, q)
    for c in classes(m):
        assert T[(0, 1), c] == 1
        assert T[c, (0, 1)] == valency(m, q, *c)


@pytest.mark.parametrize("m,q", [(1, 3), (2, 3), (3, 3), (4, 3), (1, 5), (2, 5), (3, 5), (4, 5), (2, 9)])
def test_orthogonality(m, q):
    assert pq_orthogonality_check(q_numbers_explicit(m, q))


def test_orthogonality_detects_perturbation():
    T = q_numbers_explicit(2, 3)
    entries = {r: dict(row) for r, row in T.entries.items()}
    entries[(1, 1)][(2, -1)] = entries[(1, 1)][(2, -1)] + 1
    assert not pq_orthogonality_check(QNumberTable(2, 3, entries))


def test_p_numbers_are_conjugates():
    T = q_numbers_explicit(3, 3)
    P = p_numbers(T)
    for r in T.labels:
        for c in T.labels:
            assert P[r][c].conj() == T[r, c]


@pytest.mark.parametrize("m,q", [(2, 3), (3, 5)])
def test_table_json_round_trip(m, q):
    T = q_numbers_explicit(m, q)
    obj = json.loads(T.dumps())
    assert obj["rows"] == [list(c) for c in classes(m)]
    assert QNumberTable.from_json(obj) == T
    assert r"\begin{tabular}" in T.to_tex()
