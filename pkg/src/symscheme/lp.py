"""Exact Delsarte linear-programming bound for d-codes in X(m, q).

Maximize ``sum a_{i,tau}`` over ``a_{0,1} = 1``, ``a_{i,tau} >= 0`` for
``i >= d``, ``a_{i,tau} = 0`` for ``0 < i < d`` and nonnegative dual
distribution.  Each dual entry is split as ``R + G gamma``; the LP imposes
``R >= 0`` and ``G = 0``.  Only the odd-rank/odd-rank Q-numbers carry a
``gamma`` part, and it is antisymmetric under exchanging the two odd-rank
types, so averaging any feasible point with its mirror image keeps the
objective and kills ``G``: the optimum is that of the plain Delsarte LP.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .dist import Distribution, q_table
from .errors import Infeasible, InvalidParams, LimitExceeded
from .scheme import classes

MAX_M = 16


@dataclass
class LPInstance:
    """``max constant + c.x`` subject to ``A x <= b``, ``x >= 0``."""

    m: int
    q: int
    d: int
    variables: list
    A: list
    b: list
    c: list
    constant: Fraction
    row_labels: list


@dataclass
class LPSolution:
    value: Fraction
    x: list
    duals: list
    distribution: Distribution
    instance: LPInstance = dc_field(repr=False)
    pivots: int = 0


def lp_instance(m: int, q: int, d: int) -> LPInstance:
    if m < 1 or not 1 <= d <= m:
        raise InvalidParams("need 1 <= d <= m")
    if m > MAX_M:
        raise LimitExceeded(f"m={m} exceeds the LP size limit {MAX_M}")
    table = q_table(m, q)
    variables = [c for c in classes(m) if c[0] >= d]
    A, b, labels = [], [], []
    for row in table.labels:
        if row == (0, 1):
            continue
        entries = [table[row, v] for v in variables]
        const = table[row, (0, 1)]
        # a'_{row} = const + sum Q x ;  -Re(Q).x <= Re(const)
        A.append([-e.a for e in entries])
        b.append(const.a)
        labels.append((row, "real>=0"))
        if any(e.b for e in entries) or const.b:
            if const.b:
                raise AssertionError("valency column has a gamma part")  # pragma: no cover
            A.append([e.b for e in entries])
            b.append(Fraction(0))
            labels.append((row, "gamma<=0"))
            A.append([-e.b for e in entries])
            b.append(Fraction(0))
            labels.append((row, "gamma>=0"))
    c = [Fraction(1)] * len(variables)
    return LPInstance(m, q, d, variables, A, b, c, Fraction(1), labels)


def simplex(A, b, c, max_pivots: int = 100000):
    """Exact tableau simplex with Bland's rule for ``max c.x, Ax <= b, x >= 0, b >= 0``.

    Returns ``(x, y, value, pivots)`` with ``y`` the optimal dual multipliers.
    """
    nr, nv = len(A), len(c)
    if any(bi < 0 for bi in b):
        raise Infeasible("origin infeasible; phase one not implemented")
    T = [[Fraction(v) for v in A[i]] + [Fraction(int(i == j)) for j in range(nr)] + [Fraction(b[i])] for i in range(nr)]
    # objective row holds reduced costs c_j - z_j
    obj = [Fraction(v) for v in c] + [Fraction(0)] * nr + [Fraction(0)]
    basis = [nv + i for i in range(nr)]
    pivots = 0
    while True:
        enter = next((j for j in range(nv + nr) if obj[j] > 0), None)
        if enter is None:
            break
        best, leave = None, None
        for i in range(nr):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise Infeasible("LP is unbounded")
        piv = T[leave][enter]
        T[leave] = [v / piv for v in T[leave]]
        for i in range(nr):
            if i != leave and T[i][enter]:
                f = T[i][enter]
                T[i] = [u - f * w for u, w in zip(T[i], T[leave])]
        if obj[enter]:
            f = obj[enter]
            obj = [u - f * w for u, w in zip(obj, T[leave])]
        basis[leave] = enter
        pivots += 1
        if pivots > max_pivots:
            raise LimitExceeded("pivot limit reached")
    x = [Fraction(0)] * nv
    for i, j in enumerate(basis):
        if j < nv:
            x[j] = T[i][-1]
    y = [-obj[nv + i] for i in range(nr)]
    value = -obj[-1]
    return x, y, value, pivots


def lp_bound(m: int, q: int, d: int) -> LPSolution:
    """Exact optimum of the Delsarte LP for d-codes in X(m, q)."""
    inst = lp_instance(m, q, d)
    x, y, value, pivots = simplex(inst.A, inst.b, inst.c)
    counts = {(0, 1): Fraction(1)}
    counts.update(dict(zip(inst.variables, x)))
    dist = Distribution(m, q, counts)
    return LPSolution(inst.constant + value, x, y, dist, inst, pivots)


def lp_certificate_check(instance: LPInstance, solution: LPSolution) -> bool:
    """Exact primal feasibility, dual feasibility and zero duality gap."""
    A, b, c = instance.A, instance.b, instance.c
    x, y = solution.x, solution.duals
    if len(x) != len(c) or len(y) != len(b):
        return False
    if any(v < 0 for v in x) or any(v < 0 for v in y):
        return False
    for row, bi in zip(A, b):
        if sum((a * v for a, v in zip(row, x)), Fraction(0)) > bi:
            return False
    for j, cj in enumerate(c):
        if sum((A[i][j] * y[i] for i in range(len(b))), Fraction(0)) < cj:
            return False
    primal = sum((cj * v for cj, v in zip(c, x)), Fraction(0))
    dual = sum((bi * v for bi, v in zip(b, y)), Fraction(0))
    return primal == dual and solution.value == instance.constant + primal
