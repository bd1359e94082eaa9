"""Acceptance checks, runnable from the test suite or ``symscheme verify``.

Every check returns a :class:`CheckResult`; ``run_checks`` filters by tag.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .construct import ConstructionParams, additive_dual, construct_Y, puncture
from .dist import (
    Distribution,
    bound_additive,
    bound_even_nonadditive,
    closed_form_even,
    closed_form_odd,
    dual_distribution,
    inner_distribution,
    is_d_code,
    is_design_eps,
    is_t_design,
    minimum_rank,
)
from .gf import as_field
from .hamming import (
    all_vectors,
    brute_force_enumerator,
    code_C1,
    code_C2,
    count_solutions,
    enumerator_C1_formula,
    enumerator_C2_formula,
    min_distance_formulas,
    n_of_h,
    quadratic_values,
)
from .lp import lp_bound, lp_certificate_check
from .scheme import (
    classes,
    eta_minus_one,
    pq_orthogonality_check,
    q_numbers_charsum_oracle,
    q_numbers_explicit,
    q_numbers_recurrence,
    valency,
)
from .symform import SymForm, all_forms, classify, n_entries

QN_CASES = [(1, 3), (2, 3), (3, 3), (4, 3), (1, 5), (2, 5)]
CONSTRUCTION_MATRIX = [(1, 0, 3, 3), (1, 1, 4, 3), (1, 0, 4, 3), (1, 1, 5, 3), (2, 1, 5, 3), (1, 0, 2, 5)]
SUBSPACE_2CODE_DISTS = [
    [1, 0, 0, 100, 160, 1080, 1080, 2340, 1800],
    [1, 0, 0, 100, 214, 972, 972, 2340, 1962],
    [1, 0, 0, 118, 196, 972, 972, 2394, 1908],
    [1, 0, 0, 136, 232, 864, 864, 2448, 2016],
]
SUBSPACE_2CODE_FIRST = SUBSPACE_2CODE_DISTS[0]


@dataclass
class CheckResult:
    number: int
    title: str
    passed: bool
    seconds: float = 0.0
    details: list = dc_field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number:>2}: {self.title} ({self.seconds:.1f}s)"

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "criterion": self.number,
            "title": self.title,
            "passed": self.passed,
            "details": [str(d) for d in self.details],
        }
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


_CONSTRUCTED: dict = {}


def constructed(s: int, t: int, m: int, q: int):
    """Cached ``Y_s(t,m,q)`` with its inner distribution."""
    key = (s, t, m, q)
    if key not in _CONSTRUCTED:
        Y = construct_Y(ConstructionParams(*key))
        _CONSTRUCTED[key] = (Y, inner_distribution(Y))
    return _CONSTRUCTED[key]


def closed_form_for(m: int, q: int, d: int, size) -> Distribution:
    delta = (d + 1) // 2
    return closed_form_odd(m, q, delta, size) if d % 2 else closed_form_even(m, q, delta, size)


# ---------------------------------------------------------------------------


def check_qnumber_routes() -> CheckResult:
    details, ok = [], True
    for m, q in QN_CASES:
        E, R = q_numbers_explicit(m, q), q_numbers_recurrence(m, q)
        oracle = q_numbers_charsum_oracle(m, q, n_reps=2)
        dev = float(np.abs(E.numeric() - oracle).max())
        good = E == R and dev < 1e-6
        ok &= good
        details.append(f"(m,q)=({m},{q}) explicit==recurrence: {E == R}, oracle deviation {dev:.2e}")
    return CheckResult(1, "three-route Q-number agreement", ok, details=details)


def check_orthogonality() -> CheckResult:
    details, ok = [], True
    for m, q in QN_CASES:
        good = pq_orthogonality_check(q_numbers_explicit(m, q))
        ok &= good
        details.append(f"(m,q)=({m},{q}) Q.P = |X| I: {good}")
    return CheckResult(2, "orthogonality Q.P = |X| I", ok, details=details)


def check_valencies() -> CheckResult:
    details, ok = [], True
    for q in (3, 5):
        for m in (1, 2, 3):
            F = as_field(q)
            r, t = classify(F, all_forms(m, F), m)
            counts = {c: 0 for c in classes(m)}
            for rank, typ in zip(r.tolist(), t.tolist()):
                counts[(rank, typ if rank else 1)] += 1
            formula = {c: valency(m, q, *c) for c in classes(m)}
            good = counts == formula and sum(formula.values()) == q ** (m * (m + 1) // 2)
            ok &= good
            details.append(f"(m,q)=({m},{q}) valencies match enumeration: {good}")
    return CheckResult(3, "valency formulas vs class counts", ok, details=details)


def check_subspace_2code_first() -> CheckResult:
    _, a = constructed(1, 1, 4, 3)
    enumerated = [int(x) for x in a.vector()]
    cf = closed_form_even(4, 3, 1, 6561)
    ok = enumerated == SUBSPACE_2CODE_FIRST and cf == a
    details = [f"enumerated {enumerated}", f"closed form {[str(x) for x in cf.vector()]}"]
    return CheckResult(4, "8-dim 2-code Y_1(1,4,3) inner distribution", ok, details=details)


def check_constructions() -> CheckResult:
    details, ok = [], True
    for key in CONSTRUCTION_MATRIX:
        P = ConstructionParams(*key)
        Y, a = constructed(*key)
        ad = dual_distribution(a)
        d, m, q, t = P.d, P.m, P.q, P.t
        code = is_d_code(a, d) and minimum_rank(a) == d
        size = len(Y) == P.size == bound_additive(m, q, d)
        if m % 2 == 0:
            design = is_design_eps(ad, 2 * t + 1, eta_minus_one(q) ** (t + 1))
        else:
            design = is_t_design(ad, 2 * t + 2)
        good = code and size and design
        ok &= good
        details.append(f"Y_{key[0]}{key[1:]}: {d}-code {code}, size/bound {size}, design {design}")
    return CheckResult(5, "construction theorem on the test matrix", ok, details=details)


def check_closed_forms() -> CheckResult:
    details = []
    _, a = constructed(1, 0, 3, 3)
    cf = closed_form_odd(3, 3, 2, 27)
    ok = cf == a and a[3, 1] == 13 and a[3, -1] == 13
    details.append(f"closed_form_odd(3,3,2,27) == Y_1(0,3,3): {cf == a}")
    _, a = constructed(1, 1, 4, 3)
    good = closed_form_even(4, 3, 1, 6561) == a
    ok &= good
    details.append(f"closed_form_even(4,3,1,6561) == Y_1(1,4,3): {good}")
    Y, _ = constructed(1, 1, 6, 3)
    b = inner_distribution(puncture(Y))
    cf = closed_form_for(5, 3, minimum_rank(b), len(Y))
    good = cf == b
    ok &= good
    details.append(f"punctured Y_1(1,6,3): d={minimum_rank(b)}, closed form matches: {good}")
    return CheckResult(6, "closed-form distributions vs enumeration", ok, details=details)


def check_duality() -> CheckResult:
    details, ok = [], True
    sets = []
    for key in CONSTRUCTION_MATRIX:
        Y, a = constructed(*key)
        if Y.q ** n_entries(Y.m) <= 3**15:
            sets.append((f"Y_{key[0]}{key[1:]}", Y, a))
            if Y.m >= 3:
                Z = puncture(Y)
                sets.append((f"Y_{key[0]}{key[1:]}*", Z, inner_distribution(Z)))
    for name, Y, a in sets:
        good = inner_distribution(additive_dual(Y)).scaled(len(Y)) == dual_distribution(a)
        ok &= good
        details.append(f"{name}: |Y| a(Y^perp) == a'(Y): {good}")
    return CheckResult(7, "duality of inner distributions", ok, details=details)


def check_hamming() -> CheckResult:
    details, ok = [], True
    cases = [((1, 0, 3, 3), ("C1", "C2")), ((1, 1, 4, 3), ("C1",))]
    for key, which in cases:
        P = ConstructionParams(*key)
        Y, a = constructed(*key)
        for w in which:
            C = code_C1(Y) if w == "C1" else code_C2(Y)
            brute = brute_force_enumerator(C)
            formula = enumerator_C1_formula(a) if w == "C1" else enumerator_C2_formula(a)
            dmin = brute.min_nonzero_weight()
            good = brute == formula and dmin == min_distance_formulas(P, w)
            ok &= good
            details.append(f"{w}(Y_{key[0]}{key[1:]}): {C.shape[0]} words of length {C.shape[1]}, "
                           f"enumerators equal {brute == formula}, min distance {dmin}")
    return CheckResult(8, "Hamming weight enumerators and minimum distances", ok, details=details)


def check_n_of_h() -> CheckResult:
    details, ok = [], True
    q = 3
    F = as_field(q)
    for m in (1, 2, 3):
        X = all_forms(m, F)
        r, t = classify(F, X, m)
        vals = quadratic_values(F, X, all_vectors(F, m))
        seen = {}
        for k in range(X.shape[0]):
            c = (int(r[k]), int(t[k]) if r[k] else 1)
            if c in seen:
                continue
            seen[c] = True
            B = SymForm(F, m, tuple(int(x) for x in X[k]))
            for h in range(q):
                direct = int((vals[k] == h).sum())
                good = direct == n_of_h(m, q, *c, h) == count_solutions(B, h)
                ok &= good
                if not good:
                    details.append(f"mismatch at m={m}, class {c}, h={h}")
        # every form, not only one per class
        counts = np.stack([(vals == h).sum(axis=1) for h in range(q)], axis=1)
        expect = np.array([[n_of_h(m, q, int(a), int(b) if a else 1, h) for h in range(q)] for a, b in zip(r, t)])
        good = bool((counts == expect).all())
        ok &= good
        details.append(f"m={m}: N(h) matches direct counting for all {X.shape[0]} forms: {good}")
    return CheckResult(9, "N(h) lemma vs direct counting", ok, details=details)


def check_lp() -> CheckResult:
    details = []
    s = lp_bound(2, 3, 2)
    ok = s.value == 9 and lp_certificate_check(s.instance, s)
    details.append(f"lp_bound(2,3,2) = {s.value}")
    s = lp_bound(4, 3, 2)
    target = bound_even_nonadditive(4, 3, 1)
    good = s.value == target and lp_certificate_check(s.instance, s)
    ok &= good
    details.append(f"lp_bound(4,3,2) = {s.value}, even-m closed form {target}")
    for m, q in [(1, 3), (2, 3), (3, 3), (4, 3), (2, 5), (3, 5)]:
        good = lp_bound(m, q, 1).value == q ** n_entries(m)
        ok &= good
        details.append(f"lp_bound({m},{q},1) = |X|: {good}")
    for key in CONSTRUCTION_MATRIX:
        P = ConstructionParams(*key)
        good = P.size <= lp_bound(P.m, P.q, P.d).value
        ok &= good
        details.append(f"|Y_{key[0]}{key[1:]}| = {P.size} <= lp_bound: {good}")
    return CheckResult(10, "exact Delsarte LP bound", ok, details=details)


def check_exhaustive_subspaces() -> CheckResult:
    res = exhaustive_subspaces()
    ok = res["distributions"] == sorted(SUBSPACE_2CODE_DISTS)
    details = [f"{res['spanning_pairs']} spanning pairs of projective forms give a 2-code",
               f"{len(res['distributions'])} distinct inner distributions"]
    details += [str(r) for r in res["distributions"]]
    return CheckResult(11, "exhaustive 8-dimensional 2-code subspaces of X(4,3)", ok, details=details)


CHECKS = {
    1: (check_qnumber_routes, {"qnumbers", "scheme"}),
    2: (check_orthogonality, {"qnumbers", "scheme"}),
    3: (check_valencies, {"valencies", "scheme"}),
    4: (check_subspace_2code_first, {"subspace-2code", "construct", "dist"}),
    5: (check_constructions, {"construct"}),
    6: (check_closed_forms, {"closed-form", "dist"}),
    7: (check_duality, {"duality", "dist", "construct"}),
    8: (check_hamming, {"hamming", "code"}),
    9: (check_n_of_h, {"hamming", "code"}),
    10: (check_lp, {"lp"}),
    11: (check_exhaustive_subspaces, {"exhaustive-subspaces"}),
}
OPTIONAL = {11}


TIME_LIMITS = {1: 120.0, 4: 30.0, 8: 120.0, 10: 10.0}


def run_check(number: int) -> CheckResult:
    """Run one check; checks with a stated runtime limit fail when they exceed it."""
    fn, _ = CHECKS[number]
    t0 = time.perf_counter()
    res = fn()
    res.seconds = time.perf_counter() - t0
    limit = TIME_LIMITS.get(number)
    if limit is not None and res.seconds > limit:
        res.passed = False
        res.details.append(f"runtime {res.seconds:.1f}s exceeds the {limit:.0f}s limit")
    return res


def run_checks(tags=None, numbers=None, include_optional: bool = False) -> list[CheckResult]:
    """Run the selected checks; check 11 (about 20 s) only when asked for."""
    out = []
    for n, (_, t) in CHECKS.items():
        if numbers and n not in numbers:
            continue
        if n in OPTIONAL and not include_optional and not (numbers or (tags and set(tags) & t)):
            continue
        if tags and not (set(tags) & t):
            continue
        out.append(run_check(n))
    return out


# ---------------------------------------------------------------------------
# exhaustive 8-dim 2-code subspace search (long running)


def exhaustive_subspaces(progress=None) -> dict:
    """All inner distributions of 8-dimensional additive 2-codes in X(4,3).

    Such a code is ``W^perp`` for a 2-dimensional subspace ``W`` of X(4,3).
    ``W^perp`` contains ``v v^T`` iff ``v`` is isotropic for every form of
    ``W``, so ``W^perp`` is a 2-code iff the isotropic point sets of two
    spanning forms are disjoint.  The distribution of ``W^perp`` is the dual
    transform of the distribution of ``W`` divided by ``|W|``.
    """
    m, q = 4, 3
    F = as_field(q)
    X = all_forms(m, F)
    D = X.shape[1]
    powers = q ** np.arange(D, dtype=np.int64)
    code = X @ powers
    lookup = np.empty(q**D, dtype=np.int64)
    lookup[code] = np.arange(X.shape[0])
    ranks, types = classify(F, X, m)
    cls = np.where(ranks == 0, 0, 2 * ranks - 1 + (types == -1))

    # isotropic projective points, as a bitmask per form
    pts = all_vectors(F, m)
    pts = np.array([v for v in pts if v.any() and v[v.nonzero()[0][0]] == 1])
    vals = quadratic_values(F, X, pts)
    bits = (vals == 0).astype(np.uint64) << np.arange(len(pts), dtype=np.uint64)
    mask = np.bitwise_or.reduce(bits, axis=1)

    lead = np.array([row[row.nonzero()[0][0]] if row.any() else 0 for row in X])
    reps = np.nonzero(lead == 1)[0]
    found: dict = {}
    n_pairs = 0
    L = classes(m)
    for k, A in enumerate(reps):
        others = reps[k + 1 :]
        hit = others[(mask[others] & mask[A]) == 0]
        if hit.size:
            n_pairs += hit.size
            XA, XB = X[A][None, :], X[hit]
            elems = [XA + 0 * XB, 2 * XA + 0 * XB, XB, 2 * XB, XA + XB, 2 * XA + 2 * XB, XA + 2 * XB, 2 * XA + XB]
            ids = np.stack([cls[lookup[(e % q) @ powers]] for e in elems], axis=1)
            hist = np.zeros((hit.size, len(L)), dtype=np.int64)
            for col in range(ids.shape[1]):
                np.add.at(hist, (np.arange(hit.size), ids[:, col]), 1)
            for row in np.unique(hist, axis=0):
                found.setdefault(tuple(int(x) for x in row), None)
        if progress and k % 2000 == 0:
            progress(k, len(reps), len(found))
    dists = []
    for row in found:
        w = Distribution.from_vector(m, q, [Fraction(1) + row[0]] + [Fraction(x) for x in row[1:]])
        a = dual_distribution(w).scaled(Fraction(1, 9))
        dists.append(tuple(int(x) for x in a.vector()))
    dists = sorted(set(dists))
    return {"spanning_pairs": n_pairs, "distributions": [list(x) for x in dists]}
