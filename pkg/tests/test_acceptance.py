"""Acceptance criteria at their stated scale and time budgets.

Each criterion records one summary line (printed at the end of the pytest
run, or by running this file directly).  Run only these with
``pytest -m acceptance``.
"""
from __future__ import annotations

import time

import pytest

from nscauchy import kernels, scalarprod, verify
from nscauchy.report import VerificationReport

pytestmark = pytest.mark.acceptance

RESULTS: dict = {}
TYPES = ("A", "B", "C", "D", "BC")


def _record(number: int, title: str, budget: float, reports, started: float, note: str = "") -> bool:
    elapsed = time.perf_counter() - started
    bad = [r for r in reports if not r.passed]
    ok = not bad and elapsed < budget
    checks = sum(r.checks for r in reports)
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {checks} checks in {elapsed:.1f}s (budget {budget:.0f}s)"
    if bad:
        r = bad[0]
        line += f"; first failure {r.identity} type={r.gtype} n={r.n}: {r.counterexample}"
    if note:
        line += f"; {note}"
    RESULTS[number] = line
    return ok


def _assert(ok: bool, number: int):
    assert ok, RESULTS[number]


def test_01_idempotence():
    t = time.perf_counter()
    reps = [verify.check_lemma1(g, n, trials=100, seed=n) for g in TYPES for n in (2, 3)]
    _assert(_record(1, "pi^2 = pi on random Laurent polynomials", 10, reps, t), 1)


def test_02_braid_relations():
    t = time.perf_counter()
    reps = [verify.check_braid(g, 3, trials=30, seed=1, key_bound=0) for g in ("A", "B", "C", "BC", "D")]
    reps += [verify.check_braid("D", n, trials=0, key_bound=3) for n in (3, 4)]
    _assert(_record(2, "braid relations and type D path independence", 30, reps, t), 2)


def test_03_denominators():
    t = time.perf_counter()
    reps = [verify.check_eq6_9(g, n) for g in ("A", "B", "C", "D") for n in range(1, 5)]
    _assert(_record(3, "Weyl denominators, alternating sum = product", 30, reps, t), 3)


def test_04_theta_factorizations():
    t = time.perf_counter()
    reps = [verify.check_eq4_5(g, n, 2) for g in ("B", "C", "D") for n in (2, 3)]
    _assert(_record(4, "theta factorizations of the alternating sums", 60, reps, t), 4)


def test_05_characters():
    t = time.perf_counter()
    reps = [verify.check_eq10_13(g, n, maxdeg=4, schur_bound=6) for g in ("A", "B", "C", "D") for n in (2, 3)]
    reps.append(verify.check_eq10_13("A", 1, maxdeg=4, schur_bound=6))
    _assert(_record(5, "Weyl quotients = x^lambda pi_omega; Schur = tableaux", 60, reps, t), 5)


def test_06_cauchy_type_a():
    t = time.perf_counter()
    reps = [kernels.check_prop3(n, 5) for n in (2, 3)] + [kernels.check_lemma2(n, 5) for n in (2, 3)]
    _assert(_record(6, "dominant series * Xi_n = Omega^A, direct and factored", 120, reps, t), 6)


def test_07_phi_words():
    t = time.perf_counter()
    reps = [kernels.check_lemma4(n, 4) for n in (2, 3)] + [kernels.check_lemma5(n, 4) for n in (2, 3)]
    _assert(_record(7, "Omega^A Phi^BC = Omega^BC, Omega^A_{n-1} Phi^D = Omega^D", 120, reps, t), 7)


def test_08_key_expansions():
    t = time.perf_counter()
    reps = [kernels.check_theorem6(g, n, 5) for g in ("A", "BC", "D") for n in (2, 3)]
    _assert(_record(8, "kernels = sums of products of key polynomials", 300, reps, t), 8)


def test_09_symmetric_identities():
    t = time.perf_counter()
    reps = [kernels.symmetric_corollaries(2, 4)]
    _assert(_record(9, "Cauchy and Littlewood identities via pi_omega", 120, reps, t), 9)


def test_10_self_adjointness():
    t = time.perf_counter()
    reps = [scalarprod.adjointness_check(g, n, trials=100, seed=10 + n) for g in TYPES for n in (2, 3)]
    _assert(_record(10, "divided differences self-adjoint (A: pi_i vs pi_{n-i})", 120, reps, t), 10)


def _literal_type_a(gram: scalarprod.GramMatrix) -> VerificationReport:
    r = VerificationReport("theorem15-literal", gram.n, None, "A")
    bad = gram.mismatches(lambda v, u: int(tuple(v) == tuple(u)))
    r.checks = len(gram.rows) * len(gram.cols)
    if bad:
        r.counterexample = dict(bad[0], mismatches=len(bad))
    return r


@pytest.fixture(scope="module")
def grams():
    t = time.perf_counter()
    out = {(g, n): scalarprod.orthogonality_matrix(g, n, 4) for g in TYPES for n in (2, 3)}
    return out, t


def test_11_orthogonality(grams):
    mats, t = grams
    reps = []
    for (g, n), gram in mats.items():
        if g == "A":
            reps.append(_literal_type_a(gram))
            continue
        r = VerificationReport("theorem15", n, 4, g)
        bad = gram.mismatches()
        r.checks = sum(1 for row in gram.entries for e in row if e is not None)
        if bad:
            r.counterexample = bad[0]
        reps.append(r)
    swapped = all(not mats[("A", n)].mismatches() for n in (2, 3))
    note = ("type A satisfies (K_v, K^_u) = delta(v, u omega) exactly instead; "
            "see the decisions ledger" if swapped else "")
    _record(11, "Gram matrices are delta patterns (A: v <-> u)", 600, reps, t, note)
    assert all(r.passed for r in reps if r.gtype != "A"), RESULTS[11]


def test_11_type_a_pairs_v_with_u_omega(grams):
    mats, _ = grams
    for n in (2, 3):
        assert not mats[("A", n)].mismatches()


@pytest.mark.xfail(strict=True, reason="with the type A product as defined, K_v pairs with K^_{v omega}, not K^_v")
def test_11_type_a_literal_pattern(grams):
    mats, _ = grams
    for n in (2, 3):
        assert _literal_type_a(mats[("A", n)]).passed


def test_12_support_and_unitriangularity():
    t = time.perf_counter()
    reps = []
    for g in TYPES:
        reps.append(scalarprod.check_lemma10(g, 2, 3))
        reps.append(scalarprod.check_corollary12(g, 2, 3))
    _assert(_record(12, "monomial support and unitriangularity on |v_i| <= 3", 120, reps, t), 12)


def summary_lines():
    return [RESULTS[k] for k in sorted(RESULTS)]


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
