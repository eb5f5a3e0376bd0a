"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s -v`` to see the summary lines.
"""

import math
import time
from collections import defaultdict

import numpy as np
import pytest

from grunsky_hankel.audit import audit_chain, maximize_phi, maximize_psi
from grunsky_hankel.families import koebe_rotation, kfold_koebe
from grunsky_hankel.grunsky import grunsky_table, verify_coefficient_relations
from grunsky_hankel.hankel import h22_direct, h22_grunsky, h31_direct, h31_grunsky, hankel_det
from grunsky_hankel.search import SearchSpec, multi_start_search

from conftest import build_corpus
from oracles import PSI_ORACLE_ARG, PSI_ORACLE_VALUE, psi_bruteforce

INEQUALITY_KEYS = (
    "h22_triangle",
    "fekete_szego",
    "area_w13",
    "w33_coarse",
    "w33_sharp",
    "w33_triangle",
    "area_w15",
    "b3_chain_grunsky",
    "b3_chain_total",
    "b1_bound",
    "h22_headline",
    "h31_headline",
)


def verdict(n, ok, detail):
    print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}")
    assert ok, detail


def test_criterion_1_koebe_grunsky_oracle():
    t0 = time.perf_counter()
    T = grunsky_table(koebe_rotation(0.0, 12), 7)
    elapsed = time.perf_counter() - t0
    expected = {(1, 1): 1.0, (1, 3): 0.0, (1, 5): 0.0, (3, 5): 0.0, (3, 3): 1 / 3}
    err = max(abs(T[k] - v) for k, v in expected.items())
    verdict(1, err < 1e-10 and elapsed < 1.0, f"max entry error {err:.2e}, runtime {elapsed:.3f} s")


def test_criterion_2_identity_suite():
    t0 = time.perf_counter()
    corpus = build_corpus()
    worst, printed_a5 = defaultdict(float), defaultdict(float)
    for fam, fs in corpus.items():
        for f in fs:
            T = grunsky_table(f, 5)
            worst[fam] = max(worst[fam], float(np.max(np.abs(verify_coefficient_relations(f, T)))))
            printed_a5[fam] = max(printed_a5[fam], abs(verify_coefficient_relations(f, T, printed=True)[3]))
    elapsed = time.perf_counter() - t0
    for fam in corpus:
        print(f"\n  {fam:12s} max residual {worst[fam]:.2e}   a5 as printed (5*w15^2): {printed_a5[fam]:.2e}")
    offending = sorted(fam for fam, v in printed_a5.items() if v > 1e-6)
    print(f"\n  families with systematic printed-a5 residual > 1e-6: {offending}")
    top = max(worst.values())
    verdict(2, top < 1e-9 and elapsed < 10.0, f"max residual {top:.2e} over {sum(map(len, corpus.values()))} functions, runtime {elapsed:.2f} s")


def test_criterion_3_determinant_equivalence(corpus):
    worst = 0.0
    for f in corpus:
        T = grunsky_table(f, 5)
        h22 = (hankel_det(f, 2, 2).value, h22_direct(f), h22_grunsky(T))
        h31 = (hankel_det(f, 3, 1).value, h31_direct(f), h31_grunsky(T))
        for trip in (h22, h31):
            worst = max(worst, max(abs(a - b) for a in trip for b in trip))
    verdict(3, worst < 1e-9, f"max pairwise disagreement {worst:.2e}")


def test_criterion_4_witnesses():
    e31 = abs(h31_direct(kfold_koebe(3)) - (-4 / 9))
    thetas = np.linspace(0, 2 * math.pi, 8, endpoint=False) + 0.1
    e22 = max(abs(abs(h22_direct(koebe_rotation(th))) - 1) for th in thetas)
    verdict(4, e31 < 1e-12 and e22 < 1e-10, f"|H3(1)+4/9| = {e31:.2e}; max ||H2(2)|-1| over 8 rotations = {e22:.2e}")


def test_criterion_5_inequality_soundness(corpus):
    worst = defaultdict(lambda: math.inf)
    for f in corpus:
        rep = audit_chain(f)
        for k in INEQUALITY_KEYS:
            worst[k] = min(worst[k], rep.chain_residuals[k])
    bad = {k: v for k, v in worst.items() if not v >= -1e-9}
    lowest = min(worst, key=worst.get)
    verdict(5, not bad, f"min residual {worst[lowest]:.2e} ({lowest}); violations {bad}")


def test_criterion_6_phi():
    rep = maximize_phi()
    ok = abs(rep.value - 2) < 1e-9 and abs(rep.arg[0]) < 1e-6 and rep.monotone_decreasing
    verdict(6, ok, f"value {rep.value!r} at t={rep.arg[0]:.2e}, monotone={rep.monotone_decreasing}")


def test_criterion_7_psi():
    rep = maximize_psi()
    fresh_value, fresh_arg = psi_bruteforce()
    assert abs(fresh_value - PSI_ORACLE_VALUE) < 1e-12
    dv = abs(rep.value - PSI_ORACLE_VALUE)
    da = max(abs(a - b) for a, b in zip(rep.arg, PSI_ORACLE_ARG))
    print(f"\n  psi max {rep.value:.12f} at {rep.arg}; claimed {rep.claimed}; discrepancy {rep.discrepancy:+.6e}")
    verdict(7, dv < 1e-6 and da < 1e-6 and rep.discrepancy == rep.value - 1.0,
            f"|value - oracle| = {dv:.2e}, |arg - oracle| = {da:.2e}")


def test_criterion_8_search_recovery():
    t0 = time.perf_counter()
    s1 = SearchSpec(family="herglotz", atoms=1, objective="abs_h22", restarts=8, seed=0)
    s4 = SearchSpec(family="herglotz", atoms=4, objective="abs_h31", restarts=8, seed=0)
    r1, r4 = multi_start_search(s1), multi_start_search(s4)
    elapsed = time.perf_counter() - t0
    r1b, r4b = multi_start_search(s1), multi_start_search(s4)
    same = r1.history == r1b.history and r4.history == r4b.history
    ok = abs(r1.best_value - 1) < 1e-6 and r4.best_value >= 4 / 9 - 1e-6 and same and elapsed < 60
    verdict(8, ok, f"k=1 |H2(2)| {r1.best_value:.12f}; k=4 |H3(1)| {r4.best_value:.12f}; "
                   f"bit-identical={same}; runtime {elapsed:.2f} s")


def test_criterion_9_convex_sanity():
    convex = build_corpus()["convex"]
    top = max(abs(h22_direct(f)) for f in convex)
    verdict(9, len(convex) == 100 and top <= 1 / 8 + 1e-9, f"max |H2(2)| over 100 convex functions {top:.6f} (bound 0.125)")
