"""Acceptance suite: one test per exit criterion, at its stated tolerance.

Each test prints a single PASS/FAIL line (visible with -s or in captured
output) and enforces both the residual tolerance and a runtime ceiling.
"""

import json
import math
import subprocess
import sys
import time

import numpy as np
import pytest
import scipy.special as sp

from divsum import arith, gammazeta as gz
from divsum.hyper import hyp3f2_analytic
from divsum.identities import (REGISTRY, eval_cohen, eval_coalescence,
                               eval_dixon_ferrar, eval_entry_riesz,
                               eval_eta_kappa, eval_f_integral_rep,
                               eval_kappa_phi, eval_koshliakov_corollary,
                               eval_lambda_phi, eval_lemma_I,
                               eval_lommel_series, eval_main_theorem,
                               eval_modular_newthm, eval_modular_s0_limit,
                               eval_voronoi_dirichlet, eval_voronoi_weighted,
                               eval_wigert, interpret_divergent_series,
                               direct_binomial_series, run_identity)
from divsum.identities.divergent import PoleCollisionError
from divsum.identities.main_transform import master_I_closed
from divsum.identities.registry import _self_reciprocal
from divsum.reports import Verdict


def _report_line(num: int, ok: bool, detail: str, elapsed: float, limit: float):
    status = "PASS" if ok else "FAIL"
    print(f"[criterion {num:2d}] {status}  {detail}  ({elapsed:.1f}s / {limit:.0f}s)")
    assert ok, f"criterion {num}: {detail}"
    assert elapsed < limit, f"criterion {num}: runtime {elapsed:.1f}s over {limit}s"


def test_criterion_01_special_function_pinning():
    t0 = time.time()
    rng = np.random.default_rng(100)
    worst = 0.0
    for _ in range(100):
        s = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        if abs(s.imag) < 0.05 and abs(s.real - round(s.real)) < 0.05:
            s += 0.5
        dup = (gz.gamma(s) * gz.gamma(s + 0.5) * 2.0 ** (2 * s - 1)
               / math.sqrt(math.pi) - gz.gamma(2 * s))
        refl = gz.gamma(s) * gz.gamma(1 - s) * np.sin(np.pi * s) / np.pi - 1.0
        worst = max(worst, abs(dup) / max(1.0, abs(gz.gamma(2 * s))), abs(refl))
    ok = worst < 1e-11
    ok &= abs(gz.zeta(0.0) + 0.5) < 1e-12
    ok &= abs(gz.zeta(2.0) - math.pi ** 2 / 6) < 1e-12
    ok &= abs(gz.zeta(-2.0)) < 1e-12 and abs(gz.zeta(-4.0)) < 1e-12
    hw = max(abs(gz.hurwitz_zeta(0.0, th).value - (0.5 - th))
             for th in np.linspace(0.05, 1.0, 20))
    ok &= hw < 1e-12
    _report_line(1, ok, f"gamma/zeta pinning worst {max(worst, hw):.2e}",
                 time.time() - t0, 5.0)


def test_criterion_02_kernel_lemma():
    t0 = time.time()
    worst = 0.0
    for m in (0, 1, 2):
        for x in (0.7, 3.2):
            for n in range(1, 11):
                tot = (hyp3f2_analytic(0.25, 0.75, 1.0, 0.25 - m, 0.75 - m,
                                       -n * n / (x * x))
                       + hyp3f2_analytic(0.25 + m, 0.75 + m, 1.0, 0.25, 0.75,
                                         -x * x / (n * n)))
                assert tot == tot
                worst = max(worst, abs(tot - 1.0))
    _report_line(2, worst < 1e-9, f"pair-sum worst {worst:.2e}", time.time() - t0, 5.0)


def test_criterion_03_master_integral_lemma():
    t0 = time.time()
    worst = 0.0
    for s in (0.3, 0.3 + 0.1j):
        for x in (0.4, 2.5):
            rep = eval_lemma_I(s, x, -0.5)
            worst = max(worst, rep.max_residual)
    bracket = abs(master_I_closed(0.3, 1 - 1e-4) - master_I_closed(0.3, 1 + 1e-4))
    ok = worst < 1e-7 and bracket < 1e-3
    _report_line(3, ok, f"worst {worst:.2e}, x=1 bracket {bracket:.2e}",
                 time.time() - t0, 30.0)


def test_criterion_04_main_transformations():
    t0 = time.time()
    worst = 0.0
    for sign in ("Plus", "Minus"):
        for s in (0.5, 0.75, 1.5):
            for x in (1.3, 2.7, 5.2):
                rep = eval_main_theorem(sign, s, x)
                worst = max(worst, rep.max_residual)
    # stability under doubled truncation at one grid point
    from divsum.reports import EvalParams
    from divsum.summation import SumPolicy
    hard = EvalParams(series_policy=SumPolicy(tol=1e-12, max_terms=2_000_000),
                      quad_tol=5e-10)
    drift = abs(eval_main_theorem("Plus", 0.5, 2.7).members[1].value
                - eval_main_theorem("Plus", 0.5, 2.7, hard).members[1].value)
    ok = worst < 1e-8 and drift < 1e-8
    _report_line(4, ok, f"worst {worst:.2e}, truncation drift {drift:.2e}",
                 time.time() - t0, 60.0)


def test_criterion_05_coalescence_suite():
    t0 = time.time()
    worst = 0.0
    for variant in ("FirCorollary", "AuxCorollary", "SecTheorem", "ThiTheorem"):
        worst = max(worst, eval_coalescence(variant, 0, 2.5).max_residual)
    for variant in ("PlusHalf", "MinusHalf"):
        for m in (0, 1):
            worst = max(worst, eval_coalescence(variant, m, 2.5).max_residual)
    _report_line(5, worst < 1e-8, f"worst {worst:.2e}", time.time() - t0, 60.0)


def test_criterion_06_k_bessel_expansion():
    t0 = time.time()
    r1 = eval_cohen(0.25, 1.6, 1)
    r2 = eval_cohen(0.25, 1.6, 2)
    worst = max(r1.max_residual, r2.max_residual)
    drift = abs(r1.members[1].value - r2.members[1].value)
    ok = worst < 1e-8 and drift < 2e-8
    _report_line(6, ok, f"worst {worst:.2e}, k-independence {drift:.2e}",
                 time.time() - t0, 30.0)


def test_criterion_07_rotated_series_identity():
    t0 = time.time()
    worst = max(eval_lambda_phi(z, 0.3).max_residual for z in (0.8, 1.4, 3.0))
    _report_line(7, worst < 1e-8, f"worst {worst:.2e}", time.time() - t0, 10.0)


def test_criterion_08_sharp_cutoff_summation():
    t0 = time.time()
    # brute divisor-count oracle at x = 10.5 (sum of d(n), n <= 10)
    brute = sum(len([d for d in range(1, n + 1) if n % d == 0])
                for n in range(1, 11))
    rep0 = eval_voronoi_dirichlet(10.5, 0.0)
    ok = abs(rep0.members[0].value - brute) == 0.0
    ok &= rep0.max_residual < 5e-3
    ok &= rep0.notes["kernel_terms"] <= 200_000
    rep_s = eval_voronoi_dirichlet(5.5, 0.3)
    ok &= rep_s.max_residual < 5e-3
    _report_line(8, ok, f"count {brute}, residuals {rep0.max_residual:.2e} / "
                 f"{rep_s.max_residual:.2e}", time.time() - t0, 120.0)


def test_criterion_09_weighted_summation():
    t0 = time.time()
    rep = eval_voronoi_weighted("ExpDecay", 0.5, 3.5, 0.3)
    _report_line(9, rep.max_residual < 1e-6, f"residual {rep.max_residual:.2e}",
                 time.time() - t0, 60.0)


def test_criterion_10_square_divisor_transformation():
    t0 = time.time()
    beta = 4.0 * math.pi ** 2  # the alpha = pi instance
    worst = 0.0
    for s in (1.0, 3.0, 2.0):
        rep = eval_wigert(s, beta)
        worst = max(worst, rep.max_residual)
        if s == 1.0:
            assert any(m.label == "classical-form" for m in rep.members)
    _report_line(10, worst < 1e-8, f"worst {worst:.2e} (s=1 includes the 1/4 term)",
                 time.time() - t0, 30.0)


def test_criterion_11_character_riesz_sums():
    t0 = time.time()
    chars = arith.characters_mod(5)
    odd = next(c for c in chars if c.is_odd)
    even = next(c for c in chars if not c.is_odd and not c.is_principal)
    worst1 = max(eval_entry_riesz("Odd", odd, 0.2, 3.3, 1).max_residual,
                 eval_entry_riesz("Even", even, 0.2, 3.3, 1).max_residual)
    worst0 = max(eval_entry_riesz("Odd", odd, 0.2, 3.3, 0).max_residual,
                 eval_entry_riesz("Even", even, 0.2, 3.3, 0).max_residual)
    ok = worst1 < 1e-6 and worst0 < 5e-3
    _report_line(11, ok, f"k=1 worst {worst1:.2e}, k=0 worst {worst0:.2e}",
                 time.time() - t0, 120.0)


def test_criterion_12_transform_self_reciprocality():
    t0 = time.time()
    first = _self_reciprocal("First")
    second = _self_reciprocal("Second")
    worst = 0.0
    for x in (0.5, 1.0, 2.0):
        worst = max(worst, first(nu=0.25, x=x, tol=1e-6).max_residual)
    worst = max(worst, second(nu=0.25, x=2.0, tol=1e-6).max_residual)
    _report_line(12, worst < 1e-6, f"worst relative {worst:.2e}",
                 time.time() - t0, 60.0)


def test_criterion_13_modular_transformation():
    t0 = time.time()
    rep = eval_modular_newthm(0.4, 2.0)
    lim = eval_modular_s0_limit(2.0)
    ok = rep.max_residual < 1e-6 and lim.max_residual < 1e-3
    _report_line(13, ok, f"members {rep.max_residual:.2e}, "
                 f"small-order limit {lim.max_residual:.2e}",
                 time.time() - t0, 120.0)


def test_criterion_14_lommel_series_modularity():
    t0 = time.time()
    rep = eval_lommel_series(0.3, 1.7)
    pair = abs(rep.members[0].value - rep.members[1].value)
    xi = rep.max_residual
    ok = pair < 1e-6 and xi < 1e-6
    _report_line(14, ok, f"alpha/beta pair {pair:.2e}, vs Xi {xi:.2e}",
                 time.time() - t0, 120.0)


def test_criterion_15_pv_lommel_integral():
    t0 = time.time()
    worst = max(run_identity("pv-lommel", {"s": 0.5, "x": 1.3, "alpha": 0.8}).max_residual,
                run_identity("pv-lommel", {"s": 1.0, "x": 0.7, "alpha": 1.2}).max_residual)
    _report_line(15, worst < 1e-6, f"worst relative residual {worst:.2e}",
                 time.time() - t0, 60.0)


def test_criterion_16_two_squares_pair():
    t0 = time.time()
    worst = max(eval_dixon_ferrar(0.3, 1.0, 2.0).max_residual,
                eval_dixon_ferrar(0.5, 1.3, 1.3).max_residual)
    _report_line(16, worst < 1e-8, f"worst {worst:.2e}", time.time() - t0, 10.0)


def test_criterion_17_contour_suite():
    t0 = time.time()
    r_eta = eval_eta_kappa(0.3, 1.2)
    r_kp = eval_kappa_phi(0.3, 1.5)
    r_f = eval_f_integral_rep(1.3, 0.4)
    r_c = eval_koshliakov_corollary()
    worst = max(r_eta.max_residual, r_kp.max_residual,
                r_f.max_residual, r_c.max_residual)
    _report_line(17, worst < 1e-6, f"worst {worst:.2e}", time.time() - t0, 120.0)


def test_criterion_18_divergent_series_interpreter():
    t0 = time.time()
    v1 = interpret_divergent_series(0.4, 1.5, 2.0)
    v2 = direct_binomial_series(complex(0.4), 1.5, complex(2.0))
    match = abs(v1 - v2)
    try:
        interpret_divergent_series(0.5, 1.5, 0.5)
        collided = False
    except PoleCollisionError:
        collided = True
    ok = match < 1e-7 and collided
    _report_line(18, ok, f"convergent-region match {match:.2e}, pole guarded",
                 time.time() - t0, 30.0)


def test_criterion_19_harness_contract():
    t0 = time.time()

    def run(*args):
        proc = subprocess.run([sys.executable, "-m", "divsum.cli", *args],
                              capture_output=True, text=True)
        return proc.returncode, proc.stdout

    args = ["sweep", "--id", "lambda-phi", "--x", "0.8,1.4", "--json"]
    c1, o1 = run(*args, "--jobs", "1")
    c2, o2 = run(*args, "--jobs", "4")
    c3, o3 = run(*args, "--jobs", "1")
    ok = (o1 == o2 == o3) and c1 == c2 == c3 == 0
    c_fail, _ = run("verify", "--id", "main-plus", "--s", "0.5", "--x", "3")
    ok &= c_fail == 1
    c_usage, _ = run("verify", "--id", "nonsense")
    ok &= c_usage == 2
    _report_line(19, ok, "byte-identical reports across jobs; exit codes 0/1/2",
                 time.time() - t0, 120.0)
