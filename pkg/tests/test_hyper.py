import math

import numpy as np
import pytest

from divsum.hyper import (DenominatorPoleError, HyperSpec,
                          OutsideConvergenceDomainError, hyp1f1,
                          hyp3f2_analytic, pfq, pfq_series)


def test_empty_product_at_zero():
    assert pfq([0.3, 0.9], [1.1], 0.0) == 1.0


def test_parameter_cancellation_collapses_to_geometric():
    z = -0.21
    assert abs(pfq([0.25, 0.75, 1.0], [0.25, 0.75], z) - 1.0 / (1.0 - z)) < 1e-12


def test_pfaff_transformation():
    a, b, c, w = 0.3, 0.7, 1.4, 0.4
    lhs = pfq([a, b], [c], w)
    rhs = (1 - w) ** (-a) * pfq([a, c - b], [c], w / (w - 1.0))
    assert abs(lhs - rhs) < 1e-11


def test_denominator_pole_detected():
    with pytest.raises(DenominatorPoleError):
        HyperSpec((0.5,), (-1.0,), 0.3)


def test_balanced_series_outside_disk():
    with pytest.raises(OutsideConvergenceDomainError):
        pfq_series(HyperSpec((0.5, 0.6, 0.7), (1.1, 1.2), 1.5))


def test_kernel_identity_grid():
    # the pair of continued 3F2 values sums to one
    for m in (0, 1, 2):
        for x in (0.7, 3.2):
            for n in range(1, 11):
                total = (hyp3f2_analytic(0.25, 0.75, 1.0, 0.25 - m, 0.75 - m,
                                         -n * n / (x * x))
                         + hyp3f2_analytic(0.25 + m, 0.75 + m, 1.0, 0.25, 0.75,
                                           -x * x / (n * n)))
                assert total == total  # no nan
                assert abs(total - 1.0) < 1e-9


def test_kernel_identity_m0_closed_form():
    x, n = 2.5, 7.0
    a = hyp3f2_analytic(0.25, 0.75, 1.0, 0.25, 0.75, -n * n / (x * x))
    b = hyp3f2_analytic(0.25, 0.75, 1.0, 0.25, 0.75, -x * x / (n * n))
    assert abs(a - x * x / (x * x + n * n)) < 1e-12
    assert abs(b - n * n / (x * x + n * n)) < 1e-12
    assert abs(a + b - 1.0) < 1e-12


def test_consistency_loop_direct_vs_connection():
    # two independent routes to the same value at |z| < 1: the direct series,
    # and the three-term connection formula whose right side carries 3F2
    # values at 1/z that are themselves analytically continued
    import scipy.special as sp
    a1, a2, a3 = 0.27, 0.81, 1.13
    b1, b2 = 1.9, 0.64
    z = -0.5
    direct = pfq([a1, a2, a3], [b1, b2], z)
    front = (sp.gamma(b1) * sp.gamma(b2) * sp.rgamma(a1) * sp.rgamma(a2)
             * sp.rgamma(a3))
    looped = 0.0 + 0.0j
    for ai, aj, ak in ((a1, a2, a3), (a2, a1, a3), (a3, a1, a2)):
        coef = (sp.gamma(ai) * sp.gamma(aj - ai) * sp.gamma(ak - ai)
                * sp.rgamma(b1 - ai) * sp.rgamma(b2 - ai))
        inner = hyp3f2_analytic(ai, ai - b1 + 1.0, ai - b2 + 1.0,
                                ai - aj + 1.0, ai - ak + 1.0, 1.0 / z)
        looped += coef * complex(-z) ** (-ai) * inner
    looped *= front
    assert abs(looped - direct) < 1e-8


def test_degenerate_difference_perturbation():
    import mpmath as mp
    mp.mp.dps = 30
    val = hyp3f2_analytic(0.25, 1.25, 0.6, 1.3, 0.9, -3.0)
    ref = complex(mp.hyper([0.25, 1.25, 0.6], [1.3, 0.9], -3.0))
    assert abs(val - ref) < 1e-8


def test_kummer_function():
    assert hyp1f1(0.4, 0.9, 0.0) == 1.0
    assert abs(hyp1f1(1.0, 2.0, 1.0) - (math.e - 1.0)) < 1e-12
    # raw-series oracle in extended precision (the alternating terms peak
    # near e^50, far beyond double-precision compensation)
    import mpmath as mp
    a, b, z = 0.25, 0.5, -50.0
    with mp.workdps(40):
        raw = complex(mp.nsum(lambda n: mp.rf(a, n) / mp.rf(b, n)
                              * mp.mpf(z) ** n / mp.factorial(n), [0, 300]))
    assert abs(hyp1f1(a, b, z) - raw) < 1e-8


def test_contiguity_derivative():
    a = (0.3, 0.8)
    b = (1.4,)
    h = 1e-6
    z = 0.2
    fd = (pfq(list(a), list(b), z + h) - pfq(list(a), list(b), z - h)) / (2 * h)
    target = (a[0] * a[1] / b[0]) * pfq([x + 1 for x in a], [x + 1 for x in b], z)
    assert abs(fd - target) < 1e-6


def test_binomial_summation_identities():
    a, x = 0.7, 0.3
    lhs = sum(_poch(a, 2 * j) * x ** (2 * j) / math.factorial(2 * j + 1)
              for j in range(40))
    rhs = ((1 + x) ** (1 - a) - (1 - x) ** (1 - a)) / (2 * x * (1 - a))
    assert abs(lhs - rhs) < 1e-10
    lhs2 = sum(_poch(a, 2 * j + 1) * x ** (2 * j + 1) / math.factorial(2 * j + 2)
               for j in range(40))
    rhs2 = -((1 + x) ** (1 - a) + (1 - x) ** (1 - a) - 2.0) / (2 * x * (1 - a))
    assert abs(lhs2 - rhs2) < 1e-10


def _poch(a, n):
    out = 1.0
    for i in range(n):
        out *= a + i
    return out


def test_3f2_duplication_split_into_2f1s():
    # duplication collapses the paired parameters: the quarter-integer 3F2
    # equals the symmetrised 2F1 of rotated argument
    s, x = 0.35, 0.6
    lhs = pfq([s / 2.0, (s + 1.0) / 2.0, 1.0], [0.25, 0.75], -x * x)
    rhs = 0.5 * (pfq([s, 1.0], [0.5], 1j * x) + pfq([s, 1.0], [0.5], -1j * x))
    assert abs(lhs - rhs) < 1e-9
