import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from divsum import arith


def test_sigma_basics():
    assert arith.divisor_sigma(1.7, 1) == 1
    assert arith.divisor_sigma(0, 6) == 4
    s, n = 0.4, 12
    lhs = arith.divisor_sigma(-s, n)
    rhs = n ** (-s) * arith.divisor_sigma(s, n)
    assert abs(lhs - rhs) < 1e-14


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 400), st.integers(2, 400))
def test_sigma_multiplicative(m, n):
    if math.gcd(m, n) != 1:
        return
    s = 1.0
    assert abs(arith.divisor_sigma(s, m * n)
               - arith.divisor_sigma(s, m) * arith.divisor_sigma(s, n)) < 1e-9


def test_generalized_psi():
    s = 1.3
    assert abs(arith.generalized_psi(2, s, 4) - (1 + 2 ** s)) < 1e-14
    assert arith.generalized_psi(2, 2.0, 7) == 1
    assert arith.generalized_psi(1, s, 30) == arith.divisor_sigma(s, 30)


def test_r2_counts():
    assert arith.r2_count(0) == 1
    assert arith.r2_count(1) == 4
    assert arith.r2_count(3) == 0
    # brute lattice enumeration oracle
    def brute(n):
        c = 0
        r = int(math.isqrt(n))
        for a in range(-r, r + 1):
            b2 = n - a * a
            if b2 < 0:
                continue
            b = int(math.isqrt(b2))
            if b * b == b2:
                c += 1 if b == 0 else 2
        return c
    assert brute(25) == 12
    for n in range(0, 60):
        assert arith.r2_count(n) == brute(n)


def test_characters_mod_5():
    chars = arith.characters_mod(5)
    assert len(chars) == 4
    assert sum(1 for c in chars if c.is_odd) == 2
    princ = next(c for c in chars if c.is_principal)
    assert princ(10) == 0
    assert princ(7) == 1
    # orthogonality of column sums
    total = sum(c(2) * c.conjugate()(3) for c in chars)
    assert abs(total) < 1e-12
    # complete multiplicativity
    for c in chars:
        for m in range(1, 10):
            for n in range(1, 10):
                assert abs(c(m * n) - c(m) * c(n)) < 1e-12


def test_characters_not_prime():
    with pytest.raises(arith.NotPrimeError):
        arith.characters_mod(6)


def test_gauss_sums_mod_5():
    chars = arith.characters_mod(5)
    for c in chars:
        tau = arith.gauss_sum(c)
        if c.is_principal:
            # brute sum of primitive roots of unity = Moebius(5) = -1
            brute = sum(cmath.exp(2j * cmath.pi * n / 5) for n in range(1, 5))
            assert abs(tau - brute) < 1e-12
            assert abs(tau + 1) < 1e-12
        else:
            assert abs(abs(tau) - math.sqrt(5)) < 1e-12
    odd = next(c for c in chars if c.is_odd)
    # twisted Gauss sum relation via the substitution n -> 2n
    tau2 = sum(odd(n) * cmath.exp(2j * cmath.pi * 2 * n / 5) for n in range(5))
    assert abs(tau2 - odd.conjugate()(2) * arith.gauss_sum(odd)) < 1e-13


def test_twisted_sigma():
    chars = arith.characters_mod(5)
    odd = next(c for c in chars if c.is_odd)
    assert arith.twisted_sigma(0.5, odd, 1) == 1
    princ = next(c for c in chars if c.is_principal)
    assert abs(arith.twisted_sigma(0.0, princ, 10) - 2) < 1e-14
    # generating function: sum sigma_s(chi,n)/n^z = zeta(z) L(z-s, chi)
    from divsum.gammazeta import dirichlet_l, zeta
    z, s = 3.0, 0.5
    N = 3000
    n = np.arange(1, N + 1)
    lhs = np.sum(arith.twisted_sigma_array(s, odd, N)[1:] * n ** (-z))
    rhs = zeta(z) * dirichlet_l(z - s, odd)
    assert abs(lhs - rhs) < 4.0 * N ** (-(z - s - 1.0))


def test_floor_weight():
    assert arith.floor_weight(3.7) == 3
    assert arith.floor_weight(4.0) == 3.5
    assert arith.floor_weight(0.2) == 0


def test_summatory_identity():
    # sum_{n<=x} d(n) = sum_{d<=x} floor(x/d) exactly
    for x in (10, 500, 10_000):
        lhs = int(arith.sigma_array(0.0, x)[1:].real.sum())
        rhs = sum(x // d for d in range(1, x + 1))
        assert lhs == rhs


def test_primed_convention():
    # integer endpoint counts half
    full = arith.primed_divisor_sum(0.0, 6.0)
    below = arith.primed_divisor_sum(0.0, 5.5)
    assert abs(full - (below + 0.5 * arith.divisor_sigma(0, 6))) < 1e-12


def test_sigma_array_matches_pointwise():
    N = 200
    arr = arith.sigma_array(0.7, N)
    for n in (1, 17, 64, 200):
        assert abs(arr[n] - arith.divisor_sigma(0.7, n)) < 1e-12
    psi = arith.psi_array(1.0, N)
    for n in (4, 36, 100):
        assert abs(psi[n] - arith.generalized_psi(2, 1.0, n)) < 1e-12
    r2 = arith.r2_array(N)
    for n in (0, 1, 25, 169):
        assert r2[n] == arith.r2_count(n)
