import cmath
import math

import mpmath as mp
import numpy as np
import pytest
import scipy.special as sp

from divsum.hyper import pfq
from divsum.lommel import (DomainError, ExceptionalParametersError,
                           LommelParams, lommel_big_S, lommel_small_s,
                           modified_lommel_T)

mp.mp.dps = 50


def _mp_big_s(mu, nu, w):
    mu, nu, w = mp.mpc(mu), mp.mpc(nu), mp.mpc(w)
    small = (w ** (mu + 1) / ((mu - nu + 1) * (mu + nu + 1))
             * mp.hyper([1], [(mu - nu + 3) / 2, (mu + nu + 3) / 2], -w * w / 4))
    pref = (2 ** (mu - 1) * mp.gamma((mu - nu + 1) / 2) * mp.gamma((mu + nu + 1) / 2)
            / mp.sin(nu * mp.pi))
    combo = (mp.cos((mu - nu) * mp.pi / 2) * mp.besselj(-nu, w)
             - mp.cos((mu + nu) * mp.pi / 2) * mp.besselj(nu, w))
    return small + pref * combo


def test_small_s_leading_behaviour():
    mu, nu, w = 0.3, 0.1, 1e-3
    val = lommel_small_s(LommelParams(mu, nu), w)
    lead = val * (mu - nu + 1) * (mu + nu + 1) / w ** (mu + 1)
    assert abs(lead - 1.0) < 1e-5


def test_small_s_series_oracle():
    mu, nu, w = 1.0, 0.0, 2.0
    oracle = (w ** (mu + 1) / ((mu - nu + 1) * (mu + nu + 1))
              * pfq([1.0], [(mu - nu + 3) / 2, (mu + nu + 3) / 2], -w * w / 4))
    assert abs(lommel_small_s(LommelParams(mu, nu), w) - oracle) < 1e-11


def test_small_s_exceptional_raises():
    with pytest.raises(ExceptionalParametersError):
        lommel_small_s(LommelParams(-0.5, 0.5), 1.0)


def test_big_s_even_in_nu():
    a = lommel_big_S(LommelParams(0.7, 0.25), 3.0)
    b = lommel_big_S(LommelParams(0.7, -0.25), 3.0)
    assert abs(a - b) < 1e-10


def test_big_s_against_reference():
    for mu, nu, w in ((0.7, 0.25, 3.0), (1.0, 0.3, 2.0), (-1.25, 0.4, 2.5j)):
        assert abs(lommel_big_S(LommelParams(mu, nu), w) - complex(_mp_big_s(mu, nu, w))) < 1e-9


def test_exceptional_series_oracle():
    # independent 30-term summation of the exceptional log-series + Y term
    nu, w = 1.0, 2.0
    total = 0.0
    for m in range(30):
        total += ((-1.0) ** m * (w / 2.0) ** (2 * m) / math.factorial(m)
                  / sp.gamma(nu + m + 1)
                  * (2.0 * math.log(w / 2.0) - sp.digamma(nu + m + 1) - sp.digamma(m + 1)))
    oracle = (-(2.0 ** (nu - 2)) * math.pi * sp.gamma(nu) * sp.yv(nu, w)
              + w ** nu / 4.0 * sp.gamma(nu) * total)
    assert abs(lommel_big_S(LommelParams(nu - 1.0, nu), w) - oracle) < 1e-9


def test_exceptional_continuity_bracket():
    nu = 1.0
    exc = lommel_big_S(LommelParams(nu - 1.0, nu), 2.0)
    lo = lommel_big_S(LommelParams(nu - 1.0 - 1e-4, nu), 2.0)
    hi = lommel_big_S(LommelParams(nu - 1.0 + 1e-4, nu), 2.0)
    assert abs(0.5 * (lo + hi) - exc) < 1e-3


def test_deep_exceptional_family_unsupported():
    with pytest.raises(ExceptionalParametersError):
        lommel_big_S(LommelParams(-2.7, 0.3), 1.0)


def test_modified_lommel_definitional():
    mu, nu, y = 0.5, 0.5, 1.0
    rot = cmath.exp(1j * cmath.pi * (1 - mu) / 2.0)
    assert abs(modified_lommel_T(LommelParams(mu, nu), y)
               + rot * lommel_big_S(LommelParams(mu, nu), 1j * y)) < 1e-12


def test_modified_lommel_theorem_combination_real():
    # the individual modified values are genuinely complex; the combination
    # entering the principal-value identity is real (brute evaluation)
    import scipy.special as _sp
    s, y = 0.5, 2.0
    t1 = modified_lommel_T(LommelParams(-1.0 - s / 2, -s / 2), y)
    t2 = modified_lommel_T(LommelParams(-2.0 + s / 2, s / 2), y)
    combo = ((2.0 * y) ** (s / 2.0) * _sp.gamma(1.0 + s / 2.0) * t1
             - math.sqrt(math.pi) * (y / 2.0) ** (s / 2.0)
             * _sp.gamma((3.0 - s) / 2.0) * t2)
    assert abs(combo.imag) < 1e-9


def test_modified_lommel_domain():
    with pytest.raises(DomainError):
        modified_lommel_T(LommelParams(0.5, 0.5), 0.0)


def test_inhomogeneous_bessel_ode_residual():
    rng = np.random.default_rng(2)
    h = 1e-4
    for _ in range(10):
        mu = rng.uniform(-0.5, 1.5)
        nu = rng.uniform(0.05, 0.45)
        w = rng.uniform(1.0, 6.0)
        if abs((mu - nu) % 2.0 - 1.0) < 0.05 or abs((mu + nu) % 2.0 - 1.0) < 0.05:
            continue
        f = lambda t: lommel_big_S(LommelParams(mu, nu), t)
        d1 = (f(w + h) - f(w - h)) / (2 * h)
        d2 = (f(w + h) - 2 * f(w) + f(w - h)) / h ** 2
        resid = w * w * d2 + w * d1 + (w * w - nu * nu) * f(w) - w ** (mu + 1)
        assert abs(resid) < 1e-5 * max(1.0, w ** (mu + 1))


def test_large_argument_matches_high_precision_limit():
    mu, nu = -1.25, -0.25
    with mp.workdps(140):
        for y in (16.0, 40.0):
            mine = modified_lommel_T(LommelParams(mu, nu), y)
            d = mp.mpf(10) ** -40
            vals = [_mp_big_s(mu + dm, nu + 1.3 * dn, 1j * y)
                    for dm in (d, -d) for dn in (d, -d)]
            ref = -cmath.exp(1j * cmath.pi * (1 - mu) / 2.0) * complex(sum(vals) / 4)
            assert abs(mine - ref) < 1e-8 * max(1.0, abs(ref))
