"""Gamma family, Riemann/Hurwitz zeta, Dirichlet L-functions, xi functions.

Gamma and digamma are delegated to scipy's complex implementations behind a
pole-checking facade.  The zeta family is evaluated by Euler-Maclaurin
summation, which scipy does not provide for complex arguments; the shift
count grows with |Im z| so the tested strip |Im z| <= 200 stays at full
double precision.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.special as _sp

__all__ = [
    "PoleAtNonpositiveIntegerError", "PoleAtOneError", "UnsupportedError",
    "ZetaLikeValue", "XiPair",
    "gamma", "log_gamma", "digamma", "riemann_zeta", "zeta", "zeta_derivative",
    "hurwitz_zeta", "hurwitz_zeta_ds", "dirichlet_l", "stieltjes_constant",
    "xi_functions", "zeta_shifted_product",
]

EULER_GAMMA = 0.5772156649015328606065120900824024


class PoleAtNonpositiveIntegerError(ZeroDivisionError):
    pass


class PoleAtOneError(ZeroDivisionError):
    pass


class UnsupportedError(ValueError):
    pass


@dataclass(frozen=True)
class ZetaLikeValue:
    value: complex
    at_pole: bool = False

    def __complex__(self) -> complex:
        return complex(self.value)


@dataclass(frozen=True)
class XiPair:
    xi_value: complex
    big_xi_value: complex


def _near_nonpositive_int(z: complex, tol: float = 1e-13) -> bool:
    if z.real > 0.5:
        return False
    return abs(z.imag) < tol and abs(z.real - round(z.real)) < tol


def gamma(z) -> complex:
    """Complex Gamma function; raises at the poles z = 0, -1, -2, ..."""
    z = complex(z)
    if _near_nonpositive_int(z):
        raise PoleAtNonpositiveIntegerError(f"Gamma pole at z={z}")
    return complex(_sp.gamma(z))


def log_gamma(z) -> complex:
    z = complex(z)
    if _near_nonpositive_int(z):
        raise PoleAtNonpositiveIntegerError(f"log Gamma pole at z={z}")
    return complex(_sp.loggamma(z))


def digamma(z) -> complex:
    z = complex(z)
    if _near_nonpositive_int(z):
        raise PoleAtNonpositiveIntegerError(f"digamma pole at z={z}")
    return complex(_sp.digamma(z))


# Bernoulli numbers B_2 .. B_24
_BERN = [
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730,
    7.0 / 6, -3617.0 / 510, 43867.0 / 798, -174611.0 / 330,
    854513.0 / 138, -236364091.0 / 2730,
]
_EM_BLOCKS = 12


def _em_shift(z: complex) -> int:
    return int(math.ceil(15 + abs(z.imag) / 2))


def _zeta_em(s: complex) -> complex:
    """Euler-Maclaurin zeta for Re s > -1 (accurate for moderate |Im s|)."""
    N = _em_shift(s)
    n = np.arange(1, N)
    total = complex(np.sum(n ** (-s)))
    total += N ** (1.0 - s) / (s - 1.0)
    total += 0.5 * N ** (-s)
    poch = s  # (s)_{2k-1} built incrementally
    npow = N ** (-s - 1.0)
    for k in range(1, _EM_BLOCKS + 1):
        total += _BERN[k - 1] / math.factorial(2 * k) * poch * npow
        poch *= (s + 2 * k - 1) * (s + 2 * k)
        npow /= N * N
    return total


def zeta(s) -> complex:
    """Riemann zeta, s != 1; reflection is applied for Re s < -0.5."""
    s = complex(s)
    if abs(s - 1.0) < 1e-13:
        raise PoleAtOneError("zeta pole at s=1")
    if s.real >= -0.5:
        return _zeta_em(s)
    # asymmetric functional equation
    s1 = 1.0 - s
    return (2.0 ** s * cmath.pi ** (s - 1.0) * cmath.sin(cmath.pi * s / 2.0)
            * complex(_sp.gamma(s1)) * _zeta_em(s1))


def riemann_zeta(z) -> ZetaLikeValue:
    z = complex(z)
    if abs(z - 1.0) < 1e-13:
        return ZetaLikeValue(complex("inf"), at_pole=True)
    return ZetaLikeValue(zeta(z))


def _zeta_em_ds(s: complex) -> complex:
    """d/ds of the Euler-Maclaurin evaluation (Re s > -1)."""
    N = _em_shift(s)
    n = np.arange(2, N)
    total = -complex(np.sum(np.log(n) * n ** (-s))) if N > 2 else 0.0 + 0.0j
    lnN = math.log(N)
    total += N ** (1.0 - s) * (-lnN / (s - 1.0) - 1.0 / (s - 1.0) ** 2)
    total += -0.5 * lnN * N ** (-s)
    poch = s
    dpoch = 1.0 + 0.0j  # d/ds (s)_{2k-1}
    npow = N ** (-s - 1.0)
    for k in range(1, _EM_BLOCKS + 1):
        total += _BERN[k - 1] / math.factorial(2 * k) * (dpoch - poch * lnN) * npow
        dpoch = dpoch * (s + 2 * k - 1) * (s + 2 * k) + poch * (2 * s + 4 * k - 1)
        poch *= (s + 2 * k - 1) * (s + 2 * k)
        npow /= N * N
    return total


def zeta_derivative(z) -> complex:
    """zeta'(z) by differentiated Euler-Maclaurin; reflection for Re z < -0.5."""
    z = complex(z)
    if abs(z - 1.0) < 1e-13:
        raise PoleAtOneError("zeta' pole at z=1")
    if z.real >= -0.5:
        return _zeta_em_ds(z)
    s1 = 1.0 - z
    g = complex(_sp.gamma(s1))
    sin_half = cmath.sin(cmath.pi * z / 2.0)
    cos_half = cmath.cos(cmath.pi * z / 2.0)
    base = 2.0 ** z * cmath.pi ** (z - 1.0) * g
    chi = base * sin_half
    chi_ds = base * ((math.log(2.0) + math.log(math.pi) - complex(_sp.digamma(s1))) * sin_half
                     + 0.5 * cmath.pi * cos_half)
    return chi_ds * _zeta_em(s1) - chi * _zeta_em_ds(s1)


def hurwitz_zeta(z, a: float) -> ZetaLikeValue:
    """Hurwitz zeta(z, a) for 0 < a <= 1 by Euler-Maclaurin."""
    z = complex(z)
    if not 0.0 < a <= 1.0:
        raise ValueError("hurwitz_zeta requires 0 < a <= 1")
    if abs(z - 1.0) < 1e-13:
        return ZetaLikeValue(complex("inf"), at_pole=True)
    N = _em_shift(z)
    n = np.arange(0, N) + a
    total = complex(np.sum(n ** (-z)))
    Na = N + a
    total += Na ** (1.0 - z) / (z - 1.0)
    total += 0.5 * Na ** (-z)
    poch = z
    npow = Na ** (-z - 1.0)
    for k in range(1, _EM_BLOCKS + 1):
        total += _BERN[k - 1] / math.factorial(2 * k) * poch * npow
        poch *= (z + 2 * k - 1) * (z + 2 * k)
        npow /= Na * Na
    return ZetaLikeValue(total)


def hurwitz_zeta_ds(z, a: float) -> complex:
    """d/dz zeta(z, a); the derivative mode of the Hurwitz evaluation."""
    z = complex(z)
    if not 0.0 < a <= 1.0:
        raise ValueError("hurwitz_zeta_ds requires 0 < a <= 1")
    if abs(z - 1.0) < 1e-13:
        raise PoleAtOneError("hurwitz zeta pole at z=1")
    N = _em_shift(z)
    n = np.arange(0, N) + a
    total = -complex(np.sum(np.log(n) * n ** (-z)))
    Na = N + a
    lnNa = math.log(Na)
    total += Na ** (1.0 - z) * (-lnNa / (z - 1.0) - 1.0 / (z - 1.0) ** 2)
    total += -0.5 * lnNa * Na ** (-z)
    poch = z
    dpoch = 1.0 + 0.0j
    npow = Na ** (-z - 1.0)
    for k in range(1, _EM_BLOCKS + 1):
        total += _BERN[k - 1] / math.factorial(2 * k) * (dpoch - poch * lnNa) * npow
        dpoch = dpoch * (z + 2 * k - 1) * (z + 2 * k) + poch * (2 * z + 4 * k - 1)
        poch *= (z + 2 * k - 1) * (z + 2 * k)
        npow /= Na * Na
    return total


def dirichlet_l(z, chi) -> complex:
    """L(z, chi) by the Hurwitz decomposition q^-z * sum_h chi(h) zeta(z, h/q)."""
    z = complex(z)
    q = chi.modulus
    if chi.is_principal and abs(z - 1.0) < 1e-13:
        raise PoleAtOneError("L(s, principal chi) pole at s=1")
    if not chi.is_principal and abs(z - 1.0) < 1e-6:
        # the simple poles of the Hurwitz terms cancel; use the Laurent constant
        return -sum(chi.values[h] * complex(_sp.digamma(h / q))
                    for h in range(1, q)) / q
    total = 0.0 + 0.0j
    for h in range(1, q + 1):
        c = chi.values[h % q]
        if c != 0:
            total += c * hurwitz_zeta(z, h / q).value
    return q ** (-z) * total


@lru_cache(maxsize=None)
def stieltjes_constant(n: int) -> float:
    """Stieltjes constants gamma_0, gamma_1 from the defining limit.

    The tail of the limit is removed with Euler-Maclaurin corrections so a
    modest N already reaches double precision.
    """
    if n not in (0, 1):
        raise UnsupportedError("only gamma_0 and gamma_1 are provided")
    N = 200_000
    k = np.arange(1, N + 1, dtype=float)
    if n == 0:
        a = math.fsum(1.0 / k) - math.log(N)
        return a - 1.0 / (2.0 * N) + 1.0 / (12.0 * N ** 2) - 1.0 / (120.0 * N ** 4)
    lnN = math.log(N)
    a = math.fsum(np.log(k) / k) - lnN ** 2 / 2.0
    # f = log x / x: f(N)/2 and B2/2! f'(N) corrections
    return a - lnN / (2.0 * N) - (1.0 - lnN) / (12.0 * N ** 2)


def zeta_times_s_minus_1(s) -> complex:
    """(s-1)*zeta(s) with the removable singularity at s=1 handled."""
    s = complex(s)
    if abs(s - 1.0) < 1e-6:
        u = s - 1.0
        g1 = stieltjes_constant(1)
        return 1.0 + EULER_GAMMA * u - g1 * u * u
    return (s - 1.0) * zeta(s)


def xi_functions(s) -> XiPair:
    """Riemann xi(s) and the associated Xi(t) = xi(1/2 + i*s)."""
    s = complex(s)

    def xi(w: complex) -> complex:
        # (1/2) w (w-1) pi^{-w/2} Gamma(w/2) zeta(w), written with
        # w*Gamma(w/2) = 2*Gamma(w/2+1) so w=0 is regular too
        return (cmath.pi ** (-w / 2.0) * complex(_sp.gamma(w / 2.0 + 1.0))
                * zeta_times_s_minus_1(w))

    return XiPair(xi_value=xi(s), big_xi_value=xi(0.5 + 1j * s))


def zeta_shifted_product(w, mu) -> complex:
    """zeta(w) * zeta(w - mu): the Dirichlet series of the sigma_mu weights."""
    return zeta(w) * zeta(complex(w) - complex(mu))
