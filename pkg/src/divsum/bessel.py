"""Bessel functions of complex order, the Struve function, and the composite
kernels built from them.

Real orders (any sign) go to scipy's AMOS wrappers, which accept complex
arguments at machine precision.  Genuinely complex orders fall back to the
classical power series below the crossover radius 20 + |nu|**2 and to the
large-argument expansions beyond it; Y and K of near-integer complex order
use an order offset of 1e-5 with Richardson averaging so a single code path
covers the whole order plane.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np
import scipy.special as _sp

from .quadrature import integrate_adaptive

__all__ = [
    "BesselKind", "KernelKind", "DomainError", "bessel", "struve_h",
    "composite_kernel", "bessel_jyk_arrays",
]


class DomainError(ValueError):
    pass


class BesselKind(enum.Enum):
    J = "J"
    Y = "Y"
    I = "I"
    K = "K"


_REAL_TOL = 1e-14
_INT_EPS = 1e-5   # order offset for integer-order Y/K limits


def _is_real(w: complex) -> bool:
    return abs(w.imag) <= _REAL_TOL * (1.0 + abs(w.real))


def _crossover(nu: complex) -> float:
    # balance of power-series cancellation (grows like e^(2|z|) in units of
    # the last kept bit) against the tail expansions (remainder ~ e^(-2|z|));
    # measured optimum sits well below the series-everywhere radius
    return 17.0 + 0.35 * abs(nu) ** 2


def _series_ji(nu: complex, z: complex, signed: bool) -> complex:
    """Power series for J (signed=True) or I (signed=False)."""
    half = z / 2.0
    try:
        lead = cmath.exp(nu * cmath.log(half)) / complex(_sp.gamma(nu + 1.0))
    except (ValueError, ZeroDivisionError):
        lead = 0.0
    if not np.isfinite(lead.real) or not np.isfinite(lead.imag):
        lead = 0.0  # 1/Gamma at a pole: first term vanishes
        # restart the recurrence at the first nonvanishing term
        m0 = int(round(-nu.real))
        term = cmath.exp((nu + 2 * m0) * cmath.log(half)) / (
            complex(_sp.gamma(m0 + 1.0)) * complex(_sp.gamma(nu + m0 + 1.0)))
        total = term
        ratio = -half * half if signed else half * half
        m = m0
        while m < m0 + 400:
            m += 1
            term *= ratio / (m * (nu + m))
            total += term
            if abs(term) < 1e-18 * (1.0 + abs(total)):
                break
        return total
    term = lead
    total = term
    ratio = -half * half if signed else half * half
    m = 0
    while m < 400:
        m += 1
        term *= ratio / (m * (nu + m))
        total += term
        if abs(term) < 1e-18 * (1.0 + abs(total)):
            break
    return total


def _hankel_coeff(nu: complex, n: int) -> complex:
    """(nu, n) = Gamma(nu+n+1/2) / (n! Gamma(nu-n+1/2)), paired with (2z)^-n."""
    c = 1.0 + 0.0j
    for j in range(1, n + 1):
        c *= 4.0 * nu * nu - (2 * j - 1) ** 2
    return c / (4.0 ** n * math.factorial(n))


def _asym_jy(nu: complex, z: complex):
    """Large-|z| values (J, Y) from the Hankel expansions."""
    w = z - 0.5 * cmath.pi * nu - 0.25 * cmath.pi
    even = 0.0 + 0.0j
    odd = 0.0 + 0.0j
    prev = math.inf
    for n in range(0, 30):
        c = _hankel_coeff(nu, n) / (2.0 * z) ** n
        if abs(c) > prev:   # divergent tail reached
            break
        prev = abs(c)
        if n % 2 == 0:
            even += c * (-1) ** (n // 2)
        else:
            odd += c * (-1) ** ((n - 1) // 2)
    amp = cmath.sqrt(2.0 / (cmath.pi * z))
    j = amp * (cmath.cos(w) * even - cmath.sin(w) * odd)
    y = amp * (cmath.sin(w) * even + cmath.cos(w) * odd)
    return j, y


def _asym_k(nu: complex, z: complex) -> complex:
    total = 0.0 + 0.0j
    prev = math.inf
    for n in range(0, 40):
        c = _hankel_coeff(nu, n) / (2.0 * z) ** n
        if abs(c) > prev:
            break
        prev = abs(c)
        total += c
    return cmath.sqrt(cmath.pi / (2.0 * z)) * cmath.exp(-z) * total


def _j_complex_order(nu: complex, z: complex) -> complex:
    if abs(z) <= _crossover(nu):
        return _series_ji(nu, z, signed=True)
    return _asym_jy(nu, z)[0]


def _y_complex_order(nu: complex, z: complex) -> complex:
    if abs(z) > _crossover(nu):
        return _asym_jy(nu, z)[1]

    def y_offset(v):
        return (_series_ji(v, z, True) * cmath.cos(cmath.pi * v)
                - _series_ji(-v, z, True)) / cmath.sin(cmath.pi * v)

    if abs(cmath.sin(cmath.pi * nu)) < 1e-4:
        return 0.5 * (y_offset(nu + _INT_EPS) + y_offset(nu - _INT_EPS))
    return y_offset(nu)


def _k_quadrature(nu: complex, z: complex) -> complex:
    """K via the cosh integral; needs Re z > 0 and moderate |arg z|."""
    T = math.acosh(1.0 + 50.0 / z.real)

    def integrand(t):
        t = np.asarray(t)
        return np.exp(-z * np.cosh(t)) * np.cosh(nu * t)

    return integrate_adaptive(integrand, 0.0, T, tol=1e-13, max_panels=2048).value


def _k_complex_order(nu: complex, z: complex) -> complex:
    az = abs(z)
    if az >= 18.0:
        return _asym_k(nu, z)
    if az <= 8.0:
        def k_offset(v):
            return (cmath.pi / 2.0) * (_series_ji(-v, z, False)
                                       - _series_ji(v, z, False)) / cmath.sin(cmath.pi * v)
        if abs(cmath.sin(cmath.pi * nu)) < 1e-4:
            return 0.5 * (k_offset(nu + _INT_EPS) + k_offset(nu - _INT_EPS))
        return k_offset(nu)
    if z.real > 0 and abs(z.imag) <= z.real * math.tan(math.pi / 3):
        return _k_quadrature(nu, z)
    # rare corner: complex order, mid-size modulus, argument near the cut
    import mpmath
    with mpmath.workdps(25):
        return complex(mpmath.besselk(mpmath.mpc(nu), mpmath.mpc(z)))


def bessel(kind: BesselKind, nu, z) -> complex:
    """J, Y, I, or K of complex order nu at complex argument z."""
    nu = complex(nu)
    z = complex(z)
    if z == 0:
        if kind is BesselKind.J and nu.real > 0:
            return 0.0
        if kind is BesselKind.J and nu == 0:
            return 1.0
        if kind is BesselKind.I and nu.real > 0:
            return 0.0
        if kind is BesselKind.I and nu == 0:
            return 1.0
        raise DomainError(f"{kind.value} Bessel undefined at z=0")
    if kind in (BesselKind.Y, BesselKind.K) and abs(abs(cmath.phase(z)) - math.pi) < 1e-12 \
            and z.real < 0:
        raise DomainError("argument on the branch cut |arg z| = pi")
    if _is_real(nu):
        v = nu.real
        zz = z.real if _is_real(z) and (z.real > 0 or kind in (BesselKind.J, BesselKind.I)) else z
        fn = {BesselKind.J: _sp.jv, BesselKind.Y: _sp.yv,
              BesselKind.I: _sp.iv, BesselKind.K: _sp.kv}[kind]
        out = complex(fn(v, zz))
        if np.isnan(out.real) and not _is_real(z):
            out = complex(fn(v, z))
        return out
    if kind is BesselKind.J:
        return _j_complex_order(nu, z)
    if kind is BesselKind.I:
        if abs(z) <= _crossover(nu):
            return _series_ji(nu, z, signed=False)
        # I from J on a quarter-turn that lands inside |arg| <= pi/2,
        # keeping the rotated argument away from the J expansion's cut
        if cmath.phase(z) >= 0.0:
            return cmath.exp(0.5j * cmath.pi * nu) * _j_complex_order(nu, z * -1j)
        return cmath.exp(-0.5j * cmath.pi * nu) * _j_complex_order(nu, z * 1j)
    if kind is BesselKind.Y:
        return _y_complex_order(nu, z)
    return _k_complex_order(nu, z)


def bessel_jyk_arrays(nu: float, x: np.ndarray):
    """(J, Y, K) of real order nu on a positive real array: bulk fast path."""
    x = np.asarray(x, dtype=float)
    return _sp.jv(nu, x), _sp.yv(nu, x), _sp.kv(nu, x)


def struve_h(nu, x: float) -> complex:
    """Struve H function for x > 0."""
    nu = complex(nu)
    if x <= 0:
        raise DomainError("struve_h requires x > 0")
    if _is_real(nu):
        return complex(_sp.struve(nu.real, x))
    if x <= 30.0:
        # power series sum_m (-1)^m (x/2)^(2m+nu+1) / (Gamma(m+3/2) Gamma(nu+m+3/2))
        half = x / 2.0
        term = cmath.exp((nu + 1.0) * cmath.log(half)) / (
            complex(_sp.gamma(1.5)) * complex(_sp.gamma(nu + 1.5)))
        total = term
        for m in range(1, 300):
            term *= -half * half / ((m + 0.5) * (nu + m + 0.5))
            total += term
            if abs(term) < 1e-18 * (1.0 + abs(total)):
                break
        return total
    # H_nu = Y_nu + asymptotic series (DLMF 11.6.1)
    total = 0.0 + 0.0j
    prev = math.inf
    for m in range(0, 25):
        t = (complex(_sp.gamma(m + 0.5)) * (x / 2.0) ** (nu - 2 * m - 1)
             / complex(_sp.gamma(nu + 0.5 - m)))
        if abs(t) > prev:
            break
        prev = abs(t)
        total += t
    return bessel(BesselKind.Y, nu, x) + total / math.pi


# ------------------------------------------------------------ kernel algebra

@dataclass(frozen=True)
class KernelKind:
    tag: str
    lam: int = 0

    M_TILDE = None  # populated below
    # (class attributes assigned after definition)


KernelKind.M_TILDE = KernelKind("MTilde")
KernelKind.L_KERN = KernelKind("LKern")
KernelKind.M_RAM = KernelKind("MRam")
KernelKind.H_RAM = KernelKind("HRam")
KernelKind.I_RAM = KernelKind("IRam")
KernelKind.PHI_GUINAND = KernelKind("PhiGuinand")
KernelKind.FIRST_KOSH = KernelKind("FirstKosh")
KernelKind.SECOND_KOSH = KernelKind("SecondKosh")


def g_cap(lam: int) -> KernelKind:
    return KernelKind("GCap", lam)


def f_cap(lam: int) -> KernelKind:
    return KernelKind("FCap", lam)


def g_tilde(lam: int) -> KernelKind:
    return KernelKind("GTilde", lam)


def _jyk(nu, z):
    return (bessel(BesselKind.J, nu, z), bessel(BesselKind.Y, nu, z),
            bessel(BesselKind.K, nu, z))


def composite_kernel(kind: KernelKind, order, z) -> complex:
    """Linear Bessel combinations used as summation kernels.

    For GCap/FCap/GTilde the `order` argument is the shift parameter s: the
    Bessel order is s + lam while the trigonometric weights stay at s.
    """
    s = complex(order)
    z = complex(z)
    tag = kind.tag
    if tag == "MTilde":
        j, y, k = _jyk(s, z)
        return 2.0 / math.pi * k - y
    if tag == "LKern":
        j, y, k = _jyk(s, z)
        return -2.0 / math.pi * k - y
    if tag == "MRam":
        j, y, k = _jyk(s, z)
        return 2.0 / math.pi * k + y + j * cmath.tan(cmath.pi * s / 2.0)
    if tag == "HRam":
        j, y, k = _jyk(s, z)
        return 2.0 / math.pi * k + y - j / cmath.tan(cmath.pi * s / 2.0)
    if tag == "IRam":
        j, y, k = _jyk(s, z)
        return -y + 2.0 / math.pi * cmath.cos(cmath.pi * s) * k
    if tag == "PhiGuinand":
        j, y, k = _jyk(s, z)
        return (cmath.cos(cmath.pi * s / 2.0) * j
                - cmath.sin(cmath.pi * s / 2.0) * (y + 2.0 / math.pi * k))
    if tag == "FirstKosh":
        u = 2.0 * cmath.sqrt(z)
        j, y, k = _jyk(2.0 * s, u)
        mt = 2.0 / math.pi * k - y
        return cmath.cos(s * cmath.pi) * mt - cmath.sin(s * cmath.pi) * j
    if tag == "SecondKosh":
        u = 2.0 * cmath.sqrt(z)
        j, y, k = _jyk(2.0 * s, u)
        lk = -2.0 / math.pi * k - y
        return cmath.sin(s * cmath.pi) * j - cmath.cos(s * cmath.pi) * lk
    nu = s + kind.lam
    sign = (-1.0) ** kind.lam
    j, y, k = _jyk(nu, z)
    if tag == "GCap":
        return (-j * cmath.sin(cmath.pi * s / 2.0)
                - (y - sign * 2.0 / math.pi * k) * cmath.cos(cmath.pi * s / 2.0))
    if tag == "FCap":
        return (-j * cmath.sin(cmath.pi * s / 2.0)
                - (y + sign * 2.0 / math.pi * k) * cmath.cos(cmath.pi * s / 2.0))
    if tag == "GTilde":
        return (j * cmath.cos(cmath.pi * s / 2.0)
                - (y - sign * 2.0 / math.pi * k) * cmath.sin(cmath.pi * s / 2.0))
    raise ValueError(f"unknown kernel kind {tag!r}")
