"""Rotated K-Bessel series against Mellin contour integrals.

eta(x, s) is the odd rotated-argument K-Bessel divisor series; the same
Mellin integrand evaluated right of all poles gives eta directly, while the
interior-strip contour gives kappa = eta minus two explicit gamma-zeta
terms.  A companion check integrates kappa against a rational kernel to
reproduce the subtracted non-rotated series Phi.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
import scipy.special as _sp

from .. import arith
from ..gammazeta import zeta
from ..quadrature import integrate_adaptive, integrate_vertical_line
from ..reports import EvalParams, Member, PreconditionViolation, make_report
from .tails import SigmaTails

__all__ = ["eval_eta_kappa", "eval_kappa_phi", "eta_series", "kappa_value"]


def eta_series(x: float, s: complex) -> tuple[complex, float]:
    """2i sum sigma_(-s)(n) n^(s/2) (rotated K at +pi/4 minus at -pi/4)."""
    ncut = max(12, int(math.ceil((46.0 / (2.0 * math.sqrt(2.0) * math.pi)) ** 2 / x)) + 8)
    n = np.arange(1, ncut + 1)
    sig = arith.sigma_array(-s, ncut)[1:]
    rot = cmath.exp(1j * math.pi / 4.0)
    kp = _sp.kv(s.real, 4.0 * math.pi * rot * np.sqrt(n * x))
    km = _sp.kv(s.real, 4.0 * math.pi * rot.conjugate() * np.sqrt(n * x))
    if abs(s.imag) > 1e-13:
        from ..bessel import BesselKind, bessel
        kp = np.array([bessel(BesselKind.K, s, 4.0 * math.pi * rot * math.sqrt(k * x))
                       for k in n])
        km = np.array([bessel(BesselKind.K, s, 4.0 * math.pi * rot.conjugate() * math.sqrt(k * x))
                       for k in n])
    e_p = cmath.exp(1j * cmath.pi * s / 4.0)
    vals = 2j * sig * n ** (s / 2.0) * (e_p * kp - e_p ** -1.0 * km)
    return complex(vals.sum()), float(np.abs(vals[-1])) + 1e-16 * float(np.abs(vals).sum())


def _mellin_integrand(s: complex, x: float):
    def g(z):
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        out = np.empty(z.shape, dtype=complex)
        for i, zv in enumerate(z):
            out[i] = (2.0 * cmath.sin(cmath.pi / 2.0 * (zv - s / 2.0))
                      * (2.0 * cmath.pi) ** (-2.0 * zv)
                      * complex(_sp.gamma(zv - s / 2.0)) * complex(_sp.gamma(zv + s / 2.0))
                      * zeta(zv - s / 2.0) * zeta(zv + s / 2.0) * x ** (-zv))
        return out
    return g


def _subtracted_terms(x: float, s: complex) -> complex:
    return (1.0 / (2.0 * math.pi ** 2 * x)
            * (complex(_sp.gamma(1.0 + s)) * zeta(1.0 + s)
               * (2.0 * math.pi * math.sqrt(x)) ** (-s)
               + complex(_sp.gamma(1.0 - s)) * zeta(1.0 - s)
               * cmath.cos(cmath.pi * s / 2.0) * (2.0 * math.pi * math.sqrt(x)) ** s))


def kappa_value(x: float, s: complex, tol: float = 1e-9) -> complex:
    """eta minus its two leading gamma-zeta terms (interior-strip value)."""
    return eta_series(x, s)[0] - _subtracted_terms(x, s)


def eval_eta_kappa(s, x: float, p: EvalParams | None = None, tol: float = 1e-7):
    """Rotated series vs exterior contour vs interior contour + residues."""
    p = p or EvalParams()
    s = complex(s)
    if not -1.0 < s.real < 1.0 or abs(s) < 1e-12:
        raise PreconditionViolation("requires -1 < Re s < 1, s != 0")
    if x <= 0:
        raise PreconditionViolation("requires x > 0")
    inner = min(p.quad_tol, tol * 1e-1)
    val_series, err_series = eta_series(x, s)
    g = _mellin_integrand(s, x)
    c_out = 1.0 + abs(s.real) / 2.0 + 0.25
    q_out = integrate_vertical_line(g, c_out, tol=inner, decay_rate_hint=math.pi / 2.0,
                                    t_start=p.contour_T_start)
    c_in = 0.5
    q_in = integrate_vertical_line(g, c_in, tol=inner, decay_rate_hint=math.pi / 2.0,
                                   t_start=p.contour_T_start)
    reassembled = q_in.value + _subtracted_terms(x, s)
    members = [Member("rotated-series", val_series, err_series),
               Member("exterior-contour", q_out.value, q_out.err_estimate),
               Member("interior-contour-plus-residues", reassembled, q_in.err_estimate)]
    return make_report("eta-contour", {"s": s, "x": x}, members, tol,
                       notes={"evals": q_out.evals + q_in.evals})


def eval_kappa_phi(s, x: float, p: EvalParams | None = None, tol: float = 1e-6):
    """Non-rotated subtracted series Phi against the kappa kernel integral."""
    p = p or EvalParams()
    s = complex(s)
    if not -1.0 < s.real < 1.0 or abs(s) < 1e-12:
        raise PreconditionViolation("requires -1 < Re s < 1, s != 0")
    if x <= 0:
        raise PreconditionViolation("requires x > 0")
    inner = min(p.quad_tol, tol * 1e-2)

    ncut = max(12, int(math.ceil((46.0 / (4.0 * math.pi)) ** 2 / x)) + 8)
    n = np.arange(1, ncut + 1)
    sig = arith.sigma_array(-s, ncut)[1:]
    kv = _sp.kv(s.real, 4.0 * math.pi * np.sqrt(n * x))
    phi_series = (2.0 * complex(np.sum(sig * n ** (s / 2.0) * kv))
                  - complex(_sp.gamma(1.0 + s)) * zeta(1.0 + s)
                  * x ** (-1.0 - s / 2.0) / (2.0 * math.pi) ** (2.0 + s)
                  - complex(_sp.gamma(1.0 - s)) * zeta(1.0 - s)
                  * x ** (-1.0 + s / 2.0) / (2.0 * math.pi) ** (2.0 - s))

    def integrand(u):
        u = np.atleast_1d(np.asarray(u, dtype=float))
        t = u * u
        kap = np.array([kappa_value(tv, s) for tv in t])
        return 2.0 * u ** (3.0 + s) * kap / (u ** 4 + x * x)

    T = max(20.0, 4.0 * x)
    quad = integrate_adaptive(integrand, 1e-2, math.sqrt(T), tol=inner, max_panels=2048)
    # algebraic tail from the subtracted terms (the rotated series part is
    # exponentially small beyond T)
    c1 = complex(_sp.gamma(1.0 + s)) * zeta(1.0 + s) * (2.0 * math.pi) ** (-s)
    c2 = (complex(_sp.gamma(1.0 - s)) * zeta(1.0 - s)
          * cmath.cos(cmath.pi * s / 2.0) * (2.0 * math.pi) ** s)
    tail = -c1 / (2.0 * math.pi ** 2) * (math.pi / 2.0 - math.atan(T / x)) / x
    piece = 0.0 + 0.0j
    for k in range(0, 40):
        term = (-1.0) ** k * x ** (2 * k) * T ** (s - 1.0 - 2 * k) / (1.0 + 2 * k - s)
        piece += term
        if abs(term) < inner * 1e-2 and k > 2:
            break
    tail -= c2 / (2.0 * math.pi ** 2) * piece
    # head below u = 1e-2: integrand O(u^(2 - |s|)), bounded crudely
    head_bound = 1e-2 ** (3.0 - abs(s.real)) * max(1.0, abs(kappa_value(1e-4, s))) / (x * x)
    integral = x ** (-s / 2.0) / math.pi * (quad.value + tail)
    members = [Member("phi-series", phi_series, 1e-12),
               Member("kappa-kernel-integral", integral,
                      (quad.err_estimate + head_bound) / math.pi)]
    return make_report("kappa-phi", {"s": s, "x": x}, members, tol,
                       notes={"quad_evals": quad.evals, "T": T})
