"""Analytic-continuation reading of the divergent page-336 series.

The binomial-difference divisor series converges only for Re w > 1; its
Mellin representation, shifted past the first gamma pole, continues it to
Re w > 0 as a contour integral plus one explicit residue.  At w = 1/2 this
assigns a finite value to the divergent series, except at s = 1/2 where the
residue term itself hits a pole.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
import scipy.special as _sp

from .. import arith
from ..gammazeta import zeta
from ..quadrature import integrate_vertical_line
from ..reports import EvalParams, PreconditionViolation
from .tails import SigmaTails

__all__ = ["interpret_divergent_series", "direct_binomial_series", "PoleCollisionError"]


class PoleCollisionError(ArithmeticError):
    pass


def direct_binomial_series(s: complex, x: float, w: complex,
                           N: int = 200_000) -> complex:
    """Classical sum for Re w > 1: sigma_s(n) n^(1/2-w) binomial difference."""
    if w.real <= 1.0:
        raise PreconditionViolation("direct series requires Re w > 1")
    n = np.arange(1, N + 1, dtype=float)
    sig = arith.sigma_array(s, N)[1:]
    a = s + 0.5
    vals = sig * n ** (0.5 - w) * ((x - 1j * n) ** (-a) - (x + 1j * n) ** (-a))
    total = complex(vals.sum())
    # zeta-product tails from the 1/n expansion of the binomial difference
    tails = SigmaTails(s, N)
    rot = cmath.exp(1j * cmath.pi * a / 2.0)   # (-i)^(-a)
    binom = 1.0 + 0.0j
    tail = 0.0 + 0.0j
    for k in range(0, 60):
        if k > 0:
            binom *= -(a + k - 1.0) / k
        coef = rot * 1j ** k - rot.conjugate() * (-1j) ** k
        piece = binom * coef * x ** k * tails.tail(w - 0.5 + a + k)
        tail += piece
        if abs(piece) < 1e-16 and k > 4:
            break
    return total + tail


def interpret_divergent_series(s, x: float, w, p: EvalParams | None = None) -> complex:
    """Continued value of the binomial divisor series for Re w > 0."""
    p = p or EvalParams()
    s = complex(s)
    w = complex(w)
    if s.real <= 0:
        raise PreconditionViolation("requires Re s > 0")
    if w.real <= 0:
        raise PreconditionViolation("requires Re w > 0")
    if x <= 0:
        raise PreconditionViolation("requires x > 0")
    if abs(w - 0.5) < 1e-9 and abs(s - 0.5) < 1e-9:
        raise PoleCollisionError("w = 1/2 collides with the residue pole at s = 1/2")
    eta = 0.25
    d = 1.5 + s.real - eta

    def g(z):
        z = np.atleast_1d(np.asarray(z, dtype=complex))
        out = np.empty(z.shape, dtype=complex)
        for i, zv in enumerate(z):
            out[i] = (complex(_sp.gamma(zv)) * cmath.sin(cmath.pi * zv / 2.0)
                      * zeta(w + zv - 0.5) * zeta(w + zv - s - 0.5)
                      * complex(_sp.gamma(s - zv + 0.5)) * x ** zv)
        return out

    quad = integrate_vertical_line(g, d, tol=p.quad_tol,
                                   decay_rate_hint=math.pi / 2.0,
                                   t_start=p.contour_T_start)
    # integrate_vertical_line returns (1/(2 pi i)) * the line integral
    contour = x ** (-s - 0.5) * complex(_sp.rgamma(s + 0.5)) * 2j * quad.value
    # the crossed gamma pole contributes with a plus sign (verified by
    # contour-independence of the pre-shift representation)
    residue = (2j * cmath.sin(cmath.pi / 2.0 * (s + 0.5))
               * zeta(w + s) * zeta(w))
    return contour + residue
