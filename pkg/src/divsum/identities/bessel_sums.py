"""K-Bessel divisor series: Cohen's expansion and the rotated-argument link.

Both identities equate an exponentially convergent K-Bessel series with
zeta values plus a slowly convergent rational divisor sum; the rational
side's tail is resummed through zeta-product coefficients.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
import scipy.special as _sp

from .. import arith
from ..gammazeta import zeta
from ..reports import EvalParams, Member, PreconditionViolation, make_report
from .tails import SigmaTails, stable_power_difference

__all__ = ["eval_cohen", "eval_lambda_phi", "phi_rotated_series"]


def _kv(nu: float, z: np.ndarray) -> np.ndarray:
    return _sp.kv(nu, z)


def eval_cohen(s, x: float, k: int, p: EvalParams | None = None, tol: float = 1e-8):
    """K-Bessel series against the k-indexed zeta/rational expansion."""
    p = p or EvalParams()
    s = complex(s)
    sigma = s.real
    if sigma < 0:
        raise PreconditionViolation("requires Re s >= 0")
    if abs(s.imag) < 1e-12 and abs(s.real - round(s.real)) < 1e-12:
        raise PreconditionViolation("integer s excluded")
    if k < math.floor((sigma + 1.0) / 2.0):
        raise PreconditionViolation("k must exceed floor((sigma+1)/2) - 1")
    inner = min(p.series_policy.tol, tol * 1e-2)
    if abs(x - round(x)) < p.integer_snap_delta:
        raise PreconditionViolation("integer x excluded (pole in the rational sum)")

    # side A: 8 pi x^(s/2) sum sigma_-s(n) n^(s/2) K_s(4 pi sqrt(nx))
    ncut = max(16, int(math.ceil((44.0 / (4.0 * math.pi)) ** 2 / x)) + 8)
    n = np.arange(1, ncut + 1)
    sig = arith.sigma_array(-s, ncut)[1:]
    kvals = _kv(s.real, 4.0 * math.pi * np.sqrt(n * x)) if abs(s.imag) < 1e-14 else \
        np.array([_sp.kv(s.real, v) for v in 4.0 * math.pi * np.sqrt(n * x)])
    side_a = 8.0 * math.pi * x ** (s / 2.0) * complex(np.sum(sig * n ** (s / 2.0) * kvals))

    # side B
    sin_h = cmath.sin(cmath.pi * s / 2.0)
    cos_h = cmath.cos(cmath.pi * s / 2.0)
    a_fac = x ** (s - 1.0) / sin_h - (2.0 * math.pi) ** (1.0 - s) * complex(_sp.gamma(s))
    b_fac = (2.0 / x * (2.0 * math.pi) ** (-s - 1.0) * complex(_sp.gamma(s + 1.0))
             - cmath.pi * x ** s / cos_h)
    finite = sum(zeta(2.0 * j) * zeta(2.0 * j - s) * x ** (2 * j - 1)
                 for j in range(1, k + 1))
    N = max(int(2 * x) + 20, 48)
    tails = SigmaTails(-s, N)
    nn = np.arange(1, N + 1, dtype=float)
    diff = stable_power_difference(s - 2.0 * k, nn, x) / (nn + x)
    rational = complex(np.sum(tails.prefix * diff))
    tail = 0.0 + 0.0j
    for j in range(0, 60):
        piece = x ** (2 * j) * (tails.tail(2.0 * k - s + 2.0 + 2 * j)
                                - x ** (s - 2.0 * k) * tails.tail(2.0 + 2 * j))
        tail += piece
        if abs(piece) < inner * 1e-2 and j > 2:
            break
    side_b = (a_fac * zeta(s) + b_fac * zeta(s + 1.0)
              + 2.0 / sin_h * (finite + x ** (2 * k + 1) * (rational + tail)))
    members = [Member("bessel-series", side_a, float(abs(sig[-1] * kvals[-1])) + 1e-15),
               Member("zeta-rational", side_b, inner)]
    return make_report("cohen", {"s": s, "x": x, "k": k}, members, tol,
                       notes={"bessel_terms": ncut, "rational_cutoff": N})


def phi_rotated_series(z: float, s: complex, nmax: int = 40_000) -> tuple[complex, float]:
    """2 sum sigma_-s(n) n^(s/2) (e^(i pi s/4) K_s(4 pi e^(i pi/4) sqrt(nz)) + conj-rotated)."""
    ncut = max(12, int(math.ceil((44.0 / (2.0 * math.sqrt(2.0) * math.pi)) ** 2 / z)) + 8)
    ncut = min(ncut, nmax)
    n = np.arange(1, ncut + 1)
    sig = arith.sigma_array(-s, ncut)[1:]
    rot = cmath.exp(1j * math.pi / 4.0)
    arg_p = 4.0 * math.pi * rot * np.sqrt(n * z)
    arg_m = 4.0 * math.pi * rot.conjugate() * np.sqrt(n * z)
    kp = _sp.kv(s.real, arg_p) if abs(s.imag) < 1e-14 else \
        np.array([_sp.kv(s.real, v) for v in arg_p])
    km = _sp.kv(s.real, arg_m) if abs(s.imag) < 1e-14 else \
        np.array([_sp.kv(s.real, v) for v in arg_m])
    e_p = cmath.exp(1j * cmath.pi * s / 4.0)
    vals = 2.0 * sig * n ** (s / 2.0) * (e_p * kp + e_p ** -1.0 * km)
    return complex(vals.sum()), float(np.abs(vals[-1]))


def eval_lambda_phi(z: float, s, p: EvalParams | None = None, tol: float = 1e-8):
    """Rotated K-Bessel series against the rational zeta expansion."""
    p = p or EvalParams()
    s = complex(s)
    if not -0.5 < s.real < 0.5:
        raise PreconditionViolation("requires -1/2 < Re s < 1/2")
    if z <= 0:
        raise PreconditionViolation("requires z > 0")
    inner = min(p.series_policy.tol, tol * 1e-2)
    phi, phi_err = phi_rotated_series(z, s)
    side_a = z ** (-s / 2.0) * phi

    N = max(int(2 * z) + 20, 48)
    tails = SigmaTails(-s, N)
    n = np.arange(1, N + 1, dtype=float)
    rational = complex(np.sum(tails.prefix / (z * z + n * n)))
    tail = 0.0 + 0.0j
    for j in range(0, 60):
        piece = (-1.0) ** j * z ** (2 * j) * tails.tail(2.0 + 2 * j)
        tail += piece
        if abs(piece) < inner * 1e-2 and j > 2:
            break
    side_b = (-(2.0 * math.pi * z) ** (-s) * complex(_sp.gamma(s)) * zeta(s)
              + zeta(s) / (2.0 * math.pi * z) - 0.5 * zeta(1.0 + s)
              + z / math.pi * (rational + tail))
    members = [Member("rotated-bessel", side_a, phi_err),
               Member("zeta-rational", side_b, inner)]
    return make_report("lambda-phi", {"z": z, "s": s}, members, tol,
                       notes={"rational_cutoff": N})
