"""Half-odd-integer specialisations where the two-part expansion coalesces.

At s = 2m + 1/2 the finite and infinite pieces of the main transformation
merge into a single series of rational/hypergeometric terms.  Eight variants
are covered: the two base identities (sine with +/- phase), their sum and
difference (pure cosine / pure sine), and the four m = 0 reductions.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
import scipy.special as _sp

from .. import arith
from ..gammazeta import zeta
from ..hyper import hyp3f2_analytic
from ..reports import EvalParams, Member, PreconditionViolation, make_report
from .tails import SigmaTails

__all__ = ["eval_coalescence", "IntegerXNotAllowed", "VARIANTS"]

VARIANTS = ("PlusHalf", "MinusHalf", "Cos", "Sin",
            "FirCorollary", "AuxCorollary", "SecTheorem", "ThiTheorem")

_NEEDS_NONINTEGER_X = {"PlusHalf", "Cos", "Sin", "FirCorollary",
                       "SecTheorem", "ThiTheorem"}


class IntegerXNotAllowed(PreconditionViolation):
    pass


def _lhs(kind: str, mu: float, x: float) -> tuple[complex, float]:
    """Exponentially damped series with sin(pi/4 + r), sin(pi/4 - r), cos r, sin r."""
    ncut = max(16, int(math.ceil((44.0 / (2.0 * math.pi)) ** 2 / (2.0 * x))) + 10)
    n = np.arange(1, ncut + 1)
    sig = arith.sigma_array(mu, ncut)[1:].real
    r = 2.0 * math.pi * np.sqrt(2.0 * n * x)
    osc = {"plus": np.sin(math.pi / 4.0 + r), "minus": np.sin(math.pi / 4.0 - r),
           "cos": np.cos(r), "sin": np.sin(r)}[kind]
    vals = sig / np.sqrt(n) * np.exp(-r) * osc
    return complex(vals.sum()), float(abs(vals[-1])) + 1e-16 * float(np.abs(vals).sum())


def _w_sym(m: int, u: np.ndarray) -> np.ndarray:
    """(1+iu)^-(2m+1) + (1-iu)^-(2m+1) (real for real u)."""
    return 2.0 * ((1.0 + 1j * u) ** (-(2 * m + 1))).real


def _f32(m: int, z: float) -> complex:
    return hyp3f2_analytic(0.25, 0.75, 1.0, 0.25 - m, 0.75 - m, z)


def _binom_neg(a: float, k: int) -> float:
    """binom(-a, k) = (-1)^k (a)_k / k!."""
    out = 1.0
    for i in range(k):
        out *= -(a + i) / (i + 1.0)
    return out


def _w_tail(m: int, x: float, tails: SigmaTails, wshift: float, tol: float) -> complex:
    """sum_{n>N} sigma(n) n^(-wshift) * W(n/x) expanded in x/n.

    W(u) = 2 sum_r binom(-(2m+1), 2r+1) (-1)^(m+r+1) u^(-(2m+2r+2)).
    """
    total = 0.0 + 0.0j
    for r in range(0, 40):
        c = 2.0 * _binom_neg(2 * m + 1.0, 2 * r + 1) * (-1.0) ** (m + r + 1)
        piece = c * x ** (2 * m + 2 * r + 2) * tails.tail(wshift + 2 * m + 2 * r + 2)
        total += piece
        if abs(piece) < tol and r > 2:
            break
    return total


def _f32_tail(m: int, x: float, tails: SigmaTails, wshift: float, tol: float) -> complex:
    """sum_{n>N} sigma(n) n^(-wshift) F32(-n^2/x^2) via 1 - F32(far side)."""
    total = 0.0 + 0.0j
    g = 1.0
    for k in range(1, 60):
        g *= ((0.25 + m + k - 1.0) * (0.75 + m + k - 1.0)
              / ((0.25 + k - 1.0) * (0.75 + k - 1.0)))
        piece = g * (-1.0) ** (k + 1) * x ** (2 * k) * tails.tail(wshift + 2 * k)
        total += piece
        if abs(piece) < tol and k > 2:
            break
    return total


def _rational_tail(tails: SigmaTails, x: float, power: float, tol: float) -> complex:
    """sum_{n>N} sigma(n) n^-power / (x^2 + n^2) by geometric expansion."""
    total = 0.0 + 0.0j
    for k in range(0, 60):
        piece = (-1.0) ** k * x ** (2 * k) * tails.tail(power + 2 * k + 2)
        total += piece
        if abs(piece) < tol and k > 2:
            break
    return total


def eval_coalescence(variant: str, m: int, x: float, p: EvalParams | None = None,
                     tol: float = 1e-8):
    """Verify one coalesced identity at s = 2m + 1/2 (m ignored for m=0 forms)."""
    p = p or EvalParams()
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    if m < 0:
        raise PreconditionViolation("m must be a nonnegative integer")
    if variant in _NEEDS_NONINTEGER_X and abs(x - round(x)) < p.integer_snap_delta:
        raise IntegerXNotAllowed(f"variant {variant} requires non-integer x")
    if variant in ("FirCorollary", "AuxCorollary", "SecTheorem", "ThiTheorem"):
        m = 0
    mu = 2 * m + 0.5
    inner = min(p.series_policy.tol, tol * 1e-2)
    N = max(int(2 * x) + 20, 48)
    tails = SigmaTails(mu, N)
    sig = tails.prefix.real
    n = np.arange(1, N + 1, dtype=float)
    fact2m = math.factorial(2 * m)
    g2mh = float(_sp.gamma(2 * m + 0.5))

    def series_plus_shape() -> complex:
        """sum sigma(n) n^(-2m-3/2) [ -(2m)!/sqrt(pi) (n/2x)^(2m+3/2) W(n/x)
        + (-1)^m n Gamma(2m+1/2)/(4^m pi x) F32(-n^2/x^2) ]."""
        w_part = (-(fact2m / math.sqrt(math.pi)) * (2.0 * x) ** (-(2 * m + 1.5))
                  * (complex(np.sum(sig * _w_sym(m, n / x)))
                     + _w_tail(m, x, tails, 0.0, inner)))
        f_direct = sum(sig[k] * n[k] ** (-(2 * m + 0.5)) * _f32(m, -(n[k] / x) ** 2)
                       for k in range(N))
        f_part = ((-1.0) ** m * g2mh / (4.0 ** m * math.pi * x)
                  * (f_direct + _f32_tail(m, x, tails, 2 * m + 0.5, inner)))
        return w_part + f_part

    if variant == "PlusHalf":
        lhs, err = _lhs("plus", mu, x)
        rhs = (zeta(0.5 - 2 * m) / (2.0 * math.pi * math.sqrt(x))
               - fact2m * zeta(-0.5 - 2 * m) / (math.sqrt(2.0) * (2.0 * math.pi * x) ** (2 * m + 1))
               + zeta(0.5) * zeta(-2 * m) / math.sqrt(2.0)
               + math.sqrt(x) * math.pi ** (-(2 * m + 0.5)) * series_plus_shape())
    elif variant == "MinusHalf":
        lhs, err = _lhs("minus", mu, x)
        direct = complex(np.sum(sig * ((x - 1j * n) ** (-(2 * m + 1))
                                       + (x + 1j * n) ** (-(2 * m + 1)))))
        tail = 0.0 + 0.0j
        for r in range(0, 40):
            c = 2.0 * _binom_neg(2 * m + 1.0, 2 * r + 1) * (-1.0) ** (m + r + 1)
            piece = c * x ** (2 * r + 1) * tails.tail(2 * m + 2 * r + 2.0)
            tail += piece
            if abs(piece) < inner and r > 2:
                break
        rhs = ((2.0 * math.pi * math.sqrt(x)
                + fact2m / (math.sqrt(2.0) * (2.0 * math.pi * x) ** (2 * m + 1)))
               * zeta(-0.5 - 2 * m)
               + zeta(0.5) * zeta(-2 * m) / math.sqrt(2.0)
               + math.sqrt(math.pi) * fact2m / (2.0 * math.pi) ** (2 * m + 1.5)
               * (direct + tail))
    elif variant == "Cos":
        lhs, err = _lhs("cos", mu, x)
        f_direct = sum(sig[k] * n[k] ** (-(2 * m + 0.5)) * _f32(m, -(n[k] / x) ** 2)
                       for k in range(N))
        rhs = (zeta(0.5 - 2 * m) / (2.0 * math.pi * math.sqrt(2.0 * x))
               + math.pi * math.sqrt(2.0 * x) * zeta(-0.5 - 2 * m)
               + zeta(0.5) * zeta(-2 * m)
               + (-1.0) ** m * g2mh / (math.pi * math.sqrt(x) * (2.0 * math.pi) ** (2 * m + 0.5))
               * (f_direct + _f32_tail(m, x, tails, 2 * m + 0.5, inner)))
    elif variant == "Sin":
        lhs, err = _lhs("sin", mu, x)
        w_part = (-2.0 * (fact2m / math.sqrt(math.pi)) * (2.0 * x) ** (-(2 * m + 1.5))
                  * (complex(np.sum(sig * _w_sym(m, n / x)))
                     + _w_tail(m, x, tails, 0.0, inner)))
        f_direct = sum(sig[k] * n[k] ** (-(2 * m + 0.5)) * _f32(m, -(n[k] / x) ** 2)
                       for k in range(N))
        f_part = ((-1.0) ** m * g2mh / (4.0 ** m * math.pi * x)
                  * (f_direct + _f32_tail(m, x, tails, 2 * m + 0.5, inner)))
        rhs = (zeta(0.5 - 2 * m) / (2.0 * math.pi * math.sqrt(2.0 * x))
               - math.sqrt(2.0) * (math.pi * math.sqrt(x)
                                   + fact2m / (math.sqrt(2.0) * (2.0 * math.pi * x) ** (2 * m + 1)))
               * zeta(-0.5 - 2 * m)
               + math.sqrt(x) / (math.sqrt(2.0) * math.pi ** (2 * m + 0.5))
               * (w_part + f_part))
    elif variant == "FirCorollary":
        lhs, err = _lhs("plus", 0.5, x)
        direct = complex(np.sum(sig / np.sqrt(n) * (math.sqrt(2.0 * x) - np.sqrt(n))
                                / (x * x + n * n)))
        tail = (math.sqrt(2.0 * x) * _rational_tail(tails, x, 0.5, inner)
                - _rational_tail(tails, x, 0.0, inner))
        rhs = (0.5 * ((1.0 / (math.pi * math.sqrt(x)) - 1.0 / math.sqrt(2.0)) * zeta(0.5)
                      - zeta(-0.5) / (math.pi * x * math.sqrt(2.0)))
               + x / (math.pi * math.sqrt(2.0)) * (direct + tail))
    elif variant == "AuxCorollary":
        lhs, err = _lhs("minus", 0.5, x)
        direct = complex(np.sum(sig / (x * x + n * n)))
        rhs = ((2.0 * math.pi * math.sqrt(x) + 1.0 / (2.0 * math.sqrt(2.0) * math.pi * x))
               * zeta(-0.5) - zeta(0.5) / (2.0 * math.sqrt(2.0))
               + x / (math.pi * math.sqrt(2.0))
               * (direct + _rational_tail(tails, x, 0.0, inner)))
    elif variant == "SecTheorem":
        lhs, err = _lhs("cos", 0.5, x)
        direct = complex(np.sum(sig / np.sqrt(n) / (x * x + n * n)))
        rhs = ((1.0 / (2.0 * math.pi * math.sqrt(2.0 * x)) - 0.5) * zeta(0.5)
               + math.pi * math.sqrt(2.0 * x) * zeta(-0.5)
               + x ** 1.5 / (math.pi * math.sqrt(2.0))
               * (direct + _rational_tail(tails, x, 0.5, inner)))
    else:  # ThiTheorem
        lhs, err = _lhs("sin", 0.5, x)
        direct = complex(np.sum(sig / np.sqrt(n) * (math.sqrt(x) - np.sqrt(2.0 * n))
                                / (x * x + n * n)))
        tail = (math.sqrt(x) * _rational_tail(tails, x, 0.5, inner)
                - math.sqrt(2.0) * _rational_tail(tails, x, 0.0, inner))
        rhs = (zeta(0.5) / (2.0 * math.pi * math.sqrt(2.0 * x))
               - (1.0 / (2.0 * math.pi * x) + math.pi * math.sqrt(2.0 * x)) * zeta(-0.5)
               + x / (math.pi * math.sqrt(2.0)) * (direct + tail))

    members = [Member("damped-series", lhs, err),
               Member("rational-series", rhs, inner)]
    return make_report(f"coalescence-{variant.lower()}", {"variant": variant, "m": m, "x": x},
                       members, tol, notes={"cutoff": N})
