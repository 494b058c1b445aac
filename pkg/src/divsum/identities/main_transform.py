"""The corrected divisor-sum transformation and its contour-integral lemma.

Side A is the exponentially convergent series

    sum_n sigma_s(n) n^(-1/2) exp(-2 pi sqrt(2 n x)) sin(pi/4 +/- 2 pi sqrt(2 n x)).

Side B re-expands it through residue terms plus a divisor-weighted sum of a
master function I(s, y) that has hypergeometric closed forms on y > 1 and
y <= 1.  The infinite part of side B decays only like n^(-3/2), so beyond a
cutoff the closed form is replaced by its own Taylor/residue expansion in
y = x/n, turning the tail into a few dozen zeta-product coefficients.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
import scipy.special as _sp

from .. import arith
from ..gammazeta import zeta
from ..hyper import hyp3f2_analytic
from ..quadrature import integrate_vertical_line
from ..reports import (EvalParams, Member, PreconditionViolation, make_report,
                       order_indicator)
from .tails import SigmaTails

__all__ = ["eval_main_theorem", "eval_lemma_I", "master_I_closed",
           "DomainRestriction"]


class DomainRestriction(PreconditionViolation):
    pass


def _gamma(z):
    return complex(_sp.gamma(z))


def master_I_closed(s: complex, y: float) -> complex:
    """Closed form of the master integral I(s, y); branch split at y = 1."""
    s = complex(s)
    a = order_indicator(s)
    front = -cmath.pi / 2.0 ** (2.0 - s)
    if y > 1.0:
        t1 = _gamma(0.25 + s / 2.0) * complex(_sp.rgamma(0.25 - s / 2.0)) / math.sqrt(2.0 * y)
        t2 = 0.0
        if a:
            t2 = (y ** (-s - 1.0) / cmath.tan(cmath.pi * s / 2.0) / (2.0 ** (s + 1.0) * math.sqrt(math.pi))
                  * _gamma(s + 0.5)
                  * ((1.0 + 1j / y) ** (-(s + 0.5)) + (1.0 - 1j / y) ** (-(s + 0.5))))
        t3 = (1.0 / (y * 2.0 ** s * cmath.sin(cmath.pi * s / 2.0)) * complex(_sp.rgamma(1.0 - s))
              * hyp3f2_analytic(0.25, 0.75, 1.0, (1.0 - s) / 2.0, 1.0 - s / 2.0, -1.0 / y ** 2))
        return front * (t1 + t2 - t3)
    t1 = (_gamma(s) * cmath.cos(cmath.pi * s / 2.0) / (2.0 ** (s - 1.0) * cmath.pi * y)
          * (hyp3f2_analytic(s / 2.0, (1.0 + s) / 2.0, 1.0, 0.25, 0.75, -y * y) - 1.0))
    phase = cmath.pi / 4.0 + cmath.pi * s / 2.0
    pp = (1.0 + 1j * y) ** (-(s + 0.5))
    pm = (1.0 - 1j * y) ** (-(s + 0.5))
    t2 = (1j * _gamma(s + 0.5) / (2.0 ** (s + 1.0) * cmath.sqrt(cmath.pi * y))
          * (cmath.sin(phase) * (pp - pm) + 1j * cmath.cos(phase) * (pp + pm - 2.0)))
    return front * (t1 + t2)


def _master_I_tail(s: complex, x: float, tails: SigmaTails, tol: float) -> complex:
    """sum_{n>N} sigma_s(n) n^(-s-1) I(s, x/n) via the small-y residue series.

    I(s,y) = -pi 2^(s-2) [P(y) + Q(y)] with P odd powers, Q half-integer
    powers of y; each power turns into a zeta-product tail.
    """
    total = 0.0 + 0.0j
    # P: Gamma(s) cos(pi s/2)/(2^(s-1) pi) sum_{m>=1} (-1)^m (s)_2m/(1/2)_2m y^(2m-1)
    cp = _gamma(s) * cmath.cos(cmath.pi * s / 2.0) / (2.0 ** (s - 1.0) * cmath.pi)
    ratio = 1.0 + 0.0j  # (s)_2m / (1/2)_2m
    prev = math.inf
    for m in range(1, 60):
        ratio *= (s + 2 * m - 2) * (s + 2 * m - 1) / ((2 * m - 1.5) * (2 * m - 0.5))
        piece = cp * (-1.0) ** m * ratio * x ** (2 * m - 1) * tails.tail(s + 2.0 * m)
        if m > 3 and (abs(piece) < tol * 1e-3 or abs(piece) > prev):
            total += piece if abs(piece) <= prev else 0.0
            break
        prev = abs(piece) if piece != 0 else prev
        total += piece
    # Q: Gamma(s+3/2)/(2^s sqrt(pi)) sum_j sin(pi(j/2+1/4+s/2)) (s+3/2)_j/(j+1)! y^(j+1/2)
    cq = _gamma(s + 1.5) / (2.0 ** s * math.sqrt(math.pi))
    poch = 1.0 + 0.0j
    prev = math.inf
    for j in range(0, 120):
        if j > 0:
            poch *= s + 0.5 + j
        wgt = cmath.sin(cmath.pi * (j / 2.0 + 0.25 + s / 2.0))
        piece = (cq * wgt * poch / math.factorial(j + 1)
                 * x ** (j + 0.5) * tails.tail(s + j + 1.5))
        if j > 6 and (abs(piece) < tol * 1e-3 or abs(piece) > 4.0 * prev):
            if abs(piece) <= prev:
                total += piece
            break
        if piece != 0:
            prev = abs(piece)
        total += piece
    return -cmath.pi * 2.0 ** (s - 2.0) * total


def _lhs_series(s: complex, x: float, sign: float, nmax: int = 20_000) -> tuple[complex, float, int]:
    """sum_n sigma_s(n)/sqrt(n) e^(-2 pi sqrt(2nx)) sin(pi/4 +/- 2 pi sqrt(2nx))."""
    # a priori cutoff: the decay factor alone reaches 1e-19
    ncut = int(math.ceil((44.0 / (2.0 * math.pi)) ** 2 / (2.0 * x))) + 10
    ncut = min(max(ncut, 16), nmax)
    n = np.arange(1, ncut + 1)
    sig = arith.sigma_array(s, ncut)[1:]
    root = 2.0 * math.pi * np.sqrt(2.0 * n * x)
    vals = sig / np.sqrt(n) * np.exp(-root) * np.sin(math.pi / 4.0 + sign * root)
    total = complex(vals.sum())
    return total, float(abs(vals[-1])) + 1e-16 * float(np.abs(vals).sum()), ncut


def eval_main_theorem(sign: str, s, x: float, p: EvalParams | None = None,
                      tol: float = 1e-8):
    """Verify the two-sided transformation of the weighted divisor series.

    sign is "Plus" or "Minus" for the +/- inside the sine.
    """
    p = p or EvalParams()
    s = complex(s)
    if s.real <= 0:
        raise PreconditionViolation("requires Re s > 0")
    if sign not in ("Plus", "Minus"):
        raise ValueError("sign must be 'Plus' or 'Minus'")
    if sign == "Plus" and abs(x - round(x)) < p.integer_snap_delta and s.real >= 0.5:
        raise DomainRestriction("integer x requires Re s < 1/2 in the Plus case")
    inner_tol = min(p.series_policy.tol, tol * 1e-2)
    lhs, lhs_err, used = _lhs_series(s, x, +1.0 if sign == "Plus" else -1.0)

    N = max(int(2 * x) + 20, 48)
    tails = SigmaTails(s, N)
    sig = tails.prefix
    n = np.arange(1, N + 1)

    if sign == "Plus":
        res_part = 4.0 * math.pi * (
            zeta(1.0 - s) / (8.0 * math.pi ** 2 * math.sqrt(x))
            + zeta(0.5) * zeta(0.5 - s) / (4.0 * math.sqrt(2.0) * math.pi)
            - 2.0 ** (-s - 3.0) / cmath.pi ** (s + 1.5) * _gamma(s + 0.5)
            / cmath.tan(cmath.pi * s / 2.0) * zeta(-s) * x ** (-s - 0.5))
        series = sum(sig[k] * n[k] ** (-s - 1.0) * master_I_closed(s, x / n[k])
                     for k in range(N))
        series += _master_I_tail(s, x, tails, inner_tol)
        rhs = res_part + math.sqrt(x) * 2.0 ** (2.0 - s) * cmath.pi ** (-s - 1.0) * series
    else:
        res_part = 4.0 * math.pi * (
            math.sqrt(x) / 2.0 * zeta(-s)
            + zeta(0.5) * zeta(0.5 - s) / (4.0 * math.pi * math.sqrt(2.0))
            + _gamma(s + 0.5) * zeta(-s)
            / (2.0 ** (s + 3.0) * cmath.pi ** (s + 1.5) * x ** (s + 0.5)))
        pref = _gamma(s + 0.5) / (2.0 ** s * cmath.pi ** (s + 0.5))
        aexp = s + 0.5
        below = n[n < x]
        sb = sig[: len(below)]
        t_below = 0.0 + 0.0j
        if len(below):
            u = below / x
            pp = (1.0 + 1j * u) ** (-aexp)
            pm = (1.0 - 1j * u) ** (-aexp)
            t_below = complex(np.sum(sb * below ** (-aexp) * (
                -cmath.sin(cmath.pi / 4.0 - cmath.pi * s / 2.0)
                + below ** aexp / (2.0 * x ** aexp) * (pp + pm))))
        above = n[n >= x]
        sa = sig[len(below):]
        u = x / above
        pp = (1.0 + 1j * u) ** (-aexp)
        pm = (1.0 - 1j * u) ** (-aexp)
        phase = cmath.pi / 4.0 + cmath.pi * s / 2.0
        t_above = 0.5 * complex(np.sum(sa * above ** (-aexp) * (
            cmath.cos(phase) * (pp + pm - 2.0) + 1j * cmath.sin(phase) * (pp - pm))))
        # binomial tail for n > N
        t_tail = 0.0 + 0.0j
        binom = 1.0 + 0.0j  # (-1)^k (a)_k / k! = binom(-a, k)
        for k in range(1, 90):
            binom *= -(aexp + k - 1.0) / k
            w = s + 0.5 + k
            if k % 2 == 0:
                piece = cmath.cos(phase) * binom * (-1.0) ** (k // 2) * x ** k * tails.tail(w)
            else:
                piece = -cmath.sin(phase) * binom * (-1.0) ** ((k - 1) // 2) * x ** k * tails.tail(w)
            t_tail += piece
            if abs(piece) < inner_tol * 1e-3 / max(abs(complex(pref)), 1.0) and k > 6:
                break
        rhs = res_part + pref * (t_below + t_above + t_tail)

    members = [Member("direct-series", lhs, lhs_err),
               Member("residue-expansion", rhs, inner_tol)]
    return make_report(f"main-{sign.lower()}", {"s": s, "x": x}, members, tol,
                       notes={"lhs_terms": used, "rhs_cutoff": N})


def eval_lemma_I(s, x: float, lam: float = -0.5, p: EvalParams | None = None,
                 tol: float = 1e-7):
    """Contour integral of the master function against its closed forms."""
    p = p or EvalParams()
    s = complex(s)
    if s.real <= 0:
        raise PreconditionViolation("requires Re s > 0")
    if not -1.0 < lam < 0.0:
        raise PreconditionViolation("requires -1 < lambda < 0")
    if abs(x - 1.0) < 1e-12 and s.real >= 0.5:
        raise DomainRestriction("x = 1 requires Re s < 1/2")

    def integrand(z):
        z = np.asarray(z)
        g1 = _sp.gamma(z - 1.0)
        g2 = _sp.gamma(1.0 - z / 2.0)
        g3 = _sp.gamma(1.0 - z / 2.0 + s)
        return (g1 * g2 * g3 * np.sin(np.pi * z / 4.0) ** 2
                * np.sin(np.pi * z / 4.0 - np.pi * s / 2.0)
                * (4.0 * x) ** (-z / 2.0))

    quad = integrate_vertical_line(integrand, lam, tol=p.quad_tol,
                                   decay_rate_hint=math.pi / 4.0,
                                   t_start=p.contour_T_start)
    closed = master_I_closed(s, x)
    members = [Member("contour-integral", quad.value, quad.err_estimate),
               Member("closed-form", closed, 1e-13 * max(1.0, abs(closed)))]
    return make_report("lemma-master-integral", {"s": s, "x": x, "lambda": lam},
                       members, tol, notes={"quad_evals": quad.evals})
