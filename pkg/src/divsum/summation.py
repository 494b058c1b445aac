"""Series summation primitives.

Everything downstream of this module sums some infinite series: geometric,
alternating, exponentially decaying Bessel tails, or conditionally convergent
oscillatory kernels.  The policies here make the stopping rule and the
rounding behaviour explicit instead of leaving them to ad-hoc loops.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np


class SumStatus(enum.Enum):
    CONVERGED = "Converged"
    MAX_TERMS_REACHED = "MaxTermsReached"
    OSCILLATING = "Oscillating"


class SumMode(enum.Enum):
    PLAIN_COMPENSATED = "PlainCompensated"
    BLOCK_AVERAGED = "BlockAveraged"
    ALTERNATING_ACCELERATED = "AlternatingAccelerated"


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    err_estimate: float
    terms_used: int
    status: SumStatus

    @property
    def converged(self) -> bool:
        return self.status is SumStatus.CONVERGED


@dataclass(frozen=True)
class SumPolicy:
    tol: float = 1e-12
    max_terms: int = 200_000
    min_terms: int = 4
    mode: SumMode = SumMode.PLAIN_COMPENSATED
    # window of partial sums averaged in BLOCK_AVERAGED mode; callers dealing
    # with Bessel-phase oscillation pick it from the phase 4*pi*sqrt(n*x)
    block_window: int = 64

    def __post_init__(self):
        if not (0.0 < self.tol < 1.0):
            raise ValueError("tol must lie in (0, 1)")
        if self.min_terms > self.max_terms:
            raise ValueError("min_terms must not exceed max_terms")


class NonConvergenceError(RuntimeError):
    """Raised by quadratures when the error estimate cannot be driven below tol."""


def _neumaier_add(total: complex, comp: complex, x: complex):
    """One step of Neumaier compensated accumulation."""
    t = total + x
    if abs(total) >= abs(x):
        comp += (total - t) + x
    else:
        comp += (x - t) + total
    return t, comp


def compensated_sum(values) -> complex:
    """Compensated (error-free transform) sum of an iterable of complex values."""
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    for x in values:
        total, comp = _neumaier_add(total, comp, complex(x))
    return total + comp


def _plain_compensated(term, policy: SumPolicy) -> SeriesResult:
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    block = 0.0
    block_len = 8
    n = 0
    while n < policy.max_terms:
        n += 1
        t = complex(term(n))
        total, comp = _neumaier_add(total, comp, t)
        block += abs(t)
        if n % block_len == 0:
            scale = max(1.0, abs(total + comp))
            if n >= policy.min_terms and block < policy.tol * scale:
                return SeriesResult(total + comp, block, n, SumStatus.CONVERGED)
            block = 0.0
    return SeriesResult(total + comp, max(block, policy.tol), n, SumStatus.MAX_TERMS_REACHED)


def _block_averaged(term, policy: SumPolicy) -> SeriesResult:
    """Average the last W partial sums to damp a non-decaying oscillation."""
    w = max(2, policy.block_window)
    window = np.zeros(w, dtype=complex)
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    prev_avg = None
    n = 0
    while n < policy.max_terms:
        n += 1
        total, comp = _neumaier_add(total, comp, complex(term(n)))
        window[n % w] = total + comp
        if n >= max(policy.min_terms, w) and n % w == 0:
            avg = window.mean()
            if prev_avg is not None:
                drift = abs(avg - prev_avg)
                if drift < policy.tol * max(1.0, abs(avg)):
                    return SeriesResult(avg, drift, n, SumStatus.CONVERGED)
            prev_avg = avg
    avg = window.mean()
    err = abs(avg - prev_avg) if prev_avg is not None else abs(avg)
    spread = float(np.ptp(np.abs(window - avg)))
    status = SumStatus.OSCILLATING if spread > 10 * policy.tol * max(1.0, abs(avg)) \
        else SumStatus.MAX_TERMS_REACHED
    return SeriesResult(avg, max(err, spread / max(1, w)), n, status)


def _alternating_accelerated(term, policy: SumPolicy) -> SeriesResult:
    """Cohen-Villegas-Zagier acceleration for alternating series.

    term(n) must carry its own sign; the scheme assumes the underlying
    coefficients a_n = (-1)^(n+1) term-sign pattern with a_n of one sign.
    """
    # number of stages: error ~ (3+sqrt(8))^-k
    k = max(8, min(40, int(math.ceil(-math.log(policy.tol) / 1.76)) + 2))
    if k > policy.max_terms:
        k = policy.max_terms
    a = np.array([complex(term(n)) for n in range(1, k + 1)])
    signs = np.where(np.arange(1, k + 1) % 2 == 1, 1.0, -1.0)
    mags = a * signs  # underlying positive coefficients if strictly alternating
    d = (3.0 + math.sqrt(8.0)) ** k
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    s = 0.0 + 0.0j
    for j in range(k):
        c = b - c
        s += c * mags[j]
        b *= (j + k) * (j - k) / ((j + 0.5) * (j + 1.0))
    value = s / d
    # CVZ theoretical error bound; cross-check against raw partial sum scale
    err = abs(value) * (3.0 + math.sqrt(8.0)) ** (-k) * 10 + 1e-16 * float(np.abs(mags).max(initial=0.0))
    status = SumStatus.CONVERGED if err <= policy.tol * max(1.0, abs(value)) \
        else SumStatus.MAX_TERMS_REACHED
    return SeriesResult(value, err, k, status)


def sum_series(term: Callable[[int], complex], policy: SumPolicy | None = None) -> SeriesResult:
    """Sum term(1) + term(2) + ... under the given policy.

    Never raises on slow convergence; the status field reports whether the
    budget sufficed.
    """
    policy = policy or SumPolicy()
    if policy.mode is SumMode.PLAIN_COMPENSATED:
        return _plain_compensated(term, policy)
    if policy.mode is SumMode.BLOCK_AVERAGED:
        return _block_averaged(term, policy)
    return _alternating_accelerated(term, policy)


def euler_transform(coeffs: np.ndarray) -> complex:
    """Classic Euler transformation of an alternating series.

    coeffs are the unsigned a_n of sum (-1)^n a_n, n >= 0.  Retained as an
    independent cross-check for the accelerated production path.
    """
    a = np.asarray(coeffs, dtype=complex)
    total = 0.0 + 0.0j
    for k in range(len(a)):
        total += (-1.0) ** k * a[0] / 2.0 ** (k + 1)
        a = a[1:] - a[:-1]  # forward difference
        if len(a) == 0:
            break
    return total
