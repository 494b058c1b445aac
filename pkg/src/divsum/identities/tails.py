"""Shared series machinery for the identity evaluators.

Two recurring problems are solved here:

* algebraic tails of divisor-weighted series.  Sums like
  sum_{n>N} sigma_mu(n) n^-w are evaluated exactly through the generating
  Dirichlet products (zeta(w) zeta(w-mu) for sigma, zeta(w) zeta(2w-mu) for
  the square-divisor weights, zeta(w) L(w-mu, chi) for twisted sums) minus a
  cached partial sum, so evaluators can trade a slowly convergent rational
  tail for a few geometrically convergent zeta-tail coefficients;

* conditionally convergent Bessel-kernel series.  Their partial sums
  oscillate with phase c*sqrt(n); iterated window averages over the local
  oscillation period converge to the Abel value and supply an error estimate
  from the residual spread.
"""

from __future__ import annotations

import math

import numpy as np

from .. import arith
from ..gammazeta import zeta, dirichlet_l

__all__ = ["SigmaTails", "PsiTails", "TwistedTails", "phase_averaged_sum",
           "stable_power_difference"]


class _TailBase:
    """Tail sums T(w) = sum_{n>N} a_n n^-w with cached prefix arrays."""

    def __init__(self, N: int):
        self.N = int(N)
        self._coeff = None  # filled by subclass: a_1..a_N
        self._ext = None
        self._cache = {}

    def _closed_form(self, w: complex) -> complex:
        raise NotImplementedError

    def _extended_coeff(self) -> np.ndarray:
        raise NotImplementedError

    def tail(self, w) -> complex:
        w = complex(w)
        key = (w.real, w.imag)
        if key not in self._cache:
            n = np.arange(1, self.N + 1)
            closed = self._closed_form(w)
            val = closed - complex(np.sum(self._coeff * n ** (-w)))
            if abs(val) < 1e-11 * max(1.0, abs(closed)):
                # the subtraction has hit its cancellation floor; the tail is
                # so small that direct summation of a stretch of it is exact
                if self._ext is None:
                    self._ext = self._extended_coeff()
                m = np.arange(self.N + 1, len(self._ext) + 1)
                val = complex(np.sum(self._ext[self.N:] * m ** (-w)))
            self._cache[key] = val
        return self._cache[key]


class SigmaTails(_TailBase):
    """Tails of sum sigma_mu(n) n^-w  (= zeta(w) zeta(w-mu) - prefix)."""

    def __init__(self, mu, N: int):
        super().__init__(N)
        self.mu = complex(mu)
        self._coeff = arith.sigma_array(self.mu, self.N)[1:]

    def _closed_form(self, w):
        return zeta(w) * zeta(w - self.mu)

    def _extended_coeff(self):
        return arith.sigma_array(self.mu, 12 * self.N)[1:]

    @property
    def prefix(self) -> np.ndarray:
        """sigma_mu(1..N) as an array."""
        return self._coeff


class PsiTails(_TailBase):
    """Tails of sum psi_mu(n) n^-w  (= zeta(w) zeta(2w-mu) - prefix)."""

    def __init__(self, mu, N: int):
        super().__init__(N)
        self.mu = complex(mu)
        self._coeff = arith.psi_array(self.mu, self.N)[1:]

    def _closed_form(self, w):
        return zeta(w) * zeta(2.0 * w - self.mu)

    def _extended_coeff(self):
        return arith.psi_array(self.mu, 12 * self.N)[1:]

    @property
    def prefix(self) -> np.ndarray:
        return self._coeff


class TwistedTails(_TailBase):
    """Tails of sum sigma_mu(chi, n) n^-w  (= zeta(w) L(w-mu, chi) - prefix)."""

    def __init__(self, mu, chi, N: int):
        super().__init__(N)
        self.mu = complex(mu)
        self.chi = chi
        self._coeff = arith.twisted_sigma_array(self.mu, chi, self.N)[1:]

    def _closed_form(self, w):
        return zeta(w) * dirichlet_l(w - self.mu, self.chi)

    def _extended_coeff(self):
        return arith.twisted_sigma_array(self.mu, self.chi, 12 * self.N)[1:]

    @property
    def prefix(self) -> np.ndarray:
        return self._coeff


def phase_averaged_sum(terms: np.ndarray, phase_coeffs) -> tuple[complex, float]:
    """Abel-style value of sum(terms) whose tail oscillates like exp(i c sqrt(n)).

    One moving average per phase coefficient c (window = one local period of
    c*sqrt(n) at the truncation point) flattens each oscillation; the spread
    of the final averaged sequence over the last window is the error
    estimate.  Monotone or absolutely convergent inputs pass through with
    essentially no bias since averaging a settled sequence is harmless.
    """
    terms = np.asarray(terms, dtype=complex)
    N = len(terms)
    seq = np.cumsum(terms)
    if np.isscalar(phase_coeffs):
        phase_coeffs = [phase_coeffs]
    for c in phase_coeffs:
        if c <= 0:
            continue
        period = int(math.ceil(4.0 * math.pi * math.sqrt(N) / c)) + 1
        if period >= len(seq) // 2:
            continue
        csum = np.concatenate([[0.0 + 0.0j], np.cumsum(seq)])
        seq = (csum[period:] - csum[:-period]) / period
    tail_window = max(16, len(seq) // 16)
    tail = seq[-tail_window:]
    value = complex(tail.mean())
    # drift of block means across the settled stretch: the pointwise spread
    # still carries the residual oscillation that the mean removes
    blocks = np.array_split(tail, 4)
    means = np.array([b.mean() for b in blocks])
    err = (float(np.max(np.abs(means - value)))
           + 1e-15 * float(np.abs(terms).sum()) + 1e-16 * abs(value))
    return value, err


def stable_power_difference(b: complex, n: np.ndarray, x: float) -> np.ndarray:
    """(n**b - x**b) / (n - x) as a stable divided difference for n near x."""
    n = np.asarray(n, dtype=float)
    out = np.empty(len(n), dtype=complex)
    close = np.abs(n - x) < 0.25 * max(x, 1.0)
    far = ~close
    out[far] = (n[far] ** b - x ** b) / (n[far] - x)
    if close.any():
        nc = n[close]
        # x^b * expm1(b*log1p((n-x)/x)) / (n-x), exact in the n -> x limit
        u = (nc - x) / x
        w = (b * np.log1p(u)).astype(complex)
        expm1w = np.where(np.abs(w) < 1e-4,
                          w * (1.0 + w / 2.0 + w * w / 6.0), np.exp(w) - 1.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            val = x ** b * expm1w / (nc - x)
        exact = nc == x
        if np.any(exact):
            val = np.where(exact, b * x ** (b - 1.0), val)
        out[close] = val
    return out
