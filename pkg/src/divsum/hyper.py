"""Generalized hypergeometric functions and the continuation machinery.

pFq series are summed directly with compensated accumulation.  The analytic
continuation of 3F2 beyond |z| = 1 goes through the three-term connection
formula mapping to argument 1/z; degenerate (integer) differences of
numerator parameters are handled by an epsilon perturbation averaged over
both sides.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np
import scipy.special as _sp

from .summation import SeriesResult, SumStatus, _neumaier_add

__all__ = [
    "HyperSpec", "OutsideConvergenceDomainError", "DenominatorPoleError",
    "DegenerateParametersError", "pfq_series", "pfq", "hyp3f2_analytic",
    "hyp1f1",
]


class OutsideConvergenceDomainError(ValueError):
    pass


class DenominatorPoleError(ZeroDivisionError):
    pass


class DegenerateParametersError(ArithmeticError):
    pass


@dataclass(frozen=True)
class HyperSpec:
    numerator_params: tuple
    denominator_params: tuple
    argument: complex

    def __post_init__(self):
        if len(self.numerator_params) > len(self.denominator_params) + 1:
            raise OutsideConvergenceDomainError(
                "series requires q <= p+1 numerator parameters")
        for b in self.denominator_params:
            bb = complex(b)
            if abs(bb.imag) < 1e-13 and bb.real <= 0 and abs(bb.real - round(bb.real)) < 1e-13:
                raise DenominatorPoleError(f"denominator parameter {b} is a nonpositive integer")


def _near_int(w: complex, tol: float = 1e-9) -> bool:
    return abs(w.imag) < tol and abs(w.real - round(w.real)) < tol


def pfq_series(spec: HyperSpec, tol: float = 1e-14, max_terms: int = 60_000) -> SeriesResult:
    """Direct power series of pFq with rising factorials."""
    a = [complex(x) for x in spec.numerator_params]
    b = [complex(x) for x in spec.denominator_params]
    z = complex(spec.argument)
    balanced = len(a) == len(b) + 1
    if balanced and abs(z) > 1.0 + 1e-15:
        raise OutsideConvergenceDomainError(
            f"|z|={abs(z):.6g} outside the unit disk for a balanced series")
    total = 1.0 + 0.0j
    comp = 0.0 + 0.0j
    term = 1.0 + 0.0j
    n = 0
    while n < max_terms:
        num = term * z / (n + 1.0)
        for ai in a:
            num *= ai + n
        for bi in b:
            num /= bi + n
        term = num
        total, comp = _neumaier_add(total, comp, term)
        n += 1
        if abs(term) < tol * max(1.0, abs(total + comp)) and n >= 4:
            # one extra guard term, then stop
            if abs(term) * max(1.0, abs(z)) < tol * max(1.0, abs(total + comp)):
                return SeriesResult(total + comp, abs(term), n + 1, SumStatus.CONVERGED)
    return SeriesResult(total + comp, abs(term), n + 1, SumStatus.MAX_TERMS_REACHED)


def pfq(a, b, z, tol: float = 1e-14) -> complex:
    return pfq_series(HyperSpec(tuple(a), tuple(b), complex(z)), tol=tol).value


def _gamma(z: complex) -> complex:
    return complex(_sp.gamma(z))


def _rgamma(z: complex) -> complex:
    return complex(_sp.rgamma(z))


def _hyp3f2_connection(a1, a2, a3, b1, b2, z) -> complex:
    """Three-term connection mapping a 3F2 at z to 3F2's at 1/z (|z| > 1).

    Reciprocal gammas keep the formula finite when b - a_i hits a nonpositive
    integer: that term's coefficient vanishes in the limit.
    """
    front = _gamma(b1) * _gamma(b2) * _rgamma(a1) * _rgamma(a2) * _rgamma(a3)
    total = 0.0 + 0.0j
    perms = [(a1, a2, a3), (a2, a1, a3), (a3, a1, a2)]
    for ai, aj, ak in perms:
        coef = (_gamma(ai) * _gamma(aj - ai) * _gamma(ak - ai)
                * _rgamma(b1 - ai) * _rgamma(b2 - ai))
        if coef == 0:
            continue
        val = pfq([ai, ai - b1 + 1.0, ai - b2 + 1.0],
                  [ai - aj + 1.0, ai - ak + 1.0], 1.0 / z)
        total += coef * (-z) ** (-ai) * val
    return front * total


def hyp3f2_analytic(a1, a2, a3, b1, b2, z, tol: float = 1e-12) -> complex:
    """3F2(a1,a2,a3; b1,b2; z) continued to z outside [0, 1).

    Inside the closed unit disk (minus a neighbourhood of z=1) the direct
    series is used; outside, the connection formula at 1/z.  Integer
    differences among numerator parameters are degenerate for the connection
    formula and are resolved by evaluating at a +/- eps parameter shift and
    averaging.
    """
    a1, a2, a3 = complex(a1), complex(a2), complex(a3)
    b1, b2 = complex(b1), complex(b2)
    z = complex(z)
    if abs(z.imag) < 1e-300 and 0.0 < z.real < 1.0:
        return pfq([a1, a2, a3], [b1, b2], z, tol=tol)
    if abs(z) <= 1.0:
        return pfq([a1, a2, a3], [b1, b2], z, tol=tol)
    degenerate = any(_near_int(d) for d in (a1 - a2, a1 - a3, a2 - a3))
    if not degenerate:
        return _hyp3f2_connection(a1, a2, a3, b1, b2, z)
    eps = 1e-7
    plus = _hyp3f2_connection(a1 + eps, a2, a3, b1, b2, z)
    minus = _hyp3f2_connection(a1 - eps, a2, a3, b1, b2, z)
    avg = 0.5 * (plus + minus)
    if not (np.isfinite(avg.real) and np.isfinite(avg.imag)) \
            or abs(plus - minus) > 1e5 * eps * max(1.0, abs(avg)):
        raise DegenerateParametersError(
            "parameter perturbation did not stabilise the continuation")
    return avg


def hyp1f1(a, b, z, tol: float = 1e-15) -> complex:
    """Kummer 1F1(a; b; z); the Kummer transform is applied for Re z < 0."""
    a, b, z = complex(a), complex(b), complex(z)
    if _near_int(b, 1e-13) and b.real <= 0:
        raise DenominatorPoleError(f"1F1 denominator parameter {b}")
    if z.real < 0.0:
        return cmath.exp(z) * pfq([b - a], [b], -z, tol=tol)
    return pfq([a], [b], z, tol=tol)
