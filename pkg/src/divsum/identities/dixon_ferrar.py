"""Two-squares K-Bessel identity: the (a, mu) side against its (b, 1-mu) mirror."""

from __future__ import annotations

import math

import numpy as np
import scipy.special as _sp

from .. import arith
from ..bessel import BesselKind, bessel
from ..reports import EvalParams, Member, PreconditionViolation, make_report

__all__ = ["eval_dixon_ferrar"]


def _side(mu: complex, a: float, b: float) -> tuple[complex, float]:
    """a^(mu/2) sum_(n>=0) r2(n) (n+b)^(-mu/2) K_mu(2 pi sqrt(a(n+b)))."""
    ncut = max(12, int(math.ceil(48.0 ** 2 / (4.0 * math.pi ** 2 * a))) + 8)
    n = np.arange(0, ncut + 1, dtype=float)
    r2 = arith.r2_array(ncut)
    arg = 2.0 * math.pi * np.sqrt(a * (n + b))
    if abs(mu.imag) < 1e-13:
        kv = _sp.kv(mu.real, arg)
    else:
        kv = np.array([bessel(BesselKind.K, mu, v) for v in arg])
    vals = a ** (mu / 2.0) * r2 * (n + b) ** (-mu / 2.0) * kv
    return complex(vals.sum()), float(np.abs(vals[-1])) + 1e-16 * float(np.abs(vals).sum())


def eval_dixon_ferrar(mu, a: float, b: float, p: EvalParams | None = None,
                      tol: float = 1e-8):
    """Verify the sum-of-two-squares modular pair at (mu, a, b)."""
    p = p or EvalParams()
    mu = complex(mu)
    if a <= 0 or b <= 0:
        raise PreconditionViolation("requires a > 0 and b > 0")
    va, ea = _side(mu, a, b)
    vb, eb = _side(1.0 - mu, b, a)
    members = [Member("forward", va, ea), Member("mirror", vb, eb)]
    return make_report("dixon-ferrar", {"mu": mu, "a": a, "b": b}, members, tol)
