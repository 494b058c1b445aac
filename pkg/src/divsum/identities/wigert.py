"""Square-divisor analogue of the main transformation (alpha*beta = 4 pi^3).

Side A sums psi_s(n) with the damped sine weight; side B carries zeta
residue terms plus a confluent-hypergeometric series whose leading Kummer
asymptotic exactly cancels a companion term, leaving an absolutely
convergent remainder that is resummed through zeta-product tails.  The s=1
case is cross-checked against the classical two-variable form, including
the 1/4 constant famously dropped from it.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
import scipy.special as _sp

from .. import arith
from ..gammazeta import EULER_GAMMA, zeta
from ..hyper import hyp1f1
from ..reports import EvalParams, Member, PreconditionViolation, make_report
from .tails import PsiTails

__all__ = ["eval_wigert"]

_CUBE = 4.0 * math.pi ** 3


def _sing_cos_zeta(s: complex) -> complex:
    """cos(pi(1+s)/4) zeta((1+s)/2) with the removable s=1 singularity."""
    if abs(s - 1.0) < 1e-8:
        u = (s - 1.0) / 2.0
        # -sin(pi u/2) * (1/u + gamma + O(u))
        return -math.pi / 2.0 - math.pi * EULER_GAMMA / 2.0 * u
    return cmath.cos(cmath.pi * (1.0 + s) / 4.0) * zeta((1.0 + s) / 2.0)


def eval_wigert(s, beta: float, p: EvalParams | None = None, tol: float = 1e-8):
    """Verify the square-divisor transformation at alpha = 4 pi^3 / beta."""
    p = p or EvalParams()
    s = complex(s)
    if s.real <= 0:
        raise PreconditionViolation("requires Re s > 0")
    if beta <= 0:
        raise PreconditionViolation("requires beta > 0")
    alpha = _CUBE / beta
    inner = min(p.series_policy.tol, tol * 1e-2)

    # side A
    ncut = max(16, int(math.ceil(44.0 ** 2 / beta)) + 8)
    n = np.arange(1, ncut + 1)
    psi = arith.psi_array(s, ncut)[1:]
    r = np.sqrt(n * beta)
    vals = psi / np.sqrt(n) * np.exp(-r) * np.sin(math.pi / 4.0 - r)
    side_a = complex(vals.sum())
    err_a = float(abs(vals[-1])) + 1e-16 * float(np.abs(vals).sum())

    # side B
    head = (math.sqrt(beta / 2.0) * zeta(-s)
            + complex(_sp.gamma(s)) * _sing_cos_zeta(s) * (2.0 * beta) ** (-s / 2.0)
            + zeta(0.5) * zeta(1.0 - s) / math.sqrt(2.0))
    N = max(40, int(math.ceil(44.0 / alpha)) + 10)
    tails = PsiTails(1.0 - s, N)
    psi1 = tails.prefix
    nn = np.arange(1, N + 1, dtype=float)
    g_half = complex(_sp.gamma(s / 2.0))
    kum = np.array([hyp1f1(s / 2.0, 0.5, -k * alpha) for k in nn])
    # 1/(Gamma(1-s) sin(pi s/2)) = 2 Gamma(s) cos(pi s/2) / pi, finite at all s
    comp = 2.0 * complex(_sp.gamma(s)) * cmath.cos(cmath.pi * s / 2.0) / cmath.pi
    bracket = (-cmath.pi ** 3 * np.sqrt(nn) * comp / math.sqrt(beta)
               + 2.0 ** (2.0 * s) * cmath.pi ** (1.5 * s + 2.0)
               * (nn / beta) ** ((s + 1.0) / 2.0) * g_half * kum)
    direct = complex(np.sum(psi1 / nn * bracket))
    # tail: Kummer asymptotic minus the cancelling companion term
    cpref = (2.0 ** (2.0 * s) * cmath.pi ** (1.5 * s + 2.0) * g_half
             * math.sqrt(math.pi) * complex(_sp.rgamma((1.0 - s) / 2.0))
             * beta ** (-(s + 1.0) / 2.0) * alpha ** (-s / 2.0))
    tail = 0.0 + 0.0j
    ck = 1.0 + 0.0j
    for k in range(1, 50):
        ck *= (s / 2.0 + k - 1.0) * ((s + 1.0) / 2.0 + k - 1.0) / k
        piece = cpref * ck * alpha ** (-k) * tails.tail(k + 0.5)
        tail += piece
        if abs(piece) < inner * 1e-2 and k > 2:
            break
    series = 2.0 ** (-s - 0.5) * cmath.pi ** (-s - 2.0) * math.sqrt(beta) * (direct + tail)
    side_b = head + series

    members = [Member("damped-psi-series", side_a, err_a),
               Member("residue-kummer", side_b, inner)]
    notes = {"lhs_terms": ncut, "rhs_cutoff": N, "alpha": alpha}

    if abs(s - 1.0) < 1e-9:
        # classical two-variable form: pi^2/(6 alpha) + 1/4 + sqrt(beta)/(pi sqrt(2)) *
        # (zeta(1/2)/(2 sqrt 2) + side_a); solve it for side_a as a third member
        mcut = max(16, int(math.ceil(44.0 / alpha)) + 8)
        mm = np.arange(1, mcut + 1)
        psi0 = arith.psi_array(0.0, mcut)[1:].real
        lhs_classic = float(np.sum(psi0 * np.exp(-mm * alpha)))
        member_c = (math.pi * math.sqrt(2.0) / math.sqrt(beta)
                    * (lhs_classic - math.pi ** 2 / (6.0 * alpha) - 0.25)
                    - zeta(0.5).real / (2.0 * math.sqrt(2.0)))
        members.append(Member("classical-form", complex(member_c), 1e-12))
    return make_report("wigert", {"s": s, "beta": beta}, members, tol, notes=notes)
