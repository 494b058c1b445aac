"""Special functions and numerical certification of divisor-sum identities.

The package has two layers: numerical primitives (summation, quadrature,
gamma/zeta family, Bessel/Lommel/hypergeometric functions, arithmetic
functions) and an identity-verification engine that evaluates both sides of
each supported transformation formula by independent routes and certifies
the agreement by residual.
"""

__version__ = "0.1.0"

from . import arith, bessel, gammazeta, hyper, lommel, quadrature, summation
from .reports import EvalParams, IdentityReport, Member, Verdict

__all__ = ["arith", "bessel", "gammazeta", "hyper", "lommel", "quadrature",
           "summation", "EvalParams", "IdentityReport", "Member", "Verdict",
           "__version__"]
