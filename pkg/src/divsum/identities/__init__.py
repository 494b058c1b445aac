"""Identity evaluators: one per verifiable transformation formula.

Each evaluator computes every side of its identity by an independent route
(direct summation against closed forms, residue sums, or quadrature) and
returns an IdentityReport with pairwise residuals and a verdict.
"""

from .main_transform import eval_main_theorem, eval_lemma_I
from .coalescence import eval_coalescence
from .bessel_sums import eval_cohen, eval_lambda_phi
from .voronoi import eval_voronoi_dirichlet, eval_voronoi_weighted
from .wigert import eval_wigert
from .char_entries import eval_entry_riesz, eval_entry_assembled
from .koshliakov import (koshliakov_transform, eval_f_function,
                         eval_f_integral_rep, eval_koshliakov_corollary,
                         eval_modular_newthm, eval_modular_s0_limit,
                         eval_lommel_series, eval_pv_lommel_integral,
                         koshliakov_lambda_value)
from .eta_kappa import eval_eta_kappa, eval_kappa_phi
from .divergent import interpret_divergent_series, direct_binomial_series
from .dixon_ferrar import eval_dixon_ferrar
from .registry import REGISTRY, run_identity

__all__ = [
    "eval_main_theorem", "eval_lemma_I", "eval_coalescence", "eval_cohen",
    "eval_lambda_phi", "eval_voronoi_dirichlet", "eval_voronoi_weighted",
    "eval_wigert", "eval_entry_riesz", "eval_entry_assembled",
    "koshliakov_transform", "eval_f_function", "eval_f_integral_rep",
    "eval_koshliakov_corollary", "eval_modular_newthm", "eval_modular_s0_limit",
    "eval_lommel_series", "eval_pv_lommel_integral", "eval_eta_kappa",
    "eval_kappa_phi", "interpret_divergent_series", "direct_binomial_series",
    "eval_dixon_ferrar", "REGISTRY", "run_identity", "koshliakov_lambda_value",
]
