"""Evaluator-level checks: preconditions, error surfaces, spot values."""

import math

import pytest

from divsum import arith
from divsum.identities import (eval_cohen, eval_coalescence, eval_dixon_ferrar,
                               eval_entry_assembled, eval_entry_riesz,
                               eval_f_function, eval_lambda_phi, eval_lemma_I,
                               eval_main_theorem, eval_voronoi_dirichlet,
                               eval_voronoi_weighted, eval_wigert,
                               interpret_divergent_series)
from divsum.identities.coalescence import IntegerXNotAllowed
from divsum.identities.char_entries import (ParityMismatchError,
                                            PrincipalCharacterError)
from divsum.identities.divergent import PoleCollisionError
from divsum.identities.main_transform import DomainRestriction, master_I_closed
from divsum.identities.voronoi import IntegerXNotAllowed as VorIntegerX
from divsum.reports import PreconditionViolation, Verdict


def test_main_theorem_preconditions():
    with pytest.raises(PreconditionViolation):
        eval_main_theorem("Plus", -0.2, 2.5)
    with pytest.raises(DomainRestriction):
        eval_main_theorem("Plus", 0.5, 3.0)
    # minus sign carries no integer-x restriction
    rep = eval_main_theorem("Minus", 0.5, 3.0)
    assert rep.verdict is Verdict.PASS


def test_main_theorem_complex_s():
    rep = eval_main_theorem("Plus", 0.5 + 0.2j, 2.5)
    assert rep.max_residual < 1e-8


def test_lemma_preconditions_and_continuity():
    with pytest.raises(PreconditionViolation):
        eval_lemma_I(0.3, 2.5, lam=0.5)
    with pytest.raises(DomainRestriction):
        eval_lemma_I(0.7, 1.0)
    bracket = abs(master_I_closed(0.3, 1.0 - 1e-4) - master_I_closed(0.3, 1.0 + 1e-4))
    assert bracket < 1e-3


def test_coalescence_integer_x_guard():
    with pytest.raises(IntegerXNotAllowed):
        eval_coalescence("FirCorollary", 0, 3.0)
    rep = eval_coalescence("MinusHalf", 0, 3.0)  # integer x allowed here
    assert rep.verdict is Verdict.PASS


def test_cohen_preconditions():
    with pytest.raises(PreconditionViolation):
        eval_cohen(1.0, 1.6, 1)  # integer s excluded
    rep1 = eval_cohen(0.25, 1.6, 1)
    rep2 = eval_cohen(0.25, 1.6, 2)
    assert rep1.verdict is Verdict.PASS and rep2.verdict is Verdict.PASS
    drift = abs(rep1.members[1].value - rep2.members[1].value)
    assert drift < 2e-8


def test_lambda_phi_preconditions_and_symmetry():
    with pytest.raises(PreconditionViolation):
        eval_lambda_phi(1.4, 0.8)
    # the identity holds at -s as well (K order symmetry on the plain
    # series side); each family member passes on its own
    a = eval_lambda_phi(1.4, 0.3)
    b = eval_lambda_phi(1.4, -0.3)
    assert a.verdict is Verdict.PASS and b.verdict is Verdict.PASS


def test_voronoi_guards():
    with pytest.raises(VorIntegerX):
        eval_voronoi_dirichlet(7.0, 0.0)
    with pytest.raises(PreconditionViolation):
        eval_voronoi_weighted("ExpDecay", 1.0, 3.5, 0.3)


def test_voronoi_weighted_empty_interval():
    rep = eval_voronoi_weighted("ExpDecay", 0.3, 0.7, 0.3)
    assert abs(rep.members[0].value) == 0.0
    assert abs(rep.members[1].value) < 1e-6


def test_wigert_and_parity_guards():
    with pytest.raises(PreconditionViolation):
        eval_wigert(-1.0, 4.0 * math.pi ** 2)
    chars = arith.characters_mod(5)
    odd = next(c for c in chars if c.is_odd)
    princ = next(c for c in chars if c.is_principal)
    with pytest.raises(PrincipalCharacterError):
        eval_entry_riesz("Odd", princ, 0.2, 3.3, 1)
    with pytest.raises(ParityMismatchError):
        eval_entry_riesz("Even", odd, 0.2, 3.3, 1)


def test_entry_assembled_gcd_guard():
    with pytest.raises(PreconditionViolation):
        eval_entry_assembled("SinEntry", 5, 5, 3.3, 0.2)


def test_divergent_pole_collision():
    with pytest.raises(PoleCollisionError):
        interpret_divergent_series(0.5, 1.5, 0.5)
    val = interpret_divergent_series(0.4, 1.5, 0.5)
    # regression pin of the interpreted divergent-series value
    assert abs(val - 22.558178337472845j) < 1e-6


def test_dixon_ferrar_symmetric_case():
    rep = eval_dixon_ferrar(0.5, 1.3, 1.3)
    assert rep.max_residual < 1e-12


def test_f_function_near_integer_snap():
    v_eps = eval_f_function(2.0 + 1e-9, 0.4)
    lo = eval_f_function(2.0 - 1e-4, 0.4)
    hi = eval_f_function(2.0 + 1e-4, 0.4)
    assert abs(v_eps - 0.5 * (lo + hi)) < 1e-6


def test_entry_assembled_examples():
    # the two-term modulus reduces to the plain divisor-count link
    rep = eval_entry_assembled("CosEntry", 1, 2, 4.3, 0.0)
    assert rep.max_residual < 5e-3
    rep = eval_entry_assembled("SinEntry", 1, 5, 3.3, 0.2)
    assert rep.max_residual < 5e-3


def test_koshliakov_transform_of_zero():
    from divsum.identities import koshliakov_transform
    import numpy as np
    res = koshliakov_transform("First", lambda t: np.zeros_like(t), 0.25, 1.0)
    assert abs(res.value) < 1e-12


def test_pv_lommel_sigma_precondition():
    from divsum.identities import eval_pv_lommel_integral
    with pytest.raises(PreconditionViolation):
        eval_pv_lommel_integral(3.5, 1.3, 0.8)
