"""Identity registry: stable ids, parameter schemas, dispatch.

Every verifiable identity gets one entry, keyed by a short id used by the
command-line harness.  `params` lists the accepted inputs with defaults; a
runner receives resolved keyword arguments plus EvalParams and a tolerance
override.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

from .. import arith
from ..bessel import BesselKind, bessel
from ..reports import EvalParams, Member, make_report
from . import bessel_sums, char_entries, coalescence, dixon_ferrar, divergent
from . import eta_kappa, koshliakov, main_transform, voronoi, wigert


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    runner: object
    params: dict                 # name -> default (None = required)
    description: str
    default_tol: float


def _chi(q: int, parity: str):
    want_odd = parity == "Odd"
    for c in arith.characters_mod(int(q)):
        if not c.is_principal and c.is_odd == want_odd:
            return c
    raise ValueError(f"no non-principal {parity} character mod {q}")


def _self_reciprocal(kind: str):
    def run(nu=0.25, x=1.0, p=None, tol=1e-6):
        import scipy.special as sp
        p = p or EvalParams()
        if kind == "First":
            res = koshliakov.koshliakov_transform("First", lambda t: sp.kv(nu, t), nu, x, p)
            ref = complex(bessel(BesselKind.K, nu, x))
        else:
            res = koshliakov.koshliakov_transform("Second", lambda t: t * sp.kv(nu, t), nu, x, p)
            ref = x * complex(bessel(BesselKind.K, nu, x))
        scale = max(1.0, abs(ref))
        members = [Member("transform", res.value, res.err_estimate),
                   Member("fixed-point", ref, 1e-14)]
        return make_report(f"koshliakov-{kind.lower()}", {"nu": nu, "x": x},
                           members, tol, scale=scale)
    return run


def _divergent_region(s=0.4, x=1.5, w=2.0, p=None, tol=1e-7):
    p = p or EvalParams()
    interp = divergent.interpret_divergent_series(s, x, complex(w), p)
    direct = divergent.direct_binomial_series(complex(s), x, complex(w))
    members = [Member("continued-value", interp, 1e-9),
               Member("direct-series", direct, 1e-10)]
    return make_report("divergent-region", {"s": s, "x": x, "w": w}, members, tol)


def _coalescence_entry(variant: str, default_m: int = 0):
    def run(m=default_m, x=2.5, p=None, tol=1e-8):
        return coalescence.eval_coalescence(variant, int(m), x, p, tol=tol)
    return run


REGISTRY: dict[str, IdentityEntry] = {}


def _register(id, runner, params, description, default_tol):
    REGISTRY[id] = IdentityEntry(id, runner, params, description, default_tol)


_register("main-plus",
          lambda s=0.5, x=2.5, p=None, tol=1e-8:
          main_transform.eval_main_theorem("Plus", s, x, p, tol=tol),
          {"s": 0.5, "x": 2.5},
          "damped divisor sine series (+ phase) vs residue expansion", 1e-8)
_register("main-minus",
          lambda s=0.5, x=2.5, p=None, tol=1e-8:
          main_transform.eval_main_theorem("Minus", s, x, p, tol=tol),
          {"s": 0.5, "x": 2.5},
          "damped divisor sine series (- phase) vs residue expansion", 1e-8)
_register("lemma-master",
          lambda s=0.3, x=2.5, lam=-0.5, p=None, tol=1e-7:
          main_transform.eval_lemma_I(s, x, lam, p, tol=tol),
          {"s": 0.3, "x": 2.5, "lam": -0.5},
          "vertical-line master integral vs hypergeometric closed forms", 1e-7)
for _v, _id in (("PlusHalf", "coalescence-plushalf"), ("MinusHalf", "coalescence-minushalf"),
                ("Cos", "coalescence-cos"), ("Sin", "coalescence-sin"),
                ("FirCorollary", "coalescence-fir"), ("AuxCorollary", "coalescence-aux"),
                ("SecTheorem", "coalescence-sec"), ("ThiTheorem", "coalescence-thi")):
    _register(_id, _coalescence_entry(_v), {"m": 0, "x": 2.5},
              f"coalesced half-odd-order identity ({_v})", 1e-8)
_register("cohen",
          lambda s=0.25, x=1.6, k=1, p=None, tol=1e-8:
          bessel_sums.eval_cohen(s, x, int(k), p, tol=tol),
          {"s": 0.25, "x": 1.6, "k": 1},
          "K-Bessel divisor series vs zeta/rational expansion", 1e-8)
_register("lambda-phi",
          lambda s=0.3, x=1.4, p=None, tol=1e-8:
          bessel_sums.eval_lambda_phi(x, s, p, tol=tol),
          {"s": 0.3, "x": 1.4},
          "rotated K-Bessel series vs rational zeta expansion", 1e-8)
_register("voronoi-sharp",
          lambda s=0.0, x=10.5, p=None, tol=5e-3:
          voronoi.eval_voronoi_dirichlet(x, s, p, tol=tol),
          {"s": 0.0, "x": 10.5},
          "primed divisor sum vs averaged Bessel kernel series", 5e-3)
_register("voronoi-weighted",
          lambda variant="ExpDecay", alpha=0.5, beta=3.5, s=0.3, p=None, tol=1e-6:
          voronoi.eval_voronoi_weighted(variant, alpha, beta, s, p, tol=tol),
          {"variant": "ExpDecay", "alpha": 0.5, "beta": 3.5, "s": 0.3},
          "weighted divisor sum vs smooth integral plus kernel ladder", 1e-6)
_register("wigert",
          lambda s=1.0, beta=4.0 * math.pi ** 2, p=None, tol=1e-8:
          wigert.eval_wigert(s, beta, p, tol=tol),
          {"s": 1.0, "beta": 4.0 * math.pi ** 2},
          "square-divisor damped series vs residue/Kummer expansion", 1e-8)
_register("riesz-odd",
          lambda q=5, s=0.2, x=3.3, k=1, p=None, tol=None:
          char_entries.eval_entry_riesz("Odd", _chi(q, "Odd"), s, x, int(k), p, tol=tol),
          {"q": 5, "s": 0.2, "x": 3.3, "k": 1},
          "odd-character Riesz sum vs L-values plus kernel series", None)
_register("riesz-even",
          lambda q=5, s=0.2, x=3.3, k=1, p=None, tol=None:
          char_entries.eval_entry_riesz("Even", _chi(q, "Even"), s, x, int(k), p, tol=tol),
          {"q": 5, "s": 0.2, "x": 3.3, "k": 1},
          "even-character Riesz sum vs L-values plus kernel series", None)
_register("entry-sin",
          lambda a=1, q=5, x=3.3, s=0.2, p=None, tol=5e-3:
          char_entries.eval_entry_assembled("SinEntry", int(a), int(q), x, s, p, tol=tol),
          {"a": 1, "q": 5, "x": 3.3, "s": 0.2},
          "floor-weighted sine sums vs Hurwitz closed form", 5e-3)
_register("entry-cos",
          lambda a=1, q=5, x=3.3, s=0.2, p=None, tol=5e-3:
          char_entries.eval_entry_assembled("CosEntry", int(a), int(q), x, s, p, tol=tol),
          {"a": 1, "q": 5, "x": 3.3, "s": 0.2},
          "floor-weighted cosine sums vs Hurwitz closed form", 5e-3)
_register("koshliakov-first", _self_reciprocal("First"),
          {"nu": 0.25, "x": 1.0},
          "K-Bessel fixed point of the first Bessel-combination transform", 1e-6)
_register("koshliakov-second", _self_reciprocal("Second"),
          {"nu": 0.25, "x": 2.0},
          "t*K fixed point of the second Bessel-combination transform", 1e-6)
_register("modular-selfreciprocal",
          lambda s=0.4, alpha=2.0, p=None, tol=1e-6:
          koshliakov.eval_modular_newthm(s, alpha, p, tol=tol),
          {"s": 0.4, "alpha": 2.0},
          "K-weighted integrals of the self-reciprocal function vs Xi integral", 1e-6)
_register("modular-s0-limit",
          lambda alpha=2.0, p=None, tol=1e-3:
          koshliakov.eval_modular_s0_limit(alpha, p, tol=tol),
          {"alpha": 2.0},
          "small-order edge of the modular identity vs classical transform", 1e-3)
_register("lommel-series-modular",
          lambda s=0.3, alpha=1.7, p=None, tol=1e-6:
          koshliakov.eval_lommel_series(s, alpha, p, tol=tol),
          {"s": 0.3, "alpha": 1.7},
          "modified Lommel series at alpha and 1/alpha vs Xi integral", 1e-6)
_register("pv-lommel",
          lambda s=0.5, x=1.3, alpha=0.8, p=None, tol=1e-6:
          koshliakov.eval_pv_lommel_integral(s, x, alpha, p, tol=tol),
          {"s": 0.5, "x": 1.3, "alpha": 0.8},
          "principal-value K integral vs modified Lommel closed form", 1e-6)
_register("f-integral-rep",
          lambda x=1.3, s=0.4, p=None, tol=1e-6:
          koshliakov.eval_f_integral_rep(x, s, p, tol=tol),
          {"x": 1.3, "s": 0.4},
          "rational self-reciprocal function vs its kernel integral", 1e-6)
_register("koshliakov-corollary",
          lambda p=None, tol=1e-6: koshliakov.eval_koshliakov_corollary(p, tol=tol),
          {},
          "small-order divisor integral vs Stieltjes-constant closed form", 1e-6)
_register("dixon-ferrar",
          lambda s=0.3, alpha=1.0, beta=2.0, p=None, tol=1e-8:
          dixon_ferrar.eval_dixon_ferrar(s, alpha, beta, p, tol=tol),
          {"s": 0.3, "alpha": 1.0, "beta": 2.0},
          "two-squares K-Bessel pair (order mu versus 1-mu)", 1e-8)
_register("divergent-region", _divergent_region,
          {"s": 0.4, "x": 1.5, "w": 2.0},
          "continued binomial divisor series vs direct sum (Re w > 1)", 1e-7)
_register("eta-contour",
          lambda s=0.3, x=1.2, p=None, tol=1e-7:
          eta_kappa.eval_eta_kappa(s, x, p, tol=tol),
          {"s": 0.3, "x": 1.2},
          "odd rotated K-Bessel series vs exterior/interior contours", 1e-7)
_register("kappa-phi",
          lambda s=0.3, x=1.5, p=None, tol=1e-6:
          eta_kappa.eval_kappa_phi(s, x, p, tol=tol),
          {"s": 0.3, "x": 1.5},
          "subtracted K-Bessel series vs kernel integral of the rotated one", 1e-6)


def run_identity(identity_id: str, overrides: dict | None = None,
                 p: EvalParams | None = None, tol: float | None = None):
    """Resolve parameters against the registry entry and run the evaluator."""
    entry = REGISTRY.get(identity_id)
    if entry is None:
        raise KeyError(f"unknown identity id {identity_id!r}")
    kwargs = dict(entry.params)
    for key, val in (overrides or {}).items():
        if key in kwargs:
            kwargs[key] = val
    kwargs["p"] = p
    kwargs["tol"] = tol if tol is not None else entry.default_tol
    if kwargs["tol"] is None:
        del kwargs["tol"]
    report = entry.runner(**kwargs)
    return dataclasses.replace(report, identity_id=identity_id)
