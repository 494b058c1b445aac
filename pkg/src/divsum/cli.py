"""Command-line verification harness.

Subcommands:

  verify   run identity checks for one id or "all", emit records
  sweep    grid product of verify over list-valued parameters
  special  evaluate a registered special function at given arguments
  list     enumerate identity ids with their parameters and defaults

Records are emitted as text, newline-delimited JSON, or CSV.  Runs are
deterministic for a fixed configuration, including across --jobs settings:
results are computed in any order and re-sorted before emission.

Exit codes: 0 all passed, 1 any failure, 3 inconclusive only, 2 usage error.
"""

from __future__ import annotations

import argparse
import cmath
import concurrent.futures
import itertools
import json
import sys

from . import arith, gammazeta, hyper, lommel
from .bessel import BesselKind, bessel, struve_h
from .identities.registry import REGISTRY, run_identity
from .reports import EvalParams, Verdict
from .summation import SumMode, SumPolicy

_GRID_KEYS = ("s", "x", "alpha", "beta", "q", "a", "k", "m", "w", "nu", "lam", "variant")


def _parse_scalar(text: str):
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        pass
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        return text


def _parse_list(text: str) -> list:
    return [_parse_scalar(tok) for tok in str(text).split(",") if tok != ""]


def _load_config(path: str) -> dict:
    out = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"malformed config line: {raw.rstrip()}")
            key, val = line.split("=", 1)
            out[key.strip()] = val.strip()
    return out


def _fmt_value(v) -> str:
    if isinstance(v, dict) and set(v) == {"re", "im"}:
        return f"{v['re']:.12g}{v['im']:+.12g}j"
    return f"{v}"


def _record_text(rec: dict) -> str:
    if "error" in rec:
        return f"{rec['identity_id']}  {rec['verdict']:12s} {rec['error']}"
    inputs = " ".join(f"{k}={_fmt_value(v)}" for k, v in rec["inputs"].items())
    resid = max((r["value"] for r in rec["residuals"]), default=0.0)
    return (f"{rec['identity_id']:24s} {rec['verdict']:12s} "
            f"max-residual {resid:.3e}  tol {rec['tol']:.1e}  {inputs}")


def _record_csv_row(rec: dict) -> list:
    resid = max((r["value"] for r in rec.get("residuals", [])), default="")
    members = "; ".join(f"{m['label']}={_fmt_value(m['value'])}"
                        for m in rec.get("members", []))
    inputs = "; ".join(f"{k}={_fmt_value(v)}" for k, v in rec.get("inputs", {}).items())
    return [rec["identity_id"], rec["verdict"], inputs, members,
            resid, rec.get("tol", ""), rec.get("error", "")]


def _eval_point(identity_id: str, overrides: dict, params: EvalParams,
                tol: float | None) -> dict:
    try:
        rep = run_identity(identity_id, overrides, params, tol)
        return rep.to_dict()
    except Exception as exc:  # surfaced as a Fail record, not a crash
        return {"identity_id": identity_id,
                "inputs": {k: overrides.get(k) for k in sorted(overrides)},
                "members": [], "residuals": [],
                "tol": tol or 0.0, "verdict": Verdict.FAIL.value,
                "notes": {}, "error": f"{type(exc).__name__}: {exc}"}


def _emit(records: list[dict], fmt: str, out_path: str | None) -> None:
    records.sort(key=lambda r: (r["identity_id"],
                                json.dumps(r.get("inputs", {}), sort_keys=True)))
    lines = []
    if fmt == "json":
        lines = [json.dumps(r, sort_keys=True) for r in records]
    elif fmt == "csv":
        lines = ["identity_id,verdict,inputs,members,max_residual,tol,error"]
        for r in records:
            row = _record_csv_row(r)
            lines.append(",".join('"' + str(c).replace('"', '""') + '"' for c in row))
    else:
        lines = [_record_text(r) for r in records]
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _exit_code(records: list[dict]) -> int:
    verdicts = {r["verdict"] for r in records}
    if Verdict.FAIL.value in verdicts:
        return 1
    if Verdict.INCONCLUSIVE.value in verdicts:
        return 3
    return 0


def _build_params(cfg: dict) -> tuple[EvalParams, float | None]:
    policy_kwargs = {}
    if "terms" in cfg:
        policy_kwargs["max_terms"] = int(cfg["terms"])
    if "tol" in cfg:
        policy_kwargs["tol"] = min(float(cfg["tol"]) * 1e-2, 1e-10)
    eval_kwargs = {}
    if policy_kwargs:
        eval_kwargs["series_policy"] = SumPolicy(
            tol=policy_kwargs.get("tol", 1e-10),
            max_terms=policy_kwargs.get("max_terms", 1_000_000),
            mode=SumMode.PLAIN_COMPENSATED)
    if "quad_tol" in cfg:
        eval_kwargs["quad_tol"] = float(cfg["quad_tol"])
    tol = float(cfg["tol"]) if "tol" in cfg else None
    return EvalParams(**eval_kwargs), tol


def _gather_points(cfg: dict, sweep: bool) -> list[dict]:
    lists = {}
    for key in _GRID_KEYS:
        if key in cfg and cfg[key] is not None:
            vals = _parse_list(cfg[key]) if sweep else [_parse_scalar(str(cfg[key]))]
            if sweep and len(vals) == 0:
                raise ValueError(f"empty grid for {key}")
            lists[key] = vals
    if not lists:
        return [{}]
    keys = sorted(lists)
    return [dict(zip(keys, combo)) for combo in itertools.product(*(lists[k] for k in keys))]


def _run_verify(args, sweep: bool) -> int:
    cfg = {}
    if args.config:
        cfg.update(_load_config(args.config))
    for key in (*_GRID_KEYS, "tol", "terms", "quad_tol", "id", "out", "jobs"):
        val = getattr(args, key.replace("-", "_"), None)
        if val is not None:
            cfg[key] = val
    if "id" not in cfg:
        print("error: --id is required (or provide it in the config file)", file=sys.stderr)
        return 2
    ids = list(REGISTRY) if cfg["id"] == "all" else [cfg["id"]]
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        print(f"error: unknown identity id(s): {', '.join(unknown)}", file=sys.stderr)
        return 2
    try:
        params, tol = _build_params(cfg)
        points = _gather_points(cfg, sweep)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    jobs = max(1, int(cfg.get("jobs", 1)))
    tasks = [(i, pt) for i in ids for pt in points]
    if jobs == 1:
        records = [_eval_point(i, pt, params, tol) for i, pt in tasks]
    else:
        with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(lambda t: _eval_point(t[0], t[1], params, tol), tasks))
    fmt = "json" if args.json else ("csv" if args.csv else "text")
    _emit(records, fmt, cfg.get("out"))
    return _exit_code(records)


# ------------------------------------------------------------ special values

def _as_int(v) -> int:
    return int(v.real) if isinstance(v, complex) else int(v)


def _as_float(v) -> float:
    return float(v.real) if isinstance(v, complex) else float(v)


def _special_registry() -> dict:
    """name -> (arity, evaluator over parsed argument list)."""
    return {
        "gamma": (1, lambda a: gammazeta.gamma(a[0])),
        "digamma": (1, lambda a: gammazeta.digamma(a[0])),
        "zeta": (1, lambda a: gammazeta.zeta(a[0])),
        "zetaprime": (1, lambda a: gammazeta.zeta_derivative(a[0])),
        "hurwitz": (2, lambda a: gammazeta.hurwitz_zeta(a[0], _as_float(a[1])).value),
        "L": (3, lambda a: gammazeta.dirichlet_l(
            a[0], arith.characters_mod(_as_int(a[1]))[_as_int(a[2])])),
        "besselJ": (2, lambda a: bessel(BesselKind.J, a[0], a[1])),
        "besselY": (2, lambda a: bessel(BesselKind.Y, a[0], a[1])),
        "besselI": (2, lambda a: bessel(BesselKind.I, a[0], a[1])),
        "besselK": (2, lambda a: bessel(BesselKind.K, a[0], a[1])),
        "struveH": (2, lambda a: struve_h(a[0], _as_float(a[1]))),
        "lommelS": (3, lambda a: lommel.lommel_big_S(lommel.LommelParams(a[0], a[1]), a[2])),
        "lommelT": (3, lambda a: lommel.modified_lommel_T(
            lommel.LommelParams(a[0], a[1]), _as_float(a[2]))),
        "sigma": (2, lambda a: arith.divisor_sigma(a[0], _as_int(a[1]))),
        "psi": (2, lambda a: arith.generalized_psi(2, a[0], _as_int(a[1]))),
        "omega": (3, lambda a: arith.generalized_psi(_as_int(a[0]), a[1], _as_int(a[2]))),
        "r2": (1, lambda a: arith.r2_count(_as_int(a[0]))),
        "tau": (2, lambda a: arith.gauss_sum(
            arith.characters_mod(_as_int(a[0]))[_as_int(a[1])])),
        "stieltjes": (1, lambda a: gammazeta.stieltjes_constant(_as_int(a[0]))),
        "xi": (1, lambda a: gammazeta.xi_functions(a[0]).xi_value),
        "Xi": (1, lambda a: gammazeta.xi_functions(a[0]).big_xi_value),
    }


def _run_special(args) -> int:
    if args.function == "pFq":
        joined = " ".join(args.args)
        parts = joined.split("/")
        if len(parts) != 3:
            print("usage: special pFq a1 [a2 ...] / b1 [b2 ...] / z", file=sys.stderr)
            return 2
        try:
            aa = [complex(_parse_scalar(t)) for t in parts[0].split()]
            bb = [complex(_parse_scalar(t)) for t in parts[1].split()]
            zz = complex(_parse_scalar(parts[2].strip()))
            res = hyper.pfq_series(hyper.HyperSpec(tuple(aa), tuple(bb), zz))
            value, err = complex(res.value), res.err_estimate
        except Exception as exc:
            print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
            return 2
    else:
        reg = _special_registry()
        if args.function not in reg:
            print(f"error: unknown function {args.function!r}; known: pFq, "
                  + ", ".join(sorted(reg)), file=sys.stderr)
            return 2
        arity, fn = reg[args.function]
        if len(args.args) != arity:
            print(f"error: {args.function} expects {arity} argument(s)", file=sys.stderr)
            return 2
        vals = [_parse_scalar(v) for v in args.args]
        vals = [complex(v) if isinstance(v, (int, float)) else v for v in vals]
        try:
            value = complex(fn(vals))
            err = abs(value) * 1e-13
        except Exception as exc:
            print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
            return 2
    if args.json:
        print(json.dumps({"function": args.function,
                          "args": [str(v) for v in args.args],
                          "value": {"re": value.real, "im": value.imag},
                          "err_estimate": float(err)}, sort_keys=True))
    else:
        shown = f"{value.real:.15g}" if abs(value.imag) < 1e-300 else f"{value:.15g}"
        print(f"{shown}  (err_estimate {float(err):.2e})")
    return 0


def _run_list(args) -> int:
    for entry in sorted(REGISTRY.values(), key=lambda e: e.id):
        params = ", ".join(f"{k}={v}" for k, v in entry.params.items()) or "(no parameters)"
        tol = f"{entry.default_tol:.0e}" if entry.default_tol else "per-k"
        print(f"{entry.id:26s} tol {tol:8s} {entry.description}")
        print(f"{'':26s} defaults: {params}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="divsum",
                                 description="numerical verification of divisor-sum identities")
    sub = ap.add_subparsers(dest="command")

    def add_common(p):
        p.add_argument("--id", help="identity id or 'all'")
        for key in _GRID_KEYS:
            p.add_argument(f"--{key}")
        p.add_argument("--tol", type=float)
        p.add_argument("--terms", type=int)
        p.add_argument("--quad-tol", dest="quad_tol", type=float)
        p.add_argument("--json", action="store_true")
        p.add_argument("--csv", action="store_true")
        p.add_argument("--out")
        p.add_argument("--jobs", type=int, default=None)
        p.add_argument("--config", help="flat key=value configuration file")

    pv = sub.add_parser("verify", help="verify one identity (or all) at one point")
    add_common(pv)
    ps = sub.add_parser("sweep", help="verify over a comma-separated parameter grid")
    add_common(ps)
    pf = sub.add_parser("special", help="evaluate a special function")
    pf.add_argument("function")
    pf.add_argument("args", nargs="*")
    pf.add_argument("--json", action="store_true")
    sub.add_parser("list", help="enumerate identity ids")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "verify":
        return _run_verify(args, sweep=False)
    if args.command == "sweep":
        return _run_verify(args, sweep=True)
    if args.command == "special":
        return _run_special(args)
    if args.command == "list":
        return _run_list(args)
    ap.print_help()
    return 2


if __name__ == "__main__":
    sys.exit(main())
