"""Walk through identity verification reports, one per family.

Run:  python demos/02_identity_reports.py
"""

from divsum.identities import REGISTRY, run_identity

SHOWCASE = [
    ("main-plus", {"s": 0.5, "x": 2.5}),
    ("coalescence-fir", {"x": 2.5}),
    ("cohen", {"s": 0.25, "x": 1.6, "k": 1}),
    ("lambda-phi", {"s": 0.3, "x": 1.4}),
    ("voronoi-sharp", {"s": 0.0, "x": 10.5}),
    ("voronoi-weighted", {"alpha": 0.5, "beta": 3.5, "s": 0.3}),
    ("wigert", {"s": 1.0}),
    ("riesz-odd", {"q": 5, "s": 0.2, "x": 3.3, "k": 1}),
    ("modular-selfreciprocal", {"s": 0.4, "alpha": 2.0}),
    ("lommel-series-modular", {"s": 0.3, "alpha": 1.7}),
    ("pv-lommel", {"s": 0.5, "x": 1.3, "alpha": 0.8}),
    ("dixon-ferrar", {"s": 0.3, "alpha": 1.0, "beta": 2.0}),
    ("eta-contour", {"s": 0.3, "x": 1.2}),
]

for identity_id, overrides in SHOWCASE:
    rep = run_identity(identity_id, overrides)
    print(f"\n### {identity_id}  ->  {rep.verdict.value}"
          f"  (max residual {rep.max_residual:.3e}, tol {rep.tol_used:.0e})")
    for m in rep.members:
        v = m.value
        shown = f"{v.real:+.12f}" if abs(v.imag) < 1e-9 else f"{v:+.10f}"
        print(f"    {m.label:32s} {shown}   err<={m.err_estimate:.1e}")

print(f"\nregistry holds {len(REGISTRY)} identities; see `divsum list`")
