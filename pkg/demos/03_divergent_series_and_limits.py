"""Edge phenomena: divergent-series interpretation, a false identity, and
coalescence limits.

Run:  python demos/03_divergent_series_and_limits.py
"""

import math

import numpy as np

from divsum import arith
from divsum.identities import (direct_binomial_series,
                               interpret_divergent_series)
from divsum.identities.divergent import PoleCollisionError

print("=== analytic continuation of a divergent divisor series ===")
s, x = 0.4, 1.5
for w in (2.0, 1.5, 1.1):
    interp = interpret_divergent_series(s, x, w)
    direct = direct_binomial_series(complex(s), x, complex(w))
    print(f"w = {w}: continued {interp.imag:+.12f}i   direct {direct.imag:+.12f}i"
          f"   |diff| {abs(interp-direct):.2e}")

val = interpret_divergent_series(s, x, 0.5)
print(f"w = 0.5 (series diverges classically): continued value {val.imag:+.12f}i")
try:
    interpret_divergent_series(0.5, x, 0.5)
except PoleCollisionError as exc:
    print(f"s = w = 1/2 is excluded: {exc}")

print("\n=== the false two-sided sine identity diverges ===")
# sum sigma_s(n) sin(n alpha): partial sums grow without bound since the
# terms themselves grow like n^s.  The claimed alpha <-> beta symmetric
# combination is therefore meaningless as it stands.
alpha = 1.0
sexp = 1.3
N = 30_000
n = np.arange(1, N + 1)
sig = arith.sigma_array(sexp, N)[1:].real
partial = np.cumsum(sig * np.sin(n * alpha))
checkpoints = [10, 100, 1000, 10_000, 30_000]
for c in checkpoints:
    print(f"  partial sum at N={c:>6d}: {partial[c-1]:+.4e}")
print("  (growing oscillation, no Abel-style rescue at this growth rate)")

print("\n=== coalescence near the half-odd orders ===")
from divsum.identities import eval_main_theorem

for s_probe in (0.5, 0.5 + 1e-4):
    rep = eval_main_theorem("Plus", s_probe, 2.5)
    print(f"s = {s_probe}: residual {rep.max_residual:.2e}  ({rep.verdict.value})")
print("at s = 1/2 the two-part expansion merges into a single rational series")
