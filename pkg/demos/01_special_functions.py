"""Tour of the special-function layer.

Run:  python demos/01_special_functions.py
"""

import math

import numpy as np

from divsum import arith, gammazeta as gz
from divsum.bessel import BesselKind, KernelKind, bessel, composite_kernel, struve_h
from divsum.hyper import hyp1f1, hyp3f2_analytic, pfq
from divsum.lommel import LommelParams, lommel_big_S, modified_lommel_T

print("=== gamma / zeta family ===")
print(f"Gamma(1/2)            = {gz.gamma(0.5).real:.15f}   (sqrt(pi) = {math.sqrt(math.pi):.15f})")
print(f"zeta(2)               = {gz.zeta(2.0).real:.15f}   (pi^2/6  = {math.pi**2/6:.15f})")
print(f"zeta(0.5 + 14.13i)    = {gz.zeta(0.5 + 14.134725141734693j):.6g}  (near the first zero)")
print(f"zeta'(0)              = {gz.zeta_derivative(0.0).real:.15f}   (-log(2 pi)/2 = {-0.5*math.log(2*math.pi):.15f})")
print(f"Hurwitz zeta(0, 0.3)  = {gz.hurwitz_zeta(0.0, 0.3).value.real:+.15f}   (1/2 - 0.3)")
print(f"gamma_1 (Stieltjes)   = {gz.stieltjes_constant(1):+.15f}")
print(f"Xi(0)                 = {gz.xi_functions(0.0).big_xi_value.real:.15f}")

print("\n=== Dirichlet characters mod 5 ===")
for chi in arith.characters_mod(5):
    tau = arith.gauss_sum(chi)
    kind = "principal" if chi.is_principal else ("odd" if chi.is_odd else "even")
    print(f"chi_{chi.index} ({kind:9s}): tau = {tau:+.6f},  |tau| = {abs(tau):.6f}")
print(f"L(2, chi_0) = {gz.dirichlet_l(2.0, arith.characters_mod(5)[0]).real:.12f}"
      f"  = zeta(2)(1 - 1/25) = {(gz.zeta(2.0)*(1-0.04)).real:.12f}")

print("\n=== Bessel functions of complex order ===")
print(f"K_(1/2)(2)      = {bessel(BesselKind.K, 0.5, 2.0).real:.15f}"
      f"   closed form {math.sqrt(math.pi/4)*math.exp(-2):.15f}")
print(f"J_(0.5+0.3i)(10)= {bessel(BesselKind.J, 0.5+0.3j, 10.0):.10f}")
print(f"Struve H_0.4(2) = {struve_h(0.4, 2.0).real:.12f}")
kernel = composite_kernel(KernelKind.FIRST_KOSH, 0.25, 1.7)
print(f"first-transform kernel at (1/4, 1.7): {kernel.real:.12f}")

print("\n=== Lommel functions ===")
print(f"S_(0.7,0.25)(3)      = {lommel_big_S(LommelParams(0.7, 0.25), 3.0).real:.12f}")
print(f"S_(0,1)(2) (exceptional family) = {lommel_big_S(LommelParams(0.0, 1.0), 2.0).real:.12f}")
print(f"T_(-1.25,-0.25)(2)   = {modified_lommel_T(LommelParams(-1.25, -0.25), 2.0):.10f}")

print("\n=== hypergeometric continuation ===")
print(f"2F1 Pfaff check: {pfq([0.3,0.7],[1.4],0.4).real:.12f} vs "
      f"{((1-0.4)**-0.3*pfq([0.3,0.7],[1.4],0.4/(0.4-1))).real:.12f}")
v = hyp3f2_analytic(0.25, 0.75, 1.0, 0.25 - 1, 0.75 - 1, -25.0)
w = hyp3f2_analytic(1.25, 1.75, 1.0, 0.25, 0.75, -1.0 / 25.0)
print(f"continued 3F2 pair: {v.real:+.12f} + {w.real:+.12f} = {(v+w).real:.12f} (exactly 1)")
print(f"1F1(1/4;1/2;-50) via transform = {hyp1f1(0.25, 0.5, -50.0).real:.6e}")
