"""Adaptive quadrature primitives.

All integrators accept complex-valued integrands of a real variable and
return a value together with an error estimate and the evaluation count.
Integrands are called on numpy arrays of abscissae; plain scalar callables
are wrapped transparently.

The workhorse is a globally adaptive Gauss-Kronrod 15(7) rule; the
semi-infinite, principal-value, and vertical-line integrators are built on
top of it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .summation import NonConvergenceError

__all__ = [
    "QuadResult",
    "Decay",
    "integrate_adaptive",
    "integrate_semi_infinite",
    "integrate_principal_value",
    "integrate_vertical_line",
    "SingularityOnBoundaryError",
    "TailNotDecayingError",
]


@dataclass(frozen=True)
class QuadResult:
    value: complex
    err_estimate: float
    evals: int


class SingularityOnBoundaryError(ValueError):
    pass


class TailNotDecayingError(RuntimeError):
    pass


@dataclass(frozen=True)
class Decay:
    """Declared decay of an integrand on [a, infinity)."""
    kind: str  # "exponential" | "algebraic"
    power: float = 0.0

    @staticmethod
    def exponential() -> "Decay":
        return Decay("exponential")

    @staticmethod
    def algebraic(p: float) -> "Decay":
        if p <= 1.0:
            raise ValueError("algebraic decay needs power p > 1 for integrability")
        return Decay("algebraic", p)


# Gauss-Kronrod 15(7) nodes/weights on [-1, 1] (QUADPACK dqk15 constants).
_XGK = np.array([
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0,
])
_WGK = np.array([
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
])
_WG = np.array([
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469,
])

_NODES = np.concatenate([-_XGK[:-1], [0.0], _XGK[-2::-1]])          # 15 ascending
_W_KRON = np.concatenate([_WGK[:-1], [_WGK[-1]], _WGK[-2::-1]])
_W_GAUSS = np.zeros(15)
_W_GAUSS[1:-1:2] = np.concatenate([_WG[:-1], [_WG[-1]], _WG[-2::-1]])


class _ArrayFn:
    """Calls the integrand on arrays, falling back to scalar calls once."""

    def __init__(self, f):
        self.f = f
        self.vectorised = None  # unknown until first call

    def __call__(self, x):
        x = np.atleast_1d(np.asarray(x))
        if self.vectorised is None:
            try:
                out = np.asarray(self.f(x))
                if out.shape == x.shape:
                    self.vectorised = True
                    return out.astype(complex)
            except Exception:
                pass
            self.vectorised = False
        if self.vectorised:
            return np.asarray(self.f(x), dtype=complex)
        return np.array([self.f(float(t)) for t in x], dtype=complex)


def _gk15_batch(fn, lo: np.ndarray, hi: np.ndarray):
    """Apply GK15 to a batch of panels.  Returns (values, errors, nevals)."""
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    pts = mid[:, None] + half[:, None] * _NODES[None, :]
    fv = fn(pts.ravel()).reshape(pts.shape)
    resk = (fv * _W_KRON).sum(axis=1) * half
    resg = (fv * _W_GAUSS).sum(axis=1) * half
    reskh = resk / (hi - lo)
    resasc = (np.abs(fv - reskh[:, None]) * _W_KRON).sum(axis=1) * np.abs(half)
    diff = np.abs(resk - resg)
    with np.errstate(divide="ignore", invalid="ignore"):
        scaled = resasc * np.minimum(1.0, (200.0 * diff / np.maximum(resasc, 1e-300)) ** 1.5)
    err = np.where((resasc > 0) & (diff > 0), scaled, diff)
    return resk, np.maximum(err, np.abs(resk) * 5e-16), pts.size


def integrate_adaptive(f, a: float, b: float, tol: float = 1e-10,
                       max_panels: int = 4096) -> QuadResult:
    """Globally adaptive GK15 integration of f over [a, b]."""
    if not a < b:
        raise ValueError("integration requires a < b")
    fn = f if isinstance(f, _ArrayFn) else _ArrayFn(f)
    lo = np.array([float(a)])
    hi = np.array([float(b)])
    vals, errs, evals = _gk15_batch(fn, lo, hi)
    while True:
        total_val = complex(vals.sum())
        total_err = float(errs.sum())
        if total_err <= tol * max(1.0, abs(total_val)):
            return QuadResult(total_val, total_err, evals)
        if len(lo) >= max_panels:
            raise NonConvergenceError(
                f"adaptive quadrature: {len(lo)} panels, err {total_err:.3g} > tol {tol:.3g}")
        # split the worst panels (up to a quarter of the current count)
        k = max(1, len(lo) // 4)
        order = np.argsort(errs)[::-1]
        split = order[:k]
        split = split[errs[split] > total_err / (4.0 * len(lo))]
        if split.size == 0:
            split = order[:1]
        mid = 0.5 * (lo[split] + hi[split])
        ok = (mid > lo[split]) & (mid < hi[split])
        if not ok.any():  # all candidates at floating-point resolution
            return QuadResult(total_val, total_err, evals)
        split = split[ok]
        mid = 0.5 * (lo[split] + hi[split])
        new_lo = np.concatenate([lo[split], mid])
        new_hi = np.concatenate([mid, hi[split]])
        v, e, n = _gk15_batch(fn, new_lo, new_hi)
        evals += n
        keep = np.setdiff1d(np.arange(len(lo)), split)
        lo = np.concatenate([lo[keep], new_lo])
        hi = np.concatenate([hi[keep], new_hi])
        vals = np.concatenate([vals[keep], v])
        errs = np.concatenate([errs[keep], e])


def integrate_semi_infinite(f, a: float, tol: float = 1e-10,
                            decay: Decay | None = None,
                            first_panel: float = 1.0,
                            growth: float = 1.8,
                            max_panels: int = 120) -> QuadResult:
    """Integrate f over [a, infinity) by geometrically growing panels."""
    decay = decay or Decay.exponential()
    fn = _ArrayFn(f)
    total = 0.0 + 0.0j
    err = 0.0
    evals = 0
    lo = float(a)
    h = first_panel
    mags = []
    for _ in range(max_panels):
        hi = lo + h
        res = integrate_adaptive(fn, lo, hi, tol=tol * 0.2, max_panels=1024)
        total += res.value
        err += res.err_estimate
        evals += res.evals
        mags.append(abs(res.value))
        scale = max(1.0, abs(total))
        if decay.kind == "exponential":
            if len(mags) >= 3 and mags[-1] < tol * scale * 0.1 and mags[-1] <= mags[-2] <= mags[-3]:
                return QuadResult(total, err + mags[-1], evals)
        else:
            ftail = abs(complex(fn(np.array([hi]))[0]))
            tail = ftail * hi / (decay.power - 1.0)
            if tail < tol * scale:
                return QuadResult(total, err + tail, evals)
        if len(mags) >= 6 and mags[-1] > 0 and mags[-1] >= 0.999 * max(mags[-4:-1]) \
                and mags[-1] > tol * scale:
            raise TailNotDecayingError(
                f"panel magnitudes not shrinking near t={hi:.3g} (last {mags[-1]:.3g})")
        lo = hi
        h *= growth
    raise NonConvergenceError("semi-infinite quadrature: panel budget exhausted")


def integrate_principal_value(f, y: float, a: float, b: float | None,
                              tol: float = 1e-10) -> QuadResult:
    """Cauchy principal value of f over (a, b) across a simple pole at y.

    The integrand is expected to behave like g(x)/(x**2 - y**2) with g smooth;
    the window [y-h, y+h] is handled by the symmetrised integrand
    f(y+u) + f(y-u), which is smooth, and the window is refined until stable.
    """
    binf = b is None or math.isinf(b)
    bval = math.inf if binf else float(b)
    if not (a < y < bval):
        raise SingularityOnBoundaryError(f"pole y={y} not interior to ({a}, {b})")
    room = (y - a) if binf else min(y - a, bval - y)
    if room <= 16 * abs(y) * np.finfo(float).eps + 1e-300:
        raise SingularityOnBoundaryError(f"pole y={y} too close to an endpoint")
    fn = _ArrayFn(f)

    def symmetric_part(h):
        # the symmetrised integrand has a removable singularity at u = 0 and
        # the open Kronrod rule never evaluates the endpoint itself
        sym = lambda u: fn(y + np.asarray(u)) + fn(y - np.asarray(u))
        return integrate_adaptive(sym, 0.0, h, tol=tol * 0.2, max_panels=1024)

    h = 0.5 * room
    res_h = symmetric_part(h)
    res_h2 = symmetric_part(h / 2)
    # the h/2 window plus the two flanking strips must reproduce the h window
    strip_lo = integrate_adaptive(fn, y - h, y - h / 2, tol=tol * 0.2, max_panels=1024)
    strip_hi = integrate_adaptive(fn, y + h / 2, y + h, tol=tol * 0.2, max_panels=1024)
    stability = abs(res_h.value - (res_h2.value + strip_lo.value + strip_hi.value))
    evals = res_h.evals + res_h2.evals + strip_lo.evals + strip_hi.evals

    left = integrate_adaptive(fn, a, y - h, tol=tol * 0.2, max_panels=2048) \
        if y - h > a else QuadResult(0.0, 0.0, 0)
    if binf:
        right = integrate_semi_infinite(fn, y + h, tol=tol * 0.2)
    else:
        right = integrate_adaptive(fn, y + h, bval, tol=tol * 0.2, max_panels=2048) \
            if bval > y + h else QuadResult(0.0, 0.0, 0)
    value = left.value + right.value + res_h.value
    err = left.err_estimate + right.err_estimate + res_h.err_estimate + stability
    return QuadResult(value, err, evals + left.evals + right.evals)


def integrate_vertical_line(g, c: float, tol: float = 1e-10,
                            decay_rate_hint: float = math.pi / 2,
                            t_start: float = 40.0,
                            t_cap: float = 640.0,
                            tilt: float = 0.0) -> QuadResult:
    """(1/(2*pi*i)) * integral of g along the line Re z = c.

    Truncates at |Im z| = T and doubles T until the value settles; the
    integrand must decay at least exponentially in |Im z|.

    Gamma-type integrands whose exponential factors exactly cancel on the
    vertical line (constant-amplitude oscillation) never settle under
    truncation; a positive `tilt` bends the two half-lines into rays at
    angle pi/2 + tilt where the log-superlinear Gamma decay takes over.
    The deformation is value-preserving when g is analytic off the real
    axis, as Gamma-product integrands are.
    """
    gfn = _ArrayFn(g)

    if tilt > 0.0:
        up = cmath.exp(1j * (math.pi / 2.0 + tilt))
        total = 0.0 + 0.0j
        err = 0.0
        evals = 0
        for direction, sign in ((up, 1.0), (up.conjugate(), -1.0)):
            # upper ray leaves c upward; the lower half-line is traversed
            # toward c, hence the sign flip on its outgoing parametrisation
            ray = integrate_semi_infinite(
                lambda r, d=direction: gfn(c + d * np.asarray(r)) * d,
                0.0, tol=tol * 0.5, first_panel=4.0, max_panels=200)
            total += sign * ray.value
            err += ray.err_estimate
            evals += ray.evals
        return QuadResult(total / (2j * math.pi), err / (2.0 * math.pi), evals)

    def on_line(t):
        return gfn(c + 1j * np.asarray(t))

    T = max(t_start, min(t_cap, -math.log(max(tol, 1e-300) * 1e-2) / max(decay_rate_hint, 1e-3)))
    res = integrate_adaptive(on_line, -T, T, tol=tol * 0.1, max_panels=8192)
    value, err, evals = res.value, res.err_estimate, res.evals
    while True:
        if 2 * T > t_cap:
            raise NonConvergenceError(
                f"vertical-line truncation at T={T:.0f} not converged within tol={tol:.3g}")
        lo = integrate_adaptive(on_line, -2 * T, -T, tol=tol * 0.1, max_panels=2048)
        hi = integrate_adaptive(on_line, T, 2 * T, tol=tol * 0.1, max_panels=2048)
        delta = lo.value + hi.value
        value += delta
        err += lo.err_estimate + hi.err_estimate
        evals += lo.evals + hi.evals
        T *= 2
        if abs(delta) <= tol * max(1.0, abs(value)):
            break
    return QuadResult(value / (2.0 * math.pi), err / (2.0 * math.pi) + abs(delta), evals)
