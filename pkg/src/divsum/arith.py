"""Arithmetic functions, Dirichlet characters, Gauss sums.

Everything here is exact finite arithmetic (complex powers of integers
aside).  Divisor lists are memoised; bulk sieves supply coefficient arrays
for the identity evaluators, bit-identical to the per-n routines.
"""

from __future__ import annotations

import cmath
import math
import threading
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

__all__ = [
    "NotPrimeError", "divisors", "divisor_sigma", "generalized_psi", "r2_count",
    "DirichletCharacter", "characters_mod", "gauss_sum", "twisted_sigma",
    "floor_weight", "sigma_array", "psi_array", "twisted_sigma_array",
    "r2_array", "primed_divisor_sum",
]


class NotPrimeError(ValueError):
    pass


_div_lock = threading.Lock()


@lru_cache(maxsize=200_000)
def divisors(n: int) -> tuple:
    """Sorted divisors of n by trial division (n <= 10**7 intended)."""
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def divisor_sigma(s, n: int) -> complex:
    """sigma_s(n) = sum of d**s over divisors d of n; sigma_0 counts divisors."""
    with _div_lock:
        ds = divisors(n)
    s = complex(s)
    if s == 0:
        return complex(len(ds))
    return sum(complex(d) ** s for d in ds)


def generalized_psi(m: int, s, n: int) -> complex:
    """sum of j**s over j with j**m | n; m=1 gives sigma_s, m=2 the square-divisor sum."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    s = complex(s)
    total = 0.0 + 0.0j
    j = 1
    while j ** m <= n:
        if n % (j ** m) == 0:
            total += complex(j) ** s
        j += 1
    return total


def r2_count(n: int) -> int:
    """Representations of n as an ordered sum of two squares (Jacobi)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    total = 0
    for d in divisors(n):
        if d % 2 == 1:
            total += 1 if d % 4 == 1 else -1
    return 4 * total


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def _least_primitive_root(q: int) -> int:
    """Least primitive root modulo the prime q."""
    if q == 2:
        return 1
    phi = q - 1
    prime_factors = set()
    m = phi
    p = 2
    while p * p <= m:
        if m % p == 0:
            prime_factors.add(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        prime_factors.add(m)
    for g in range(2, q):
        if all(pow(g, phi // p, q) != 1 for p in prime_factors):
            return g
    raise NotPrimeError(f"no primitive root mod {q}")


@dataclass(frozen=True)
class DirichletCharacter:
    """Character modulo a prime q, tabulated on residues 0..q-1."""
    modulus: int
    index: int                      # exponent against the fixed primitive root
    values: tuple = field(repr=False)
    is_principal: bool = False
    is_odd: bool = False
    is_primitive: bool = False

    def __call__(self, n: int) -> complex:
        return self.values[n % self.modulus]

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter(
            self.modulus, (-self.index) % (self.modulus - 1) if self.modulus > 2 else 0,
            tuple(v.conjugate() for v in self.values),
            self.is_principal, self.is_odd, self.is_primitive)

    def value_array(self, nmax: int) -> np.ndarray:
        base = np.asarray(self.values, dtype=complex)
        reps = int(np.ceil((nmax + 1) / self.modulus))
        return np.tile(base, reps)[: nmax + 1]


@lru_cache(maxsize=64)
def characters_mod(q: int) -> tuple:
    """All q-1 Dirichlet characters mod prime q, ordered by root exponent."""
    if not _is_prime(q):
        raise NotPrimeError(f"{q} is not prime")
    if q == 2:
        return (DirichletCharacter(2, 0, (0.0 + 0.0j, 1.0 + 0.0j),
                                   is_principal=True, is_odd=False, is_primitive=False),)
    g = _least_primitive_root(q)
    # discrete logs: dlog[g^k mod q] = k
    dlog = [0] * q
    acc = 1
    for k in range(q - 1):
        dlog[acc] = k
        acc = (acc * g) % q
    out = []
    for j in range(q - 1):
        vals = [0.0 + 0.0j] * q
        for n in range(1, q):
            vals[n] = cmath.exp(2j * cmath.pi * j * dlog[n] / (q - 1))
        # snap roots of unity that are exactly real/imaginary
        vals = [complex(round(v.real, 15), round(v.imag, 15)) for v in vals]
        out.append(DirichletCharacter(
            q, j, tuple(vals),
            is_principal=(j == 0),
            is_odd=(j % 2 == 1),
            is_primitive=(j != 0),
        ))
    return tuple(out)


def gauss_sum(chi: DirichletCharacter) -> complex:
    """tau(chi) = sum over residues of chi(n) e^(2 pi i n / q)."""
    q = chi.modulus
    return sum(chi.values[n] * cmath.exp(2j * cmath.pi * n / q) for n in range(q))


def twisted_sigma(s, chi: DirichletCharacter, n: int) -> complex:
    """sum over divisors d|n of chi(d) d**s."""
    if n < 1:
        raise ValueError("n must be positive")
    s = complex(s)
    return sum(chi(d) * complex(d) ** s for d in divisors(n))


def floor_weight(x: float) -> float:
    """floor(x) away from integers, x - 1/2 at integers."""
    r = round(x)
    if abs(x - r) < 1e-12:
        return r - 0.5
    return math.floor(x)


# ---------------------------------------------------------------- bulk sieves

@lru_cache(maxsize=32)
def _sigma_array_cached(s_key: complex, nmax: int) -> np.ndarray:
    out = np.zeros(nmax + 1, dtype=complex)
    for d in range(1, nmax + 1):
        out[d::d] += complex(d) ** s_key
    return out


def sigma_array(s, nmax: int) -> np.ndarray:
    """sigma_s(n) for n = 0..nmax (index 0 unused, set to 0)."""
    return _sigma_array_cached(complex(s), int(nmax))


@lru_cache(maxsize=32)
def _psi_array_cached(s_key: complex, nmax: int) -> np.ndarray:
    out = np.zeros(nmax + 1, dtype=complex)
    j = 1
    while j * j <= nmax:
        out[j * j:: j * j] += complex(j) ** s_key
        j += 1
    return out


def psi_array(s, nmax: int) -> np.ndarray:
    """square-divisor sums psi_s(n) for n = 0..nmax."""
    return _psi_array_cached(complex(s), int(nmax))


def twisted_sigma_array(s, chi: DirichletCharacter, nmax: int) -> np.ndarray:
    """sigma_s(chi, n) for n = 0..nmax."""
    out = np.zeros(nmax + 1, dtype=complex)
    for d in range(1, nmax + 1):
        c = chi(d)
        if c != 0:
            out[d::d] += c * complex(d) ** complex(s)
    return out


def r2_array(nmax: int) -> np.ndarray:
    """r2(n) for n = 0..nmax via the odd-divisor character sieve."""
    out = np.zeros(nmax + 1, dtype=float)
    for d in range(1, nmax + 1, 2):
        out[d::d] += 1.0 if d % 4 == 1 else -1.0
    out *= 4.0
    out[0] = 1.0
    return out


def primed_divisor_sum(s, x: float) -> complex:
    """sum' over n <= x of sigma_s(n): half weight at integer x."""
    nx = int(math.floor(x + 1e-12))
    if nx < 1:
        return 0.0 + 0.0j
    arr = sigma_array(s, nx)
    total = complex(arr[1: nx + 1].sum())
    if abs(x - nx) < 1e-12:
        total -= 0.5 * complex(arr[nx])
    return total
