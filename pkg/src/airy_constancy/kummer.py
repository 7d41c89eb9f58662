"""Kummer sums and their even/odd partial sums as exact cyclotomic values.

    S(p, q, j)   = sum_{nu < 2q}      zeta_{2q}^(j nu - p nu^3)
    S_e(p, q, j) = sum_{nu < q}       zeta_q^(j nu - 4 p nu^3)
    S_o(p, q, j) = sum_{nu < 2q, odd} zeta_{2q}^(j nu - p nu^3)

The even terms of S are exactly S_e, so S = S_e + S_o.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .cyclo import CycloSum, from_exponents, to_complex
from .numtheory import DomainError, complement, factorize


@dataclass(frozen=True)
class KummerSpec:
    p: int
    q: int
    j: int

    def __post_init__(self):
        if self.q < 1:
            raise DomainError(f"q must be >= 1, got {self.q}")
        if self.p != 0 and gcd(self.p, self.q) != 1:
            raise DomainError(f"{self.p}/{self.q} is not reduced")
        object.__setattr__(self, "j", self.j % (2 * self.q))


def _spec(spec, q=None, j=None) -> KummerSpec:
    if isinstance(spec, KummerSpec):
        return spec
    return KummerSpec(spec, q, j)


@lru_cache(maxsize=256)
def _cubes(n: int) -> tuple[int, ...]:
    return tuple(v * v * v % n for v in range(n))


def _linear_minus_cubic(n: int, j: int, c: int, nus) -> CycloSum:
    """Sum of zeta_n^(j nu - c nu^3) over ``nus``; cubes are reduced mod n first."""
    cubes = _cubes(n)
    j %= n
    c %= n
    out = [0] * n
    for v in nus:
        out[(j * v - c * cubes[v]) % n] += 1
    return CycloSum(n, tuple(out))


def kummer_S(spec, q=None, j=None) -> CycloSum:
    """Full Kummer sum; accepts a KummerSpec or ``(p, q, j)``."""
    s = _spec(spec, q, j)
    n = 2 * s.q
    return _linear_minus_cubic(n, s.j, s.p, range(n))


def kummer_Se(spec, q=None, j=None) -> CycloSum:
    s = _spec(spec, q, j)
    return _linear_minus_cubic(s.q, s.j, 4 * s.p, range(s.q))


def kummer_So(spec, q=None, j=None) -> CycloSum:
    s = _spec(spec, q, j)
    if s.q % 2 == 0 and s.p % 2 == 0:
        raise DomainError(f"p must be odd when q is even, got {s.p}/{s.q}")
    n = 2 * s.q
    return _linear_minus_cubic(n, s.j, s.p, range(1, n, 2))


def cubic_sum(modulus: int, f1: int, f2: int, f3: int) -> CycloSum:
    """sum_{nu < modulus} zeta_modulus^(f1 nu + f2 nu^2 + f3 nu^3)."""
    return from_exponents(modulus, (f1 * v + f2 * v * v + f3 * v**3 for v in range(modulus)))


def crt_factors(q: int, f1: int, f2: int, f3: int) -> list[CycloSum]:
    """Per prime-power factors of ``cubic_sum(q, f1, f2, f3)``.

    For the component q_i^n_i with complement c, the quadratic coefficient is
    scaled by c and the cubic one by c^2; the linear one is unchanged.
    """
    out = []
    for prime, n in factorize(q):
        c = complement(q, prime)
        out.append(cubic_sum(prime**n, f1, f2 * c, f3 * c * c))
    return out


def _close(a: complex, b: complex, tol: float) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def _product(sums: list[CycloSum]) -> complex:
    out = complex(1.0)
    for s in sums:
        out *= to_complex(s)
    return out


def crt_split_check(q: int, f3: int, j: int, tol: float = 1e-8) -> bool:
    """Check P(zeta_q | q, f3) against the product of its prime-power factors."""
    if q < 2 or q % 2 == 0:
        raise DomainError(f"q must be odd and >= 2, got {q}")
    whole = to_complex(cubic_sum(q, j, 0, f3))
    return _close(whole, _product(crt_factors(q, j, 0, f3)), tol)


def odd_sum_prefactor(p: int, q: int, j: int) -> complex:
    """zeta_{2q}^(j - p), the factor relating S_o to its order-q polynomial form."""
    return cmath.exp(1j * math.pi * ((j - p) % (2 * q)) / q)


def crt_split_check_even(q: int, p: int, j: int, tol: float = 1e-8) -> bool:
    """Even-q analogue: both the order-q form of S_o and its CRT product.

    With g = (j - 3p) nu - 6p nu^2 - 4p nu^3, checks
    S_o = zeta_{2q}^(j-p) Q(zeta_q) and Q(zeta_q) = prod of prime-power factors.
    """
    if q < 2 or q % 2:
        raise DomainError(f"q must be even and >= 2, got {q}")
    if p % 2 == 0:
        raise DomainError(f"p must be odd when q is even, got {p}")
    g1, g2, g3 = j - 3 * p, -6 * p, -4 * p
    whole = to_complex(cubic_sum(q, g1, g2, g3))
    so = to_complex(kummer_So(p, q, j))
    return _close(so, odd_sum_prefactor(p, q, j) * whole, tol) and _close(
        whole, _product(crt_factors(q, g1, g2, g3)), tol
    )
