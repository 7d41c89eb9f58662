"""Permutation test for cubics f(x) = f1*x + f2*x^2 + f3*x^3 over Z_q.

Two independent routes: the prime-power coefficient table, and plain
enumeration of the image.
"""
from __future__ import annotations

from typing import NamedTuple

from .numtheory import DomainError, factorize

BRUTE_FORCE_BOUND = 10**6


class ResourceError(RuntimeError):
    """Raised when an enumeration would exceed its evaluation budget."""


class CubicCoeffs(NamedTuple):
    f1: int
    f2: int
    f3: int

    def __call__(self, x: int) -> int:
        return self.f1 * x + self.f2 * x * x + self.f3 * x * x * x


def _row_holds(c: CubicCoeffs, prime: int, n: int) -> bool:
    f1, f2, f3 = (v % prime for v in c)
    if prime == 2:
        if n == 1:
            return (f1 + f2 + f3) % 2 == 1
        return f1 == 1 and f2 == 0 and f3 == 0
    if prime == 3:
        if n == 1:
            return (f1 + f3) % 3 != 0 and f2 == 0
        return f1 != 0 and (f1 + f3) % 3 != 0 and f2 == 0
    linear_only = f1 != 0 and f2 == 0 and f3 == 0
    if (prime - 1) % 3 == 0 or n > 1:
        return linear_only
    # prime = 2 mod 3, n = 1: x -> x^3 is a bijection, so shifted cubes also work
    shifted_cube = f3 != 0 and (f2 * f2 - 3 * f1 * f3) % prime == 0
    return shifted_cube or linear_only


def is_permutation_table(c: CubicCoeffs, q: int) -> bool:
    """Coefficient test applied to every prime power exactly dividing q."""
    if q < 2:
        raise DomainError(f"modulus must be >= 2, got {q}")
    c = CubicCoeffs(*c)
    return all(_row_holds(c, prime, n) for prime, n in factorize(q))


def is_permutation_brute(c: CubicCoeffs, q: int, bound: int = BRUTE_FORCE_BOUND) -> bool:
    if q < 2:
        raise DomainError(f"modulus must be >= 2, got {q}")
    if q > bound:
        raise ResourceError(f"enumerating Z_{q} exceeds bound {bound}")
    c = CubicCoeffs(*c)
    return len({c(x) % q for x in range(q)}) == q
