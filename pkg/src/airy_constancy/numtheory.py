"""Integer primitives: factorization, complements, Legendre symbols and
cyclotomic polynomials.

Everything here works on Python ints, so there is no overflow to worry about.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``((prime, exponent), ...)`` with primes increasing."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [pr for pr, _ in self.entries]
        if primes != sorted(set(primes)):
            raise DomainError("primes must be strictly increasing")
        for pr, e in self.entries:
            if e < 1 or not is_prime(pr):
                raise DomainError(f"bad factor {pr}^{e}")

    def value(self) -> int:
        out = 1
        for pr, e in self.entries:
            out *= pr**e
        return out

    def prime_powers(self) -> list[int]:
        return [pr**e for pr, e in self.entries]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """Trial division; fine for the small denominators this package handles."""
    if n <= 0:
        raise DomainError(f"cannot factorize {n}")
    entries = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            entries.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        entries.append((n, 1))
    return Factorization(tuple(entries))


def complement(q: int, prime: int) -> int:
    """Return ``q`` with the full power of ``prime`` divided out."""
    if prime < 2 or q % prime != 0:
        raise DomainError(f"{prime} does not divide {q}")
    while q % prime == 0:
        q //= prime
    return q


def legendre(a: int, q: int) -> int:
    """Legendre symbol (a/q) for an odd prime q, via Euler's criterion."""
    if q < 3 or not is_prime(q):
        raise DomainError(f"{q} is not an odd prime")
    r = pow(a % q, (q - 1) // 2, q)
    return -1 if r == q - 1 else r


def reduce_fraction(p: int, q: int) -> tuple[int, int]:
    if q <= 0:
        raise DomainError(f"denominator must be positive, got {q}")
    if p == 0:
        return 0, 1
    g = gcd(p, q)
    return p // g, q // g


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


# Polynomials are tuples of ints, index = degree, no trailing zeros.

def poly_trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_mul(a, b) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for k, y in enumerate(b):
                out[i + k] += x * y
    return poly_trim(out)


def poly_divmod(num, den) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Long division by a monic integer polynomial ``den``."""
    den = poly_trim(den)
    if not den or den[-1] != 1:
        raise DomainError("divisor must be monic")
    rem = list(poly_trim(num))
    dd = len(den) - 1
    if len(rem) <= dd:
        return (), tuple(rem)
    quot = [0] * (len(rem) - dd)
    nz = [(k, c) for k, c in enumerate(den[:-1]) if c]
    for top in range(len(rem) - 1, dd - 1, -1):
        c = rem[top]
        if not c:
            continue
        shift = top - dd
        quot[shift] = c
        rem[top] = 0
        for k, dk in nz:
            rem[shift + k] -= c * dk
    return poly_trim(quot), poly_trim(rem[:dd])


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first.

    Computed by exact division of x^n - 1 by the product of the cyclotomic
    polynomials of the proper divisors of n.
    """
    if n < 1:
        raise DomainError(f"cyclotomic order must be >= 1, got {n}")
    num = (-1,) + (0,) * (n - 1) + (1,)
    den = (1,)
    for d in divisors(n)[:-1]:
        den = poly_mul(den, cyclotomic(d))
    quot, rem = poly_divmod(num, den)
    assert not rem
    return quot


def euler_phi(n: int) -> int:
    out = n
    for pr, _ in factorize(n):
        out = out // pr * (pr - 1)
    return out
