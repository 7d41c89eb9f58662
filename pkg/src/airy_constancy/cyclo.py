"""Exact integer combinations of N-th roots of unity.

A :class:`CycloSum` stores the multiplicity of each power of
zeta_N = exp(2*pi*i/N).  Whether such a sum is zero is decided exactly: an
integer polynomial vanishes at zeta_N iff the N-th cyclotomic polynomial
divides it.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable

from .numtheory import DomainError, cyclotomic, poly_divmod


@dataclass(frozen=True)
class CycloSum:
    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 1:
            raise DomainError(f"order must be >= 1, got {self.order}")
        if len(self.coeffs) != self.order:
            raise DomainError(f"expected {self.order} coefficients, got {len(self.coeffs)}")

    @classmethod
    def zero(cls, order: int) -> "CycloSum":
        return cls(order, (0,) * order)

    @property
    def mass(self) -> int:
        return sum(self.coeffs)

    def __add__(self, other: "CycloSum") -> "CycloSum":
        if other.order != self.order:
            raise DomainError("cannot add sums of different orders")
        return CycloSum(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycloSum":
        return CycloSum(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "CycloSum") -> "CycloSum":
        return self + (-other)

    def conjugate(self) -> "CycloSum":
        n = self.order
        return CycloSum(n, tuple(self.coeffs[-k % n] for k in range(n)))

    def embed(self, order: int) -> "CycloSum":
        """Same value written over a multiple of the current order."""
        if order % self.order:
            raise DomainError(f"{order} is not a multiple of {self.order}")
        step = order // self.order
        out = [0] * order
        for k, c in enumerate(self.coeffs):
            out[k * step] = c
        return CycloSum(order, tuple(out))

    def __complex__(self) -> complex:
        return to_complex(self)


def from_exponents(order: int, exps: Iterable[int]) -> CycloSum:
    if order < 1:
        raise DomainError(f"order must be >= 1, got {order}")
    out = [0] * order
    for e in exps:
        out[e % order] += 1
    return CycloSum(order, tuple(out))


def is_zero(s: CycloSum) -> bool:
    _, rem = poly_divmod(s.coeffs, cyclotomic(s.order))
    return not rem


def to_complex(s: CycloSum) -> complex:
    n = s.order
    terms = [c * cmath.exp(2j * math.pi * k / n) for k, c in enumerate(s.coeffs) if c]
    return complex(math.fsum(z.real for z in terms), math.fsum(z.imag for z in terms))


def is_real(s: CycloSum) -> bool:
    return is_zero(s - s.conjugate())
