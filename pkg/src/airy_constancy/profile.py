"""Solution profiles of u_t = u_xxx with periodic step data at t = pi*p/q.

At such times the solution is constant on each interval
(pi*j/q, pi*(j+1)/q), j = 0..2q-1.  The constant values, their jumps and the
Dirac-comb weights of the fundamental solution are computed here by three
independent routes (Fourier inversion, partial Kummer sums, superposition
of translated steps) so they can be checked against each other.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .cyclo import CycloSum, is_zero, to_complex
from .kummer import kummer_S, kummer_Se, kummer_So
from .numtheory import DomainError, reduce_fraction


@dataclass(frozen=True)
class RationalTime:
    """t = pi * p / q, stored in lowest terms (t = 0 is 0/1)."""

    p: int
    q: int = 1

    def __post_init__(self):
        if self.p < 0:
            raise DomainError(f"time numerator must be >= 0, got {self.p}")
        p, q = reduce_fraction(self.p, self.q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def value(self) -> float:
        return math.pi * self.p / self.q

    def __str__(self):
        return f"{self.p}/{self.q}"


def _as_time(t) -> RationalTime:
    if isinstance(t, RationalTime):
        return t
    if isinstance(t, tuple):
        return RationalTime(*t)
    t = Fraction(t)
    return RationalTime(t.numerator, t.denominator)


@dataclass(frozen=True)
class StepProfile:
    time: RationalTime
    values: tuple[float, ...]

    def jumps(self) -> list[float]:
        """a_j - a_{j-1}, indices taken cyclically."""
        v = self.values
        return [v[j] - v[j - 1] for j in range(len(v))]


@dataclass(frozen=True)
class DiracComb:
    time: RationalTime
    betas: tuple[float, ...]


class Jump(NamedTuple):
    sign: int
    magnitude_sum: CycloSum
    float_value: float

    @property
    def exact_zero(self) -> bool:
        return is_zero(self.magnitude_sum)


def _unit(m: int, q: int) -> complex:
    """exp(i*pi*m/q) with m reduced first, so large m costs no accuracy."""
    return cmath.exp(1j * math.pi * (m % (2 * q)) / q)


def compute_profile(t) -> StepProfile:
    """Values a_j by direct Fourier inversion over the odd frequencies in [-q, q)."""
    t = _as_time(t)
    p, q = t.p, t.q
    odd = range(-q + (q + 1) % 2, q, 2)
    weights = [_unit(-p * l**3, q) / (_unit(-l, q) - 1) for l in odd]
    values = []
    for j in range(2 * q):
        acc = [w * _unit(l * j, q) for w, l in zip(weights, odd)]
        values.append(0.5 + math.fsum(z.real for z in acc) / q)
    return StepProfile(t, tuple(values))


def compute_jump(t, j: int) -> Jump:
    """a_j - a_{j-1} from the partial Kummer sum (even part for odd q, odd part for even q)."""
    t = _as_time(t)
    p, q = t.p, t.q
    j %= 2 * q
    s = kummer_Se(p, q, j) if q % 2 else kummer_So(p, q, j)
    sign = -1 if (p + j - 1) % 2 else 1
    return Jump(sign, s, sign * to_complex(s).real / q)


def compute_comb(t) -> DiracComb:
    """Weights of the fundamental solution, beta_l = S(p, q, l) / (2q)."""
    t = _as_time(t)
    p, q = t.p, t.q
    return DiracComb(t, tuple(to_complex(kummer_S(p, q, l)).real / (2 * q) for l in range(2 * q)))


def superpose_step(t, j: int, comb: DiracComb | None = None) -> float:
    """Value on interval j from the translated-step superposition of the comb.

    Sampled at the midpoint pi*(j + 1/2)/q; the shifted step is 1 exactly
    when (j - l) mod 2q >= q, so no node is ever evaluated.
    """
    t = _as_time(t)
    q = t.q
    comb = comb or compute_comb(t)
    return math.fsum(b for l, b in enumerate(comb.betas) if (j - l) % (2 * q) >= q)


def _phases(tau, ks: np.ndarray) -> np.ndarray:
    # k^3 * tau mod 2, exact for the rational (or binary float) tau
    tau = Fraction(tau)
    num, den = tau.numerator, tau.denominator
    return np.array([((int(k) ** 3 * num) % (2 * den)) / den for k in ks]) * math.pi


def fourier_eval(tau, x, terms: int):
    """Partial Fourier sum of the solution at t = pi*tau.

    ``x`` may be a scalar or an array; uses the first ``terms`` odd modes.
    """
    if terms < 1:
        raise DomainError(f"terms must be >= 1, got {terms}")
    ks = np.arange(1, 2 * terms, 2)
    phase = _phases(tau, ks)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty_like(xs)
    chunk = max(1, 2_000_000 // len(ks))
    for start in range(0, len(xs), chunk):
        block = xs[start:start + chunk]
        arg = np.outer(block, ks) - phase
        out[start:start + chunk] = 0.5 - (2 / math.pi) * (np.sin(arg) / ks).sum(axis=1)
    return float(out[0]) if np.ndim(x) == 0 else out


class Extremes(NamedTuple):
    j_max: int
    value_max: float
    j_min: int
    value_min: float


def extremal_jumps(t, tie_tol: float = 1e-12) -> Extremes:
    """Largest and smallest jumps; ties (within ``tie_tol``) go to the smallest j."""
    t = _as_time(t)
    vals = [compute_jump(t, j).float_value for j in range(2 * t.q)]
    hi, lo = max(vals), min(vals)
    j_max = next(j for j, v in enumerate(vals) if v >= hi - tie_tol)
    j_min = next(j for j, v in enumerate(vals) if v <= lo + tie_tol)
    return Extremes(j_max, vals[j_max], j_min, vals[j_min])


def profile_violations(prof: StepProfile, tol: float = 1e-9) -> list[str]:
    """Names of the analytic identities the profile breaks at tolerance ``tol``."""
    q = prof.time.q
    v = prof.values
    out = []
    if abs(math.fsum(v) - q) >= tol:
        out.append(f"sum of values is {math.fsum(v)!r}, expected {q}")
    if q % 2 and any(abs(v[j] + v[j + q] - 1) >= tol for j in range(q)):
        out.append("a_j + a_{j+q} != 1")
    d = prof.jumps()
    if any(abs(d[(j + q) % (2 * q)] + d[j]) >= tol for j in range(2 * q)):
        out.append("jumps are not antisymmetric about j = q")
    return out


def comb_violations(comb: DiracComb, tol: float = 1e-9, check_even: bool = False) -> list[str]:
    """Broken comb identities.  Evenness in l is opt-in: the Airy kernel is
    not even in x, and for p != 0 only the mirror pairing with time 2q - p
    holds (see :func:`mirror_comb`)."""
    b = comb.betas
    n = len(b)
    out = []
    if abs(math.fsum(b) - 1) >= tol:
        out.append(f"weights sum to {math.fsum(b)!r}, expected 1")
    if check_even and any(abs(b[-l % n] - b[l]) >= tol for l in range(n)):
        out.append("weights are not even in l")
    return out


def mirror_comb(t) -> DiracComb:
    """Comb at the time-reversed instant pi*(2q - p)/q (same q)."""
    t = _as_time(t)
    return compute_comb(RationalTime((-t.p) % (2 * t.q), t.q))
