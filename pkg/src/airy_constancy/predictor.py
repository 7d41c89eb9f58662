"""Points of constancy predicted from congruence rules.

The set of points of constancy at t = pi*p/q is the union, over the prime
powers exactly dividing q, of sets cut out by congruences on j.  Each prime
power contributes a list of clauses ``j mod m in R``; a j is a point of
constancy when it satisfies at least one clause of at least one component.
Prime powers without a known rule make the whole prediction unsupported.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .numtheory import DomainError, complement, factorize, legendre
from .profile import RationalTime, _as_time

SUPPORTED = "supported"
UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class CongruenceClause:
    """``j mod modulus`` lies in ``residues``."""

    modulus: int
    residues: frozenset[int]

    def __post_init__(self):
        if self.modulus < 2:
            raise DomainError(f"clause modulus must be >= 2, got {self.modulus}")
        res = frozenset(r % self.modulus for r in self.residues)
        object.__setattr__(self, "residues", res)

    @classmethod
    def including(cls, modulus: int, residues: Iterable[int]) -> "CongruenceClause":
        return cls(modulus, frozenset(residues))

    @classmethod
    def excluding(cls, modulus: int, residues: Iterable[int]) -> "CongruenceClause":
        bad = {r % modulus for r in residues}
        return cls(modulus, frozenset(r for r in range(modulus) if r not in bad))

    def holds(self, j: int) -> bool:
        return j % self.modulus in self.residues

    def to_json(self) -> dict:
        return {"mod": self.modulus, "residues": sorted(self.residues)}


@dataclass(frozen=True)
class PCSet:
    q: int
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        if members and (members[0] < 0 or members[-1] >= 2 * self.q):
            raise DomainError(f"members must lie in [0, {2 * self.q})")
        object.__setattr__(self, "members", members)

    def __contains__(self, j):
        return j in set(self.members)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def as_set(self) -> set[int]:
        return set(self.members)


@dataclass(frozen=True)
class Component:
    prime: int
    exponent: int
    clauses: tuple[CongruenceClause, ...] | None  # None: no rule for this prime power

    @property
    def prime_power(self) -> int:
        return self.prime**self.exponent

    def to_json(self) -> dict:
        clauses = None if self.clauses is None else [c.to_json() for c in self.clauses]
        return {"prime_power": self.prime_power, "clauses": clauses}


@dataclass(frozen=True)
class Prediction:
    time: RationalTime
    status: str
    components: tuple[Component, ...]
    pcset: PCSet | None = None
    reason: str | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def supported(self) -> bool:
        return self.status == SUPPORTED

    def to_json(self) -> dict:
        out = {
            "p": self.time.p,
            "q": self.time.q,
            "status": self.status,
            "components": [c.to_json() for c in self.components],
            "members": None if self.pcset is None else list(self.pcset.members),
        }
        if self.reason:
            out["reason"] = self.reason
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def clause_eval(clauses: Iterable[CongruenceClause], q: int) -> PCSet:
    clauses = list(clauses)
    return PCSet(q, tuple(j for j in range(2 * q) if any(c.holds(j) for c in clauses)))


def remark_zero_set(q: int) -> PCSet:
    """At t = 0 only the nodes 0 and q jump."""
    return PCSet(q, tuple(j for j in range(2 * q) if j % q))


def component_clauses(p: int, q: int, prime: int, n: int) -> tuple[CongruenceClause, ...] | None:
    """Clauses contributed by ``prime**n`` exactly dividing ``q``, or None if no rule applies."""
    inc, exc = CongruenceClause.including, CongruenceClause.excluding
    cq = complement(q, prime)
    if prime == 2:
        if n == 1:
            return (inc(2, [0]),)
        if n == 2 and q == 4:
            return (inc(2, [0]), inc(4, [3 * p]))
        if n == 3 and q == 8:
            return (inc(2, [0]), inc(4, [2 - p]))
        if n in (4, 5) and q == 2**n and p == 1:
            # experimental rule, stated for t = pi/16 and pi/32 only
            return (inc(2, [0]), exc(8, [7]))
        return None
    if n == 1:
        if prime == 3:
            return (exc(3, [p * cq * cq]),)
        if (prime - 1) % 3 == 0:
            return ()
        return (inc(prime, [0]),)
    if n == 2:
        if prime == 3:
            return (exc(3, [0]),)
        target = -legendre(3 * p, prime)
        return (inc(prime, [r for r in range(1, prime) if legendre(r, prime) == target]),)
    if prime == 3 and n == 3 and q == 27:
        return (inc(3, [1, 2]), inc(9, [6 * p]))
    return None


def predict(t) -> Prediction:
    t = _as_time(t)
    p, q = t.p, t.q
    if p == 0:
        return Prediction(t, SUPPORTED, (), remark_zero_set(q), notes=("t = 0: only the initial jumps at 0 and q",))
    if q < 2:
        raise DomainError(f"prediction needs q >= 2, got {t}")
    comps = tuple(Component(pr, n, component_clauses(p, q, pr, n)) for pr, n in factorize(q))
    missing = [c.prime_power for c in comps if c.clauses is None]
    if missing:
        reason = "no rule for prime power " + ", ".join(map(str, missing)) + f" in q = {q}"
        return Prediction(t, UNSUPPORTED, comps, None, reason)
    pcset = clause_eval((cl for c in comps for cl in c.clauses), q)
    return Prediction(t, SUPPORTED, comps, pcset)
