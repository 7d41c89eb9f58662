"""Exact points of constancy and predictor-vs-oracle reports.

j is a point of constancy iff the relevant partial Kummer sum vanishes,
which is decided by cyclotomic divisibility with no floating threshold.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .cyclo import is_zero
from .kummer import kummer_Se, kummer_So
from .numtheory import DomainError
from .predictor import PCSet, Prediction, predict
from .profile import RationalTime, _as_time

ALL_REDUCED = "all-reduced"
FIRST = "first"


def oracle_pcset(t) -> PCSet:
    t = _as_time(t)
    p, q = t.p, t.q
    partial = kummer_Se if q % 2 else kummer_So
    return PCSet(q, tuple(j for j in range(2 * q) if is_zero(partial(p, q, j))))


@dataclass(frozen=True)
class VerifyReport:
    time: RationalTime
    predicted: Prediction
    oracle_set: PCSet
    missing: frozenset[int]
    spurious: frozenset[int]
    agree: bool | None  # None when the prediction is unsupported

    def to_json(self) -> dict:
        out = self.predicted.to_json()
        out.update(
            oracle_members=list(self.oracle_set.members),
            missing=sorted(self.missing),
            spurious=sorted(self.spurious),
            agree=self.agree,
        )
        return out


def verify(t) -> VerifyReport:
    t = _as_time(t)
    pred = predict(t)
    oracle = oracle_pcset(t)
    if not pred.supported:
        return VerifyReport(t, pred, oracle, frozenset(), frozenset(), None)
    got, want = pred.pcset.as_set(), oracle.as_set()
    missing, spurious = frozenset(want - got), frozenset(got - want)
    return VerifyReport(t, pred, oracle, missing, spurious, not missing and not spurious)


def reduced_numerators(q: int) -> list[int]:
    return [p for p in range(1, 2 * q) if gcd(p, q) == 1]


def verify_range(q_max: int, p_policy: str = ALL_REDUCED, q_min: int = 2) -> list[VerifyReport]:
    """Reports for q in [q_min, q_max], q ascending then p ascending."""
    if q_max < 2:
        raise DomainError(f"q_max must be >= 2, got {q_max}")
    if p_policy not in (ALL_REDUCED, FIRST):
        raise DomainError(f"unknown p policy {p_policy!r}")
    reports = []
    for q in range(max(2, q_min), q_max + 1):
        ps = reduced_numerators(q)
        if p_policy == FIRST:
            ps = ps[:1]
        reports.extend(verify(RationalTime(p, q)) for p in ps)
    return reports
