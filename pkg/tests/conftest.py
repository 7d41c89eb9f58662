import cmath
import math
from math import gcd

import pytest


def direct_sum(order, exps):
    """Floating sum of exp(2*pi*i*e/order); independent of the CycloSum path."""
    return sum(cmath.exp(2j * math.pi * e / order) for e in exps)


def reduced_times(q_max, q_min=1):
    for q in range(q_min, q_max + 1):
        for p in range(1, 2 * q):
            if gcd(p, q) == 1:
                yield p, q


@pytest.fixture
def brute_sum():
    return direct_sum


def members(q, cond):
    return {j for j in range(2 * q) if cond(j)}


# Worked examples from the literature, written out as literal congruences.
WORKED_SETS = {
    (1, 3): {0, 2, 3, 5},
    (2, 3): {0, 1, 3, 4},
    (1, 5): {0, 5},
    (1, 7): set(),
    (1, 11): {0, 11},
    (1, 15): members(15, lambda j: j % 3 in (0, 2) or j % 5 == 0),
    (2, 15): members(15, lambda j: j % 3 in (0, 1) or j % 5 == 0),
    (1, 21): members(21, lambda j: j % 3 in (0, 2)),
    (1, 2): {0, 2},
    (3, 2): {0, 2},
    (5, 2): {0, 2},
    (1, 6): members(6, lambda j: j % 2 == 0 or j % 3 in (0, 2)),
    (1, 10): members(10, lambda j: j % 2 == 0 or j % 5 == 0),
}

SQUARE_SETS = {
    (1, 49): members(49, lambda j: j % 7 in (1, 2, 4)),
    (1, 25): members(25, lambda j: j % 5 in (1, 4)),
}


def two_power_set(p, q):
    if q == 4:
        return members(4, lambda j: j % 2 == 0 or j % 4 == 3 * p % 4)
    if q == 8:
        return members(8, lambda j: j % 2 == 0 or j % 4 == (2 - p) % 4)
    return members(q, lambda j: j % 2 == 0 or j % 8 != 7)


def cube_three_set(p):
    return members(27, lambda j: j % 3 in (1, 2) or j % 9 == 6 * p % 9)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
