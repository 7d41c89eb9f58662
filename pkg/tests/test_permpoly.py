import itertools
import random

import pytest

from airy_constancy.numtheory import DomainError, factorize
from airy_constancy.permpoly import CubicCoeffs, ResourceError, is_permutation_brute, is_permutation_table


@pytest.mark.parametrize(
    "coeffs, q, expected",
    [
        ((1, 0, 0), 5, True),
        ((0, 0, -4), 5, True),
        ((1, 0, -4), 3, False),
        ((2, 0, -4), 3, True),
        ((0, 1, 0), 3, False),
        ((1, 0, 0), 7, True),
    ],
)
def test_examples_both_routes(coeffs, q, expected):
    c = CubicCoeffs(*coeffs)
    assert is_permutation_brute(c, q) is expected
    assert is_permutation_table(c, q) is expected


def test_zero_polynomial_never_permutes():
    for q in range(2, 20):
        assert not is_permutation_table((0, 0, 0), q)
        assert not is_permutation_brute((0, 0, 0), q)


def test_shifted_cube_branch_is_exercised():
    # (x + 1)^3 - 1 = 3x + 3x^2 + x^3 over Z_5, a prime with 3 not dividing p - 1
    c = CubicCoeffs(3, 3, 1)
    assert is_permutation_brute(c, 5)
    assert is_permutation_table(c, 5)
    assert not is_permutation_table(c, 25)


@pytest.mark.parametrize("q", [1, 0])
def test_domain(q):
    with pytest.raises(DomainError):
        is_permutation_table((1, 0, 0), q)
    with pytest.raises(DomainError):
        is_permutation_brute((1, 0, 0), q)


def test_brute_force_bound():
    with pytest.raises(ResourceError):
        is_permutation_brute((1, 0, 0), 101, bound=100)


def test_table_matches_brute_full_sweep_small():
    for q in range(2, 16):
        for c in itertools.product(range(q), repeat=3):
            assert is_permutation_table(c, q) == is_permutation_brute(c, q), (c, q)


def test_membership_is_intersection_over_prime_powers():
    rng = random.Random(11)
    for q in range(2, 61):
        parts = [pr**e for pr, e in factorize(q)]
        for _ in range(100):
            c = tuple(rng.randrange(q) for _ in range(3))
            assert is_permutation_brute(c, q) == all(is_permutation_brute(c, m) for m in parts)
