import pytest

from airy_constancy.cyclo import is_real, is_zero, to_complex
from airy_constancy.kummer import (
    KummerSpec,
    crt_factors,
    crt_split_check,
    crt_split_check_even,
    cubic_sum,
    kummer_S,
    kummer_Se,
    kummer_So,
)
from airy_constancy.numtheory import DomainError

from conftest import direct_sum, reduced_times


def test_spec_reduces_j_and_rejects_unreduced():
    assert KummerSpec(1, 3, 7).j == 1
    with pytest.raises(DomainError):
        KummerSpec(2, 4, 0)
    KummerSpec(0, 6, 1)  # t = 0 is allowed at any q


@pytest.mark.parametrize(
    "args, coeffs",
    [((1, 1, 0), (1, 1)), ((1, 1, 1), (2, 0))],
)
def test_kummer_S_small(args, coeffs):
    assert kummer_S(*args).coeffs == coeffs


@pytest.mark.parametrize(
    "args, coeffs, zero",
    [((1, 3, 0), (1, 1, 1), True), ((1, 3, 1), (3, 0, 0), False)],
)
def test_kummer_Se_examples(args, coeffs, zero):
    s = kummer_Se(*args)
    assert s.coeffs == coeffs
    assert is_zero(s) is zero


def test_kummer_Se_at_time_zero_vanishes_off_multiples_of_q():
    for q in range(1, 30):
        for j in range(2 * q):
            assert is_zero(kummer_Se(0, q, j)) == (j % q != 0)


def test_kummer_So_examples():
    s = kummer_So(1, 2, 0)
    assert s.coeffs == (0, 1, 0, 1)
    assert is_zero(s)
    s = kummer_So(1, 2, 1)
    assert s.coeffs == (2, 0, 0, 0)
    assert abs(to_complex(s) - 2) < 1e-12


def test_kummer_So_needs_odd_p_for_even_q():
    with pytest.raises(DomainError):
        kummer_So(0, 4, 1)


def test_values_match_direct_summation():
    for p, q in reduced_times(20):
        for j in range(2 * q):
            n = 2 * q
            assert abs(to_complex(kummer_S(p, q, j)) - direct_sum(n, [j * v - p * v**3 for v in range(n)])) < 1e-9
            assert abs(to_complex(kummer_Se(p, q, j)) - direct_sum(q, [j * v - 4 * p * v**3 for v in range(q)])) < 1e-9


def test_full_sum_is_even_plus_odd_exactly():
    for p, q in reduced_times(60):
        for j in range(2 * q):
            whole = kummer_S(p, q, j)
            parts = kummer_Se(p, q, j).embed(2 * q) + kummer_So(p, q, j)
            assert whole == parts or is_zero(whole - parts)


def test_sums_are_real():
    for p, q in reduced_times(40):
        for j in range(2 * q):
            assert is_real(kummer_S(p, q, j))
            assert is_real(kummer_Se(p, q, j))
            assert is_real(kummer_So(p, q, j))


def test_residue_class_invariance():
    for p, q in reduced_times(25):
        for j in range(2 * q):
            assert kummer_Se(p, q, j) == kummer_Se(p, q, j + q)
            assert kummer_So(p, q, j) == kummer_So(p, q, j + 2 * q)


def test_masses():
    for p, q in reduced_times(15):
        assert kummer_S(p, q, 1).mass == 2 * q
        assert kummer_Se(p, q, 1).mass == q
        assert kummer_So(p, q, 1).mass == q


@pytest.mark.parametrize("q, f3, j", [(15, -4, 0), (21, -4, 5), (9, -4, 2), (105, -8, 17)])
def test_crt_split_examples(q, f3, j):
    assert crt_split_check(q, f3, j)


def test_crt_single_prime_power_is_one_factor():
    assert crt_factors(9, 2, 0, -4) == [cubic_sum(9, 2, 0, -4)]


def test_crt_split_domain():
    with pytest.raises(DomainError):
        crt_split_check(12, -4, 0)
    with pytest.raises(DomainError):
        crt_split_check_even(15, 1, 0)
    with pytest.raises(DomainError):
        crt_split_check_even(12, 2, 0)


def test_crt_factor_product_by_hand():
    # q = 15, components 3 and 5 with complements 5 and 3
    q, f3, j = 15, -4, 4
    whole = direct_sum(q, [j * v + f3 * v**3 for v in range(q)])
    three = direct_sum(3, [j * a + f3 * 25 * a**3 for a in range(3)])
    five = direct_sum(5, [j * b + f3 * 9 * b**3 for b in range(5)])
    assert abs(whole - three * five) < 1e-9


def test_crt_split_even_sweep():
    for p, q in reduced_times(40):
        if q % 2 == 0:
            for j in range(2 * q):
                assert crt_split_check_even(q, p, j)
