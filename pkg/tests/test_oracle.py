import pytest

from airy_constancy.cyclo import is_zero
from airy_constancy.kummer import kummer_Se
from airy_constancy.oracle import oracle_pcset, reduced_numerators, verify, verify_range
from airy_constancy.profile import compute_jump

from conftest import WORKED_SETS, reduced_times


@pytest.mark.parametrize("pq", [(1, 3), (1, 11), (1, 5)])
def test_oracle_examples(pq):
    assert oracle_pcset(pq).as_set() == WORKED_SETS[pq]


def test_oracle_agrees_with_float_jumps():
    for p, q in reduced_times(40):
        pc = oracle_pcset((p, q)).as_set()
        for j in range(2 * q):
            assert (j in pc) == (abs(compute_jump((p, q), j).float_value) < 1e-6)


def test_oracle_symmetric_under_half_shift():
    for p, q in reduced_times(60):
        pc = oracle_pcset((p, q)).as_set()
        assert pc == {(j + q) % (2 * q) for j in pc}


def test_time_zero_only_jumps_at_zero_and_q():
    for q in range(1, 40):
        zeros = {j for j in range(2 * q) if is_zero(kummer_Se(0, q, j))}
        assert zeros == set(range(2 * q)) - {0, q}


@pytest.mark.parametrize("pq", [(1, 3), (1, 10)])
def test_verify_agrees(pq):
    r = verify(pq)
    assert r.agree is True and not r.missing and not r.spurious


def test_verify_unsupported_still_runs_oracle():
    r = verify((1, 125))
    assert r.agree is None
    assert r.predicted.status == "unsupported"
    assert len(r.oracle_set) > 0
    assert r.to_json()["agree"] is None


def test_verify_range_small():
    assert [(r.time.p, r.time.q) for r in verify_range(2)] == [(1, 2), (3, 2)]
    reports = verify_range(8)
    assert all(r.agree for r in reports if r.agree is not None)
    order = [(r.time.q, r.time.p) for r in reports]
    assert order == sorted(order)


def test_verify_range_first_policy():
    reports = verify_range(10, "first")
    assert [r.time.q for r in reports] == list(range(2, 11))
    assert all(r.time.p == 1 for r in reports)


def test_verify_range_includes_sixteen():
    reports = {(r.time.p, r.time.q): r for r in verify_range(16)}
    assert reports[(1, 16)].agree is True
    assert reports[(3, 16)].agree is None


def test_reduced_numerators():
    assert reduced_numerators(6) == [1, 5, 7, 11]


def test_pi_over_32_rule_discrepancy_is_pinned():
    # the stated rule for t = pi/32 keeps j = 7 mod 8; the exact sums keep j = 3 mod 8 instead
    r = verify((1, 32))
    assert r.agree is False
    assert r.missing == frozenset(range(7, 64, 8))
    assert r.spurious == frozenset(range(3, 64, 8))
    assert r.oracle_set.as_set() == {j for j in range(64) if j % 8 != 3}
