import pytest
from oracles import naive_period, p_le_k

from qbinmod.errors import InvalidArgs, NoPeriodFound
from qbinmod.partitions import p_le_k_prefix
from qbinmod.periods import (
    capital_pi,
    compare_qperiod_formula,
    minimal_period,
    pi_n,
    pi_prime_n,
    pi_prime_power,
    pi_prime_power_formula,
    qperiod_table,
)


def test_prime_power_parts():
    info = pi_prime_power(2, 1, 3)
    assert (info.b_p, info.L_p, info.pi) == (2, 3, 12)
    assert capital_pi(2, 4) == 1 + 2 + 1 + 4


@pytest.mark.parametrize(
    "N,k,expected",
    [(5, 4, 60), (5, 3, 30), (6, 3, 36), (2, 3, 12), (7, 0, 1), (4, 1, 1)],
)
def test_known_periods(N, k, expected):
    assert pi_n(N, k) == expected


@pytest.mark.parametrize("N", range(2, 8))
@pytest.mark.parametrize("k", range(1, 4))
def test_period_against_naive(N, k):
    P = pi_n(N, k)
    seq = [p_le_k(n, k) % N for n in range(3 * P)]
    assert naive_period(seq) == P


def test_qperiod_trace():
    t = qperiod_table(2, 3)
    steps = [(s.k, s.ratio, s.branch, s.qpi) for s in t.entries]
    assert steps == [(1, 1, "N*ratio", 2), (2, 4, "ratio", 8), (3, 3, "N*ratio", 48)]
    assert t.qpi(0) == 1 and t.pi(0) == 1


@pytest.mark.parametrize("N", [2, 3, 4, 5, 6])
def test_qperiod_invariants(N):
    t = qperiod_table(N, 5)
    for k in range(1, 6):
        assert t.qpi(k) % t.pi(k) == 0
        assert (t.qpi(k) // t.qpi(k - 1)) % N == 0


def test_named_values():
    assert pi_prime_n(5, 4) == 7500
    assert pi_prime_n(2, 3) == 48
    assert pi_prime_power_formula(2, 2, 3) == 384


def test_formula_comparison_agrees_for_primes():
    rows = compare_qperiod_formula()
    assert all(r.match for r in rows if r.e == 1)


def test_minimal_period_needs_three_repetitions():
    assert minimal_period(p_le_k_prefix(3, 2, 36)) == 12
    with pytest.raises(NoPeriodFound):
        minimal_period(p_le_k_prefix(3, 2, 30))
    with pytest.raises(InvalidArgs):
        pi_n(5, -1)
