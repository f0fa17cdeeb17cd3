import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qbinmod.asymptotics import (
    PSI_EXACT_LIMIT,
    asym_rows,
    capital_pi_estimate,
    chebyshev_psi,
    combined_estimate,
    nu_lcm,
    pi_estimate_log,
    pi_exact_log,
    pi_prime_log_check,
    psi_exact,
    psi_sieve,
    qperiod_ratio_estimate,
    relative_error,
)
from qbinmod.errors import DomainError
from qbinmod.periods import capital_pi


@given(st.sampled_from([2, 3, 5, 7, 11, 13]), st.integers(1, 3000))
def test_nu_lcm_is_floor_log(p, k):
    v = nu_lcm(p, k)
    assert p**v <= k < p ** (v + 1)


@given(st.integers(1, 3000))
def test_psi_paths_agree(k):
    assert math.isclose(psi_exact(k).ln, psi_sieve(k), rel_tol=1e-9)


def test_psi_switches_to_sieve():
    assert chebyshev_psi(PSI_EXACT_LIMIT).lcm is not None
    assert chebyshev_psi(PSI_EXACT_LIMIT + 1).lcm is None


@pytest.mark.parametrize("p,k", [(2, 10), (3, 50), (5, 200)])
def test_exact_log_matches_integer_period(p, k):
    assert pi_prime_log_check(p, k)


def test_log_period_estimate_close():
    assert relative_error(pi_exact_log(3, 100), pi_estimate_log(3, 100)) < 0.25


def test_ratio_estimate_exact_parts():
    assert qperiod_ratio_estimate(2, 8).exact == 3
    assert qperiod_ratio_estimate(2, 3).exact == 1


def test_combined_is_sum_at_e1():
    k = 8
    expected = pi_estimate_log(2, k) + qperiod_ratio_estimate(2, k).estimate
    assert math.isclose(combined_estimate(2, 1, k), expected)


def test_domain_errors():
    with pytest.raises(DomainError):
        pi_estimate_log(5, 5)
    with pytest.raises(DomainError):
        capital_pi_estimate(2, 1)


def test_capital_pi_error_shrinks():
    err = lambda k: relative_error(capital_pi(2, k), capital_pi_estimate(2, k))
    assert err(10**6) < err(10**3)


def test_asym_rows_quantities():
    names = [r.quantity for r in asym_rows(2, 10)]
    assert names == ["capital_pi", "log_pi", "log_ratio", "log_qperiod"]
    assert [r.quantity for r in asym_rows(5, 3)] == ["capital_pi", "log_pi"]
