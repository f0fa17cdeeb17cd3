from math import comb

import pytest

from qbinmod.errors import InvalidModulus, NonExactDivision
from qbinmod.structure import (
    check_gamma_congruence,
    check_zero_sum,
    gamma_checksum,
    gamma_poly,
    s_sequence,
    zero_sum_corollary,
)


def test_mod_two_profile():
    prof = s_sequence(3, 2)
    assert prof.seq.tolist() == [1, 1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0]
    assert prof.zero_tail_len == 5
    assert prof.symmetry_sign == 1


@pytest.mark.parametrize("k", range(1, 5))
@pytest.mark.parametrize("N", [2, 3, 5, 6])
def test_profile_tail_and_symmetry(k, N):
    prof = s_sequence(k, N)
    v = prof.seq.tolist()
    P, c = len(v), comb(k + 1, 2)
    assert all(x == 0 for x in v[P - (c - 1) :])
    sign = (-1) ** (k + 1)
    for i in range(P - c + 1):
        assert (v[i] - sign * v[P - c - i]) % N == 0


def test_gamma_small():
    assert gamma_poly(2, 4).coeffs == (1, 1, 2, 2, 1, 1)
    g = gamma_poly(3, 12)
    assert g.degree == 30
    assert g(1) == gamma_checksum(3, 12) == 288


def test_gamma_needs_lcm_multiple():
    with pytest.raises(NonExactDivision):
        gamma_poly(3, 4)


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2)])
def test_gamma_congruence(k, p, e):
    rep = check_gamma_congruence(k, p, e)
    assert rep.passed, rep


@pytest.mark.parametrize("k", [2, 4, 6])
@pytest.mark.parametrize("N", [3, 5, 7])
def test_zero_sum_strong_for_even_k(k, N):
    assert check_zero_sum(k, N).strong


def test_zero_sum_rejects_even_modulus():
    with pytest.raises(InvalidModulus):
        check_zero_sum(2, 4)


def test_corollary_is_observational():
    cor = zero_sum_corollary(1, 3)
    # p_{<=1} is constant 1, so the period sum is 1
    assert cor.exception
    assert not zero_sum_corollary(2, 3).exception
