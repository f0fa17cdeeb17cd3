import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import partitions, residue_count

from qbinmod.errors import InvalidArgs, InvalidResidue, NonlinearFit
from qbinmod.quasifit import (
    bad_count_convolution,
    check_block_equality,
    check_lemma34,
    check_section_zeros,
    check_slope_period,
    count_table,
    decompose,
    enumerate_bad,
    f_count,
    fit,
    genfun,
    minimal_quasiperiod_search,
)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 12), st.integers(1, 4), st.integers(2, 5), st.data())
def test_f_count_against_enumeration(n, k, N, data):
    R = data.draw(st.integers(0, N - 1))
    assert f_count(n, k, R, N) == residue_count(n, k, R, N)


def test_count_table_rows_sum_to_length():
    t = count_table(3, 4, 3, 30)
    for n in range(3, 31):
        assert sum(t.f(n, R) for R in range(4)) == 3 * (n - 3) + 1


def test_f_count_rejects_bad_residue():
    with pytest.raises(InvalidResidue):
        f_count(5, 2, 3, 3)


def test_decompose_example():
    d = decompose(5, 2, 10)
    assert d.sections[0].tolist() == [1, 1, 2, 2, 3]
    assert d.sections[1].tolist() == [3, 3, 2, 2, 1]
    assert d.trailing.tolist() == [1]


@pytest.mark.parametrize("k,N,l", [(2, 3, 1), (3, 2, 2), (3, 5, 1)])
def test_blocks_and_sections(k, N, l):
    from qbinmod.periods import pi_prime_n

    Q = pi_prime_n(N, k)
    assert check_block_equality(l * Q + 3, k, N).passed
    assert check_section_zeros(l, k, N).passed


def test_bad_pairs_by_hand():
    # n=2, k=2, m=1, j=1: the only escaping partition of 3 with <= 2 parts is (3)
    n, k, m, j = 2, 2, 1, 1
    total = len(partitions(m * n + j, max_parts=k))
    assert total == 2
    rep = check_lemma34(n, k, m, j)
    assert rep.passed and rep.convolution_ok
    assert len(enumerate_bad(1, m, j, n, k)) == bad_count_convolution(1, m, j, n, k)


@pytest.mark.parametrize("k,R,N", [(1, 1, 3), (2, 1, 2), (2, 0, 3), (3, 2, 3)])
def test_fit_predicts_and_genfun_expands(k, R, N):
    qf = fit(k, R, N)
    hi = k + 3 * qf.Q
    t = count_table(k, N, k, hi)
    exp = genfun(qf).expand(hi + 1)
    for n in range(k, hi + 1):
        assert qf.predict(n) == t.f(n, R) == exp[n]


def test_fit_example_values():
    qf = fit(1, 1, 3)
    assert qf.Q == 3 and qf.slopes == (3, 3, 3) and qf.intercepts == (0, 1, 2)
    assert genfun(qf).expand(10) == list(range(10))


def test_nonlinear_fit_is_reported(monkeypatch):
    from qbinmod import quasifit

    # too short a quasi-period cannot fit the counts
    monkeypatch.setattr(quasifit, "pi_prime_n", lambda N, k: 1)
    with pytest.raises(NonlinearFit):
        quasifit.fit_all(2, 3)


def test_slope_report_statuses():
    assert check_slope_period(2, 0, 3).status == "pass"
    rep = check_slope_period(1, 0, 2)
    assert not rep.hypothesis_met and rep.holds
    assert rep.status == "pass"


def test_quasiperiod_search():
    assert minimal_quasiperiod_search(2, 1, 2, 8) == 4
    assert minimal_quasiperiod_search(3, 1, 5, 150) == 30
    with pytest.raises(InvalidArgs):
        minimal_quasiperiod_search(3, 1, 5, 2)
