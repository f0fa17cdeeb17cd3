import pytest
from hypothesis import given
from hypothesis import strategies as st

from qbinmod.arith import (
    IntPoly,
    ResidueSeq,
    check_modulus,
    delta_q,
    factorize,
    is_prime,
    lcm_range,
    nu_p,
    one_minus_q_pow,
    poly_div_exact,
    poly_mul,
)
from qbinmod.errors import InvalidModulus, InvalidPrime, NonExactDivision
from qbinmod.arith import check_prime

coeff_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=8)


def test_intpoly_trims_and_evaluates():
    p = IntPoly((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert p(3) == 7
    assert p[10] == 0
    assert IntPoly(()).is_zero


def test_palindrome():
    assert IntPoly((1, 1, 2, 2, 1, 1)).is_palindromic()
    assert not IntPoly((1, 2)).is_palindromic()


@given(coeff_lists, coeff_lists)
def test_mul_then_divide_roundtrip(a, b):
    pa, pb = IntPoly(tuple(a)), IntPoly(tuple(b))
    if pb.is_zero:
        return
    assert poly_div_exact(poly_mul(pa, pb), pb) == pa


def test_inexact_division_raises():
    with pytest.raises(NonExactDivision):
        poly_div_exact(IntPoly((1, 0, 1)), IntPoly((1, 1)))


def test_delta_q_matches_multiplication():
    f = IntPoly((3, 1, 4, 1, 5))
    full = poly_mul(f, one_minus_q_pow(2))
    assert delta_q(f, 2).coeffs == full.coeffs[: len(f.coeffs)]


def test_delta_q_on_residues_keeps_length():
    s = ResidueSeq(5, [1, 2, 3, 4, 0, 1])
    out = delta_q(s, 2)
    assert out.tolist() == [1, 2, 2, 2, 2, 2]
    assert out.modulus == 5


def test_residue_seq_reduces_and_slices():
    s = ResidueSeq(3, [4, -1, 7])
    assert s.tolist() == [1, 2, 1]
    assert s[1:].tolist() == [2, 1]
    assert s == ResidueSeq(3, [1, 2, 1])
    assert hash(s) == hash(ResidueSeq(3, [1, 2, 1]))
    with pytest.raises(ValueError):
        s.values[0] = 0


@pytest.mark.parametrize("N", [0, 1, -3, 2.5])
def test_bad_modulus(N):
    with pytest.raises(InvalidModulus):
        check_modulus(N)


def test_primes_and_valuations():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    with pytest.raises(InvalidPrime):
        check_prime(9)
    assert nu_p(2, 48) == 4
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert lcm_range(10) == 2520
