"""One period of ``p_{<=k} mod N``, the numerator polynomial gamma, and the
identities they satisfy: trailing zeros, (anti)symmetry, zero period sums."""

import logging
from dataclasses import dataclass
from math import comb, factorial, gcd
from typing import Optional

from .arith import (
    IntPoly,
    ResidueSeq,
    check_modulus,
    check_prime,
    lcm_range,
    one_minus_q_pow,
    poly_div_exact,
    poly_mul,
)
from .errors import InvalidArgs, InvalidModulus, StructureViolation
from .partitions import p_le_k_exact, p_le_k_prefix
from .periods import pi_n, pi_prime_power

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SProfile:
    k: int
    N: int
    seq: ResidueSeq
    zero_tail_len: int
    symmetry_sign: int


def _symmetry_violation(seq: ResidueSeq, k: int, sign: int):
    """First index breaking ``s_i = sign * s_{P - C(k+1,2) - i}``, or None."""
    P, c = len(seq), comb(k + 1, 2)
    top = P - c
    if top < 0:
        log.info("symmetry range empty for k=%d, period %d", k, P)
        return None
    for i in range(top + 1):
        if (seq[i] - sign * seq[top - i]) % seq.modulus:
            return i
    return None


def s_sequence(k: int, N: int) -> SProfile:
    """First ``pi_N(k)`` values of ``p_{<=k} mod N`` with their structure checked.

    The last ``C(k+1,2) - 1`` entries must vanish and the rest must be
    symmetric (k odd) or antisymmetric (k even) about its centre; anything
    else raises StructureViolation.
    """
    N = check_modulus(N)
    if k < 1:
        raise InvalidArgs("k must be >= 1")
    P = pi_n(N, k)
    seq = p_le_k_prefix(k, N, P)
    tail = comb(k + 1, 2) - 1
    sign = 1 if k % 2 else -1
    if tail > P:
        raise StructureViolation(f"period {P} shorter than the zero tail {tail}")
    if tail and any(seq.values[P - tail :]):
        raise StructureViolation(f"nonzero entry in the last {tail} values for k={k}, N={N}")
    bad = _symmetry_violation(seq, k, sign)
    if bad is not None:
        raise StructureViolation(f"symmetry fails at index {bad} for k={k}, N={N}")
    return SProfile(k=k, N=N, seq=seq, zero_tail_len=tail, symmetry_sign=sign)


def gamma_poly(k: int, Q: int) -> IntPoly:
    """``(1 - q^Q)^k / prod_{i<=k} (1 - q^i)`` over the integers.

    Exact when ``lcm(1..k) | Q``; otherwise the division leaves a remainder
    and NonExactDivision propagates.
    """
    if k < 1 or Q < 1:
        raise InvalidArgs("need k >= 1 and Q >= 1")
    num = IntPoly.from_terms({Q * t: (-1) ** t * comb(k, t) for t in range(k + 1)})
    den = IntPoly((1,))
    for i in range(1, k + 1):
        den = poly_mul(den, one_minus_q_pow(i))
    return poly_div_exact(num, den)


def gamma_checksum(k: int, Q: int) -> int:
    """Value of gamma at q = 1, which is ``Q**k / k!``."""
    return Q**k // factorial(k)


@dataclass(frozen=True)
class GammaReport:
    k: int
    p: int
    e: int
    Q: int
    degree_ok: bool
    palindromic: bool
    checksum_ok: bool
    congruence_ok: bool
    counterexample: Optional[tuple] = None  # (r, coeff at r + Q(k-1), coeff at r)

    @property
    def passed(self) -> bool:
        return self.degree_ok and self.palindromic and self.checksum_ok and self.congruence_ok


def check_gamma_congruence(k: int, p: int, e: int) -> GammaReport:
    """``[q^(r+Q(k-1))] gamma == (-1)^(k-1) [q^r] gamma (mod p^e)`` for r < Q,

    with ``Q = pi_{p^e}(k)``, plus the degree, palindrome and q = 1 checks on
    the same gamma.
    """
    p = check_prime(p)
    Q = pi_prime_power(p, e, k).pi
    if Q % lcm_range(k):
        # only possible for k = 1, where every Q works anyway
        raise StructureViolation(f"lcm(1..{k}) does not divide Q={Q}")
    g = gamma_poly(k, Q)
    mod = p**e
    sign = -1 if (k - 1) % 2 else 1
    counter = None
    for r in range(Q):
        hi, lo = g[r + Q * (k - 1)], g[r]
        if (hi - sign * lo) % mod:
            counter = (r, hi, lo)
            break
    return GammaReport(
        k=k,
        p=p,
        e=e,
        Q=Q,
        degree_ok=g.degree == k * Q - comb(k + 1, 2),
        palindromic=g.is_palindromic(),
        checksum_ok=g(1) == gamma_checksum(k, Q),
        congruence_ok=counter is None,
        counterexample=counter,
    )


@dataclass(frozen=True)
class ZeroSumReport:
    k: int
    N: int
    period: int
    total: int  # exact sum of p_{<=k} over one period
    ratio: int  # pi_N(k+1) / pi_N(k)
    strong: bool
    weak: bool
    predicts_weak_only: bool

    @property
    def consistent(self) -> bool:
        """The predicted conclusion holds (strong unless only weak is claimed)."""
        return self.weak and (self.strong or self.predicts_weak_only)


def check_zero_sum(k: int, N: int) -> ZeroSumReport:
    """Sum of ``p_{<=k}`` over one period, modulo an odd N.

    Both conclusions are evaluated: ``strong`` is the period sum vanishing mod
    N, ``weak`` the same after scaling by ``pi_N(k+1)/pi_N(k)``.  Only weak is
    predicted when k is odd and that ratio shares a factor with N.
    """
    N = check_modulus(N)
    if N % 2 == 0:
        raise InvalidModulus("the zero-sum identity needs an odd modulus")
    if k < 1:
        raise InvalidArgs("k must be >= 1")
    P = pi_n(N, k)
    total = sum(p_le_k_exact(k, P))
    ratio = pi_n(N, k + 1) // P
    return ZeroSumReport(
        k=k,
        N=N,
        period=P,
        total=total,
        ratio=ratio,
        strong=total % N == 0,
        weak=(ratio * total) % N == 0,
        predicts_weak_only=k % 2 == 1 and gcd(ratio, N) > 1,
    )


@dataclass(frozen=True)
class ZeroSumCorollary:
    k: int
    p: int
    excluded: bool  # k odd, gcd(ratio, p) > 1 and k does not divide pi_p(k-1)
    strong: bool

    @property
    def exception(self) -> bool:
        """Strong conclusion predicted but not observed."""
        return not self.excluded and not self.strong


def zero_sum_corollary(k: int, p: int) -> ZeroSumCorollary:
    """Observational check of the odd-prime refinement of the zero-sum result."""
    p = check_prime(p)
    if p == 2:
        raise InvalidModulus("needs an odd prime")
    rep = check_zero_sum(k, p)
    excluded = k % 2 == 1 and gcd(rep.ratio, p) > 1 and pi_n(p, k - 1) % k != 0
    return ZeroSumCorollary(k=k, p=p, excluded=excluded, strong=rep.strong)
