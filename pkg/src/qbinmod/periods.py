"""Periods of ``p_{<=k} mod N`` and the quasi-period recursion built on them."""

from dataclasses import dataclass, field
from math import lcm

import numpy as np

from . import kernels
from .arith import ResidueSeq, check_modulus, check_prime, factorize, lcm_range
from .errors import InvalidArgs, NoPeriodFound


@dataclass(frozen=True)
class PeriodInfo:
    p: int
    e: int
    k: int
    b_p: int  # smallest b with p**b >= capital_pi(p, k)
    L_p: int  # p-free part of lcm(1..k)
    pi: int


@dataclass(frozen=True)
class QPeriodStep:
    k: int
    pi: int  # pi_N(k)
    ratio: int  # pi_N(k) / pi_N(k-1)
    branch: str  # "ratio" when N | ratio, else "N*ratio"
    qpi: int  # pi'_N(k)


@dataclass(frozen=True)
class QPeriodTable:
    N: int
    entries: tuple = field(default=())

    def step(self, k: int) -> QPeriodStep:
        return self.entries[k - 1]

    def pi(self, k: int) -> int:
        return 1 if k == 0 else self.entries[k - 1].pi

    def qpi(self, k: int) -> int:
        return 1 if k == 0 else self.entries[k - 1].qpi

    @property
    def k_max(self) -> int:
        return len(self.entries)


def capital_pi(p: int, k: int) -> int:
    """``sum_{i<=k} p**nu_p(i)``, grouped by valuation."""
    p = check_prime(p)
    if k < 1:
        raise InvalidArgs("k must be >= 1")
    total, pt = 0, 1
    while pt <= k:
        total += pt * (k // pt - k // (pt * p))
        pt *= p
    return total


def _smallest_exponent(p, bound):
    b, pb = 0, 1
    while pb < bound:
        pb *= p
        b += 1
    return b


def _strip(p, n):
    while n % p == 0:
        n //= p
    return n


def _period_from_parts(p, e, k, big_pi, lcm_k):
    b = _smallest_exponent(p, big_pi)
    L = _strip(p, lcm_k)
    # k = 1 (the only case with b = 0) is the constant sequence, period 1 for every e
    exponent = b + e - 1 if b > 0 else 0
    return PeriodInfo(p=p, e=e, k=k, b_p=b, L_p=L, pi=p**exponent * L)


def pi_prime_power(p: int, e: int, k: int) -> PeriodInfo:
    """Minimal period of ``p_{<=k}`` modulo ``p**e``.

    ``pi = p**(b_p + e - 1) * L_p``, except for ``k = 1`` where the sequence is
    identically 1 and the period is 1.
    """
    p = check_prime(p)
    if e < 1 or k < 1:
        raise InvalidArgs("need e >= 1 and k >= 1")
    return _period_from_parts(p, e, k, capital_pi(p, k), lcm_range(k))


def pi_n(N: int, k: int) -> int:
    """``pi_N(k)``: lcm over ``p^e || N`` of the prime-power periods (1 for k = 0)."""
    N = check_modulus(N)
    if k < 0:
        raise InvalidArgs("k must be >= 0")
    if k == 0:
        return 1
    out = 1
    for p, e in factorize(N).items():
        out = lcm(out, pi_prime_power(p, e, k).pi)
    return out


def qperiod_table(N: int, k_max: int) -> QPeriodTable:
    """Run the quasi-period recursion for ``k = 1..k_max``.

    Base case ``pi_N(0) = pi'_N(0) = 1``; at each step the ratio
    ``r = pi_N(k) / pi_N(k-1)`` multiplies ``pi'`` by ``r`` when ``N | r`` and
    by ``N * r`` otherwise.
    """
    N = check_modulus(N)
    if k_max < 0:
        raise InvalidArgs("k_max must be >= 0")
    primes = factorize(N)
    big_pi = {p: 0 for p in primes}
    lcm_k = 1
    prev_pi, prev_q = 1, 1
    steps = []
    for k in range(1, k_max + 1):
        lcm_k = lcm(lcm_k, k)
        pi = 1
        for p, e in primes.items():
            big_pi[p] += p ** _valuation(p, k)
            pi = lcm(pi, _period_from_parts(p, e, k, big_pi[p], lcm_k).pi)
        ratio = pi // prev_pi
        if ratio % N == 0:
            branch, qpi = "ratio", ratio * prev_q
        else:
            branch, qpi = "N*ratio", N * ratio * prev_q
        steps.append(QPeriodStep(k=k, pi=pi, ratio=ratio, branch=branch, qpi=qpi))
        prev_pi, prev_q = pi, qpi
    return QPeriodTable(N=N, entries=tuple(steps))


def _valuation(p, n):
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def pi_prime_n(N: int, k: int) -> int:
    """``pi'_N(k)``, the quasi-period of the residue-counting function."""
    if k < 0:
        raise InvalidArgs("k must be >= 0")
    return qperiod_table(N, k).qpi(k)


def minimal_period(seq) -> int:
    """Smallest P with ``seq[i] == seq[i+P]`` throughout, if seen 3 full times.

    Raises NoPeriodFound when ``len(seq) < 3 * P`` for the smallest candidate P.
    """
    values = seq.values if isinstance(seq, ResidueSeq) else _as_array(seq)
    n = values.shape[0]
    if n == 0:
        raise NoPeriodFound("empty sequence")
    P = int(kernels.smallest_period(values))
    if 3 * P > n:
        raise NoPeriodFound(f"length {n} is below three repetitions of the best candidate {P}")
    return P


def _as_array(seq):
    return np.asarray(list(seq), dtype=np.int64)


def pi_prime_power_formula(p: int, e: int, k: int) -> int:
    """Closed form ``pi_p(k) * p**(e-1) * (pi'_p(k) / pi_p(k))**e``.

    Compare with :func:`pi_prime_n` at ``N = p**e``; the two are not assumed
    to agree for ``e >= 2``.
    """
    p = check_prime(p)
    if e < 1 or k < 1:
        raise InvalidArgs("need e >= 1 and k >= 1")
    table = qperiod_table(p, k)
    pi, qpi = table.pi(k), table.qpi(k)
    return pi * p ** (e - 1) * (qpi // pi) ** e


@dataclass(frozen=True)
class FormulaComparison:
    p: int
    e: int
    k: int
    formula: int
    recursion: int

    @property
    def match(self) -> bool:
        return self.formula == self.recursion


def compare_qperiod_formula(primes=(2, 3, 5), exponents=(1, 2), k_max=5) -> list:
    rows = []
    for p in primes:
        for e in exponents:
            table = qperiod_table(p**e, k_max)
            for k in range(1, k_max + 1):
                rows.append(
                    FormulaComparison(p, e, k, pi_prime_power_formula(p, e, k), table.qpi(k))
                )
    return rows
