"""Exact period quantities next to their smooth large-k estimates.

``psi(k) = ln lcm(1..k)`` is computed from the exact lcm up to
``PSI_EXACT_LIMIT`` and by summing ``ln p`` over sieved prime powers beyond.
"""

import math
from dataclasses import dataclass
from math import lcm
from typing import Optional

import numpy as np

from .arith import check_prime, lcm_range
from .errors import DomainError, InvalidArgs, StructureViolation
from .periods import capital_pi, pi_prime_power, pi_prime_power_formula

PSI_EXACT_LIMIT = 10_000


@dataclass(frozen=True)
class PsiValue:
    k: int
    lcm: Optional[int]  # None when computed by the sieve
    ln: float


def psi_exact(k: int) -> PsiValue:
    if k < 1:
        raise InvalidArgs("k must be >= 1")
    L = lcm_range(k)
    return PsiValue(k=k, lcm=L, ln=math.log(L))


def _prime_sieve(limit: int) -> np.ndarray:
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    for d in range(2, int(limit**0.5) + 1):
        if is_p[d]:
            is_p[d * d :: d] = False
    return np.flatnonzero(is_p)


def psi_sieve(k: int) -> float:
    """``sum ln p`` over prime powers ``p^m <= k``."""
    if k < 1:
        raise InvalidArgs("k must be >= 1")
    total = 0.0
    for p in _prime_sieve(k):
        p = int(p)
        total += math.log(p) * _floor_log(p, k)
    return total


def chebyshev_psi(k: int) -> PsiValue:
    if k <= PSI_EXACT_LIMIT:
        return psi_exact(k)
    return PsiValue(k=k, lcm=None, ln=psi_sieve(k))


def psi_tables(k_max: int):
    """``(exact, sieve)`` arrays of psi(1..k_max); index 0 holds psi(1)."""
    exact = np.empty(k_max)
    L = 1
    for k in range(1, k_max + 1):
        L = lcm(L, k)
        exact[k - 1] = math.log(L)
    # psi jumps by ln p exactly at prime powers p^m
    jumps = np.zeros(k_max + 1)
    for p in _prime_sieve(k_max):
        p = int(p)
        pm = p
        while pm <= k_max:
            jumps[pm] = math.log(p)
            pm *= p
    sieve = np.cumsum(jumps)[1:]
    return exact, sieve


def _floor_log(p: int, k: int) -> int:
    # integer-only floor(log_p k)
    e, pe = 0, p
    while pe <= k:
        pe *= p
        e += 1
    return e


def _log_p(p, x):
    return math.log(x) / math.log(p)


def nu_lcm(p: int, k: int) -> int:
    """``nu_p(lcm(1..k))``, checked against ``floor(log_p k)``."""
    p = check_prime(p)
    if k < 1:
        raise InvalidArgs("k must be >= 1")
    L, v = lcm_range(k), 0
    while L % p == 0:
        L //= p
        v += 1
    if v != _floor_log(p, k):
        raise StructureViolation(f"nu_{p}(lcm(1..{k})) = {v} but floor(log_{p} {k}) = {_floor_log(p, k)}")
    return v


def _require_above_p(p, k):
    if k <= p:
        raise DomainError(f"estimate needs k > p (got p={p}, k={k})")


def pi_estimate_log(p: int, k: int) -> float:
    """Estimate of ``log_p pi_p(k)``: ``log_p log_p k + psi(k) / ln p``."""
    p = check_prime(p)
    _require_above_p(p, k)
    return _log_p(p, _log_p(p, k)) + chebyshev_psi(k).ln / math.log(p)


def pi_exact_log(p: int, k: int) -> float:
    """``log_p pi_p(k)`` from ``pi_p(k) = lcm(1..k) * p**(b_p - nu_p(lcm))``."""
    p = check_prime(p)
    b = _b_p(p, k)
    return chebyshev_psi(k).ln / math.log(p) + b - _floor_log(p, k)


def _b_p(p, k):
    big, b, pb = capital_pi(p, k), 0, 1
    while pb < big:
        pb *= p
        b += 1
    return b


def capital_pi_estimate(p: int, k: int) -> float:
    """``(p-1)/p * k * log_p k``."""
    p = check_prime(p)
    if k < 2:
        raise DomainError("k must be >= 2")
    return (p - 1) / p * k * _log_p(p, k)


@dataclass(frozen=True)
class RatioEstimate:
    p: int
    k: int
    exact: int  # k - b_p([k]) = log_p(pi'_p(k) / pi_p(k))
    estimate: float
    ceil_floor_term: int  # b_p([k]) - floor(log_p k)


def qperiod_ratio_estimate(p: int, k: int) -> RatioEstimate:
    """``log_p(pi'_p(k)/pi_p(k))`` exactly and as ``k - log_p k - log_p log_p k``."""
    p = check_prime(p)
    _require_above_p(p, k)
    b = _b_p(p, k)
    est = k - _log_p(p, k) - _log_p(p, _log_p(p, k))
    return RatioEstimate(p=p, k=k, exact=k - b, estimate=est, ceil_floor_term=b - _floor_log(p, k))


def combined_estimate(p: int, e: int, k: int) -> float:
    """Estimate of ``log_p pi'_{p^e}(k)``."""
    p = check_prime(p)
    if e < 1:
        raise InvalidArgs("e must be >= 1")
    _require_above_p(p, k)
    lp = _log_p(p, k)
    return chebyshev_psi(k).ln / math.log(p) + e * (k - lp) + (1 - e) * _log_p(p, lp)


def combined_exact_log(p: int, e: int, k: int) -> float:
    """``log_p`` of the closed prime-power quasi-period formula."""
    return _log_p(p, pi_prime_power_formula(p, e, k))


@dataclass(frozen=True)
class AsymReport:
    p: int
    e: int
    k: int
    quantity: str
    exact_value: float
    estimate: Optional[float]

    @property
    def log_rel_error(self) -> Optional[float]:
        if self.estimate is None or self.exact_value == 0:
            return None
        return abs(self.estimate - self.exact_value) / abs(self.exact_value)


def relative_error(exact: float, estimate: float) -> float:
    return abs(estimate - exact) / abs(exact)


def asym_rows(p: int, k: int, e: int = 1, exact_limit: int = 2000) -> list:
    """Every exact/estimate pair available at ``(p, e, k)``.

    The quasi-period formula is evaluated exactly only for ``k <= exact_limit``
    since its recursion walks every ``i <= k``.
    """
    p = check_prime(p)
    rows = []
    big = capital_pi(p, k)
    est = capital_pi_estimate(p, k) if k >= 2 else None
    rows.append(AsymReport(p, e, k, "capital_pi", float(big), est))
    above = k > p
    rows.append(AsymReport(p, e, k, "log_pi", pi_exact_log(p, k), pi_estimate_log(p, k) if above else None))
    if above:
        r = qperiod_ratio_estimate(p, k)
        rows.append(AsymReport(p, e, k, "log_ratio", float(r.exact), r.estimate))
        if k <= exact_limit:
            rows.append(AsymReport(p, e, k, "log_qperiod", combined_exact_log(p, e, k), combined_estimate(p, e, k)))
    return rows


def pi_prime_log_check(p: int, k: int) -> bool:
    """``pi_exact_log`` agrees with the log of the exact period integer."""
    return math.isclose(pi_exact_log(p, k), _log_p(p, pi_prime_power(p, 1, k).pi), rel_tol=1e-12)
