"""Partition counts modulo N: at most k parts, exactly k parts, and box-bounded.

The coefficient of ``q^i`` in the Gaussian binomial ``[j+k choose k]_q`` is the
number of partitions of ``i`` into at most ``k`` parts each at most ``j``.
Everything here runs in Z/NZ except the ``*_exact`` helpers, which exist for
the identities that must be checked over the integers.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .arith import ResidueSeq, check_modulus
from .errors import InvalidArgs


@dataclass(frozen=True)
class BoxSpec:
    j: int  # largest allowed part
    k: int  # most parts allowed

    def __post_init__(self):
        if self.j < 0 or self.k < 0:
            raise InvalidArgs("box dimensions must be nonnegative")

    @property
    def size(self) -> int:
        return self.j * self.k + 1


def _check_len(length):
    if length < 1:
        raise InvalidArgs("len must be >= 1")


def p_le_k_prefix(k: int, N: int, length: int) -> ResidueSeq:
    """``p_{<=k}(n) mod N`` for ``n < length``.

    Computed by dividing the series ``1`` by ``(1 - q^i)`` for ``i = 1..k``,
    which is legitimate mod N since each divisor has constant term 1.
    ``k = 0`` gives ``[1, 0, 0, ...]``.
    """
    N = check_modulus(N)
    _check_len(length)
    if k < 0:
        raise InvalidArgs("k must be >= 0")
    return ResidueSeq(N, kernels.partition_prefix(int(k), N, int(length)))


def p_eq_k(k: int, N: int, length: int) -> ResidueSeq:
    """Partitions into exactly ``k`` parts, via ``p_{=k}(l) = p_{<=k}(l - k)``."""
    N = check_modulus(N)
    _check_len(length)
    out = np.zeros(length, dtype=np.int64)
    if k < length:
        out[k:] = p_le_k_prefix(k, N, length - k).values
    return ResidueSeq(N, out)


def box_coeffs(j: int, k: int, N: int, method: str = "product") -> ResidueSeq:
    """Coefficients of ``[j+k choose k]_q`` mod N, length ``j*k + 1``.

    ``method="product"`` multiplies out ``prod (1 - q^(j+i)) / (1 - q^i)`` as a
    truncated series (the fast path).  ``method="recurrence"`` builds the
    table from ``p(j,k,i) = p(j-1,k,i) + p(j,k-1,i-j)``: a partition either
    has largest part below ``j`` or has a part equal to ``j`` that can be
    removed.
    """
    N = check_modulus(N)
    BoxSpec(j, k)
    if method == "product":
        return ResidueSeq(N, kernels.box_mod(int(j), int(k), N))
    if method == "recurrence":
        return ResidueSeq(N, _box_recurrence(j, k, N))
    raise InvalidArgs(f"unknown method {method!r}")


def _box_recurrence(j, k, N):
    # prev[kk] holds box(jj - 1, kk); cur[kk] holds box(jj, kk)
    prev = [np.ones(1, dtype=np.int64) % N for _ in range(k + 1)]
    for jj in range(1, j + 1):
        cur = [np.ones(1, dtype=np.int64) % N]
        for kk in range(1, k + 1):
            row = np.zeros(jj * kk + 1, dtype=np.int64)
            below = prev[kk]
            row[: below.shape[0]] += below
            left = cur[kk - 1]
            row[jj : jj + left.shape[0]] += left
            cur.append(row % N)
        prev = cur
    return prev[k]


def qbinom_coeffs(n: int, k: int, N: int) -> ResidueSeq:
    """Coefficients of ``[n choose k]_q`` mod N (length ``k*(n-k) + 1``)."""
    if k < 0 or n < k:
        raise InvalidArgs(f"need n >= k >= 0, got n={n}, k={k}")
    return box_coeffs(n - k, k, N)


# ---------------------------------------------------------------------------
# exact-integer helpers


def box_coeffs_exact(j: int, k: int) -> list:
    """Exact coefficients of ``[j+k choose k]_q`` as Python ints."""
    BoxSpec(j, k)
    a = [0] * (j * k + 1)
    a[0] = 1
    size = len(a)
    for i in range(1, k + 1):
        m = j + i
        for n in range(size - 1, m - 1, -1):
            a[n] -= a[n - m]
        for n in range(i, size):
            a[n] += a[n - i]
    return a


def p_le_k_exact(k: int, length: int) -> list:
    """Exact ``p_{<=k}(n)`` for ``n < length``."""
    a = [0] * length
    if length:
        a[0] = 1
    for i in range(1, k + 1):
        for n in range(i, length):
            a[n] += a[n - i]
    return a
