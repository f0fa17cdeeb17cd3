"""Slow, obviously-correct reference computations used by the tests.

Nothing here imports the library: partitions are enumerated directly and
periods found by comparing shifted lists.
"""

from functools import lru_cache
from itertools import combinations_with_replacement


def partitions(n, max_parts=None, max_part=None):
    """All partitions of n as non-increasing tuples, optionally bounded."""
    out = []

    def rec(rest, cap, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        if max_parts is not None and len(acc) == max_parts:
            return
        for part in range(min(rest, cap), 0, -1):
            acc.append(part)
            rec(rest - part, part, acc)
            acc.pop()

    rec(n, n if max_part is None else max_part, [])
    return out


@lru_cache(maxsize=None)
def p_le_k(n, k):
    return len(partitions(n, max_parts=k))


def box_counts(j, k):
    """Coefficients of the generating polynomial of partitions in a j x k box."""
    counts = [0] * (j * k + 1)
    for parts in combinations_with_replacement(range(j + 1), k):
        counts[sum(parts)] += 1
    return counts


def qbinom(n, k):
    return box_counts(n - k, k)


def naive_period(seq):
    n = len(seq)
    for p in range(1, n + 1):
        if all(seq[i] == seq[i + p] for i in range(n - p)):
            return p
    return n


def residue_count(n, k, R, N):
    if n < k:
        return 0
    return sum(1 for c in qbinom(n, k) if c % N == R)
