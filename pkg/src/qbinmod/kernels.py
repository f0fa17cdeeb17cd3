"""Hot inner loops, each in a numba and a pure-numpy flavour.

All kernels work on ``int64`` arrays whose entries are residues in ``[0, N)``.
The public names (``partition_prefix``, ``box_mod``, ``residue_count_sweep``,
``smallest_period``) dispatch on :data:`qbinmod._accel.USE_NUMBA`; the
``*_numba`` / ``*_numpy`` variants stay importable so tests and the benchmark
can run both side by side.
"""

import numpy as np

from ._accel import USE_NUMBA, njit

# ---------------------------------------------------------------------------
# numba flavour


@njit
def _div_one_minus_numba(a, step, mod):
    # a <- a / (1 - q^step) as a truncated series
    for n in range(step, a.shape[0]):
        v = a[n] + a[n - step]
        if v >= mod:
            v -= mod
        a[n] = v


@njit
def _mul_one_minus_numba(a, step, mod):
    # a <- a * (1 - q^step); descending so a[n - step] is still the old value
    for n in range(a.shape[0] - 1, step - 1, -1):
        v = a[n] - a[n - step]
        if v < 0:
            v += mod
        a[n] = v


@njit
def partition_prefix_numba(k, mod, length):
    a = np.zeros(length, dtype=np.int64)
    a[0] = 1 % mod
    for i in range(1, k + 1):
        _div_one_minus_numba(a, i, mod)
    return a


@njit
def box_mod_numba(j, k, mod):
    a = np.zeros(j * k + 1, dtype=np.int64)
    a[0] = 1 % mod
    for i in range(1, k + 1):
        _mul_one_minus_numba(a, j + i, mod)
        _div_one_minus_numba(a, i, mod)
    return a


@njit
def residue_count_sweep_numba(k, mod, n_lo, n_hi):
    width = k * n_hi + 1
    rows = np.zeros((k + 1, width), dtype=np.int64)
    rows[0, 0] = 1 % mod
    counts = np.zeros((n_hi - n_lo + 1, mod), dtype=np.int64)
    if n_lo == 0 and k == 0:
        counts[0, rows[0, 0]] += 1
    for n in range(n_hi):
        # [n+1, j] = [n, j] + q^(n+1-j) [n, j-1]
        top = min(k, n + 1)
        for j in range(top, 0, -1):
            shift = n + 1 - j
            prev_len = (j - 1) * (n - j + 1) + 1
            for t in range(prev_len):
                v = rows[j, shift + t] + rows[j - 1, t]
                if v >= mod:
                    v -= mod
                rows[j, shift + t] = v
        m = n + 1
        if m >= n_lo and m >= k:
            idx = m - n_lo
            for t in range(k * (m - k) + 1):
                counts[idx, rows[k, t]] += 1
    return counts


@njit
def smallest_period_numba(values):
    # smallest P with values[i] == values[i + P] for all i (prefix function)
    n = values.shape[0]
    if n == 0:
        return 1
    fail = np.zeros(n, dtype=np.int64)
    for i in range(1, n):
        b = fail[i - 1]
        while b > 0 and values[i] != values[b]:
            b = fail[b - 1]
        if values[i] == values[b]:
            b += 1
        fail[i] = b
    return n - fail[n - 1]


# ---------------------------------------------------------------------------
# numpy flavour


def _div_one_minus_numpy(a, step, mod):
    n = a.shape[0]
    if step >= n:
        return
    rows = -(-n // step)
    buf = np.zeros(rows * step, dtype=np.int64)
    buf[:n] = a
    buf = buf.reshape(rows, step)
    np.cumsum(buf, axis=0, out=buf)
    a[:] = buf.reshape(-1)[:n] % mod


def _mul_one_minus_numpy(a, step, mod):
    if step >= a.shape[0]:
        return
    a[step:] = (a[step:] - a[:-step].copy()) % mod


def partition_prefix_numpy(k, mod, length):
    a = np.zeros(length, dtype=np.int64)
    a[0] = 1 % mod
    for i in range(1, k + 1):
        _div_one_minus_numpy(a, i, mod)
    return a


def box_mod_numpy(j, k, mod):
    a = np.zeros(j * k + 1, dtype=np.int64)
    a[0] = 1 % mod
    for i in range(1, k + 1):
        _mul_one_minus_numpy(a, j + i, mod)
        _div_one_minus_numpy(a, i, mod)
    return a


def residue_count_sweep_numpy(k, mod, n_lo, n_hi):
    rows = np.zeros((k + 1, k * n_hi + 1), dtype=np.int64)
    rows[0, 0] = 1 % mod
    counts = np.zeros((n_hi - n_lo + 1, mod), dtype=np.int64)
    if n_lo == 0 and k == 0:
        counts[0, rows[0, 0]] += 1
    for n in range(n_hi):
        for j in range(min(k, n + 1), 0, -1):
            shift = n + 1 - j
            prev_len = (j - 1) * (n - j + 1) + 1
            seg = rows[j, shift:shift + prev_len]
            seg += rows[j - 1, :prev_len]
            seg[seg >= mod] -= mod
        m = n + 1
        if m >= n_lo and m >= k:
            live = rows[k, :k * (m - k) + 1]
            counts[m - n_lo] = np.bincount(live, minlength=mod)
    return counts


def smallest_period_numpy(values):
    n = values.shape[0]
    for p in range(1, n):
        if np.array_equal(values[p:], values[:-p]):
            return p
    return max(n, 1)


# ---------------------------------------------------------------------------
# dispatch

if USE_NUMBA:
    partition_prefix = partition_prefix_numba
    box_mod = box_mod_numba
    residue_count_sweep = residue_count_sweep_numba
    smallest_period = smallest_period_numba
else:
    partition_prefix = partition_prefix_numpy
    box_mod = box_mod_numpy
    residue_count_sweep = residue_count_sweep_numpy
    smallest_period = smallest_period_numpy

BACKENDS = {
    "numba": {
        "partition_prefix": partition_prefix_numba,
        "box_mod": box_mod_numba,
        "residue_count_sweep": residue_count_sweep_numba,
        "smallest_period": smallest_period_numba,
    },
    "numpy": {
        "partition_prefix": partition_prefix_numpy,
        "box_mod": box_mod_numpy,
        "residue_count_sweep": residue_count_sweep_numpy,
        "smallest_period": smallest_period_numpy,
    },
}
