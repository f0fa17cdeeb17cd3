"""Residue counts of q-binomial coefficients and their quasi-linear structure.

``f_count(n, k, R, N)`` counts the coefficients of ``[n choose k]_q`` that are
``R mod N``.  On each class ``n = i (mod Q)`` with ``Q = pi'_N(k)`` it is a
linear function of ``(n - i) / Q``; :func:`fit` recovers slopes and
intercepts by sampling, :func:`genfun` packs them into the rational
generating function, and the ``check_*`` helpers test the block structure
behind it.
"""

from dataclasses import dataclass, field
from math import comb
from typing import Optional

import numpy as np

from . import kernels
from .arith import ResidueSeq, check_modulus
from .errors import InvalidArgs, InvalidResidue, NonlinearFit, NotFound
from .partitions import box_coeffs_exact, p_le_k_exact, qbinom_coeffs
from .periods import pi_n, pi_prime_n
from .structure import check_zero_sum


def _check_residue(R, N):
    if not 0 <= R < N:
        raise InvalidResidue(f"residue {R} outside [0, {N})")


def f_count(n: int, k: int, R: int, N: int) -> int:
    """Number of coefficients of ``[n choose k]_q`` congruent to R mod N (0 for n < k)."""
    N = check_modulus(N)
    _check_residue(R, N)
    if k < 0:
        raise InvalidArgs("k must be >= 0")
    if n < k:
        return 0
    return int(np.count_nonzero(qbinom_coeffs(n, k, N).values == R))


@dataclass(frozen=True)
class CountTable:
    """``counts[n - n_lo, R] = f_count(n, k, R, N)`` for ``n_lo <= n <= n_hi``."""

    k: int
    N: int
    n_lo: int
    counts: np.ndarray = field(repr=False)

    @property
    def n_hi(self) -> int:
        return self.n_lo + self.counts.shape[0] - 1

    def f(self, n: int, R: int) -> int:
        if not self.n_lo <= n <= self.n_hi:
            raise IndexError(f"n={n} outside [{self.n_lo}, {self.n_hi}]")
        return int(self.counts[n - self.n_lo, R])

    def column(self, R: int) -> np.ndarray:
        return self.counts[:, R]


def count_table(k: int, N: int, n_lo: int, n_hi: int) -> CountTable:
    """All residue counts for ``n`` in ``[n_lo, n_hi]`` from one Pascal sweep."""
    N = check_modulus(N)
    if k < 1:
        raise InvalidArgs("k must be >= 1")
    if not 0 <= n_lo <= n_hi:
        raise InvalidArgs("need 0 <= n_lo <= n_hi")
    counts = kernels.residue_count_sweep(int(k), N, int(n_lo), int(n_hi))
    return CountTable(k=k, N=N, n_lo=n_lo, counts=counts)


# ---------------------------------------------------------------------------
# sections and blocks


@dataclass(frozen=True)
class SectionDecomp:
    n: int
    k: int
    N: int
    Q: int
    sections: tuple  # k ResidueSeqs of length n
    trailing: ResidueSeq

    @property
    def l(self) -> int:
        return self.n // self.Q

    def blocks(self, i: int) -> list:
        S = self.sections[i]
        return [S[b * self.Q : (b + 1) * self.Q] for b in range(self.l)]

    def remainder(self, i: int) -> ResidueSeq:
        return self.sections[i][self.l * self.Q :]

    def concatenated(self) -> ResidueSeq:
        out = self.sections[0]
        for S in self.sections[1:]:
            out = out.concat(S)
        return out.concat(self.trailing)


def decompose(n: int, k: int, N: int, Q: Optional[int] = None) -> SectionDecomp:
    """Split ``[n+k choose k]_q mod N`` into k sections of length n plus ``[1]``.

    Section i holds the coefficients of ``q^(i*n + j)`` for ``0 <= j < n``.
    Blocks have length Q (default ``pi'_N(k)``).
    """
    N = check_modulus(N)
    if n < 1 or k < 1:
        raise InvalidArgs("need n >= 1 and k >= 1")
    if Q is None:
        Q = pi_prime_n(N, k)
    c = qbinom_coeffs(n + k, k, N)
    sections = tuple(c[i * n : (i + 1) * n] for i in range(k))
    dec = SectionDecomp(n=n, k=k, N=N, Q=Q, sections=sections, trailing=c[k * n :])
    if dec.concatenated() != c or dec.trailing.tolist() != [1 % N]:
        raise AssertionError("section decomposition does not rebuild the coefficients")
    return dec


@dataclass(frozen=True)
class BlockReport:
    n: int
    k: int
    N: int
    Q: int
    l: int
    mismatch: Optional[tuple] = None  # (section, block, offset)

    @property
    def passed(self) -> bool:
        return self.mismatch is None


def check_block_equality(n: int, k: int, N: int) -> BlockReport:
    """Within every section, all length-``pi'_N(k)`` blocks coincide mod N."""
    dec = decompose(n, k, N)
    mismatch = None
    for i in range(k):
        blocks = dec.blocks(i)
        for b, B in enumerate(blocks[1:], start=1):
            diff = np.flatnonzero(B.values != blocks[0].values)
            if diff.size:
                mismatch = (i, b, int(diff[0]))
                break
        if mismatch:
            break
    return BlockReport(n=n, k=k, N=dec.N, Q=dec.Q, l=dec.l, mismatch=mismatch)


@dataclass(frozen=True)
class SectionZeroReport:
    l: int
    k: int
    N: int
    Q: int
    failures: tuple  # (section, block, "tail" | "head")

    @property
    def passed(self) -> bool:
        return not self.failures


def check_section_zeros(l: int, k: int, N: int) -> SectionZeroReport:
    """Zero runs inside the blocks of ``[Q*l + k choose k]_q mod N``.

    In section m every block ends with ``C(k+1-m, 2) - 1`` zeros.  By the
    palindrome symmetry the mirror run sits at the front: the
    ``C(m+2, 2) - 1`` entries right after the first entry of the block.
    """
    if l < 1:
        raise InvalidArgs("l must be >= 1")
    Q = pi_prime_n(N, k)
    dec = decompose(Q * l, k, N, Q=Q)
    failures = []
    for m in range(k):
        tail = comb(k + 1 - m, 2) - 1
        head = comb(m + 2, 2) - 1
        for b, B in enumerate(dec.blocks(m)):
            v = B.values
            if tail > 0 and v[Q - tail :].any():
                failures.append((m, b, "tail"))
            if head > 0 and v[1 : 1 + head].any():
                failures.append((m, b, "head"))
    return SectionZeroReport(l=l, k=k, N=dec.N, Q=Q, failures=tuple(failures))


# ---------------------------------------------------------------------------
# partitions escaping the box


def bounded_partitions(total: int, max_parts: int, max_part: int):
    """Yield partitions of ``total`` (non-increasing tuples) within the bounds."""
    if total == 0:
        yield ()
        return
    if max_parts <= 0 or max_part <= 0:
        return
    for first in range(min(total, max_part), 0, -1):
        if first * max_parts < total:
            break
        for rest in bounded_partitions(total - first, max_parts - 1, first):
            yield (first,) + rest


def _check_bad_args(i, m, j, n, k):
    if not (1 <= i <= m <= k - 1 and 0 <= j < n):
        raise InvalidArgs(f"need 1 <= i <= m <= k-1 and 0 <= j < n, got i={i} m={m} j={j} n={n} k={k}")


def enumerate_bad(i: int, m: int, j: int, n: int, k: int) -> set:
    """Pairs ``(lam, mu)`` with ``|lam| + |mu| = m*n + j`` where ``mu`` has
    exactly i parts and ``lam`` fits the ``n x k`` box with its i largest
    parts equal to n.

    Adding ``mu`` to those i parts gives each partition of ``m*n + j`` into at
    most k parts that has exactly i parts above n, once.  ``lam`` may have
    further parts equal to n; requiring exactly i of them would miss every
    partition that also has a part equal to n.
    """
    _check_bad_args(i, m, j, n, k)
    total = m * n + j
    out = set()
    for rest_size in range(0, total - i * n - i + 1):
        mu_size = total - i * n - rest_size
        mus = [mu for mu in bounded_partitions(mu_size, i, mu_size) if len(mu) == i]
        if not mus:
            continue
        for rest in bounded_partitions(rest_size, k - i, n):
            lam = (n,) * i + rest
            for mu in mus:
                out.add((lam, mu))
    return out


def bad_count_convolution(i: int, m: int, j: int, n: int, k: int) -> int:
    """``sum_{a+b = (m-i)n + j} p(n, k-i, a) * p_{=i}(b)`` over the integers."""
    _check_bad_args(i, m, j, n, k)
    target = (m - i) * n + j
    box = box_coeffs_exact(n, k - i)
    eq = [0] * i + p_le_k_exact(i, max(target - i + 1, 0))
    return sum(box[a] * eq[target - a] for a in range(min(target, len(box) - 1) + 1))


@dataclass(frozen=True)
class Lemma34Report:
    n: int
    k: int
    m: int
    j: int
    section_value: int  # [q^(m n + j)] of [n+k choose k]_q
    unrestricted: int  # p_{<=k}(m n + j)
    bad_counts: tuple  # #bad for i = 1..m, by enumeration
    convolution_counts: tuple  # same counts from the convolution formula

    @property
    def passed(self) -> bool:
        return self.section_value == self.unrestricted - sum(self.bad_counts)

    @property
    def convolution_ok(self) -> bool:
        return self.bad_counts == self.convolution_counts


def check_lemma34(n: int, k: int, m: int, j: int) -> Lemma34Report:
    """Section entry equals the unrestricted count minus the escaping pairs."""
    if not (1 <= m <= k - 1 and 0 <= j < n):
        raise InvalidArgs("need 1 <= m <= k-1 and 0 <= j < n")
    t = m * n + j
    bad = tuple(len(enumerate_bad(i, m, j, n, k)) for i in range(1, m + 1))
    conv = tuple(bad_count_convolution(i, m, j, n, k) for i in range(1, m + 1))
    return Lemma34Report(
        n=n,
        k=k,
        m=m,
        j=j,
        section_value=box_coeffs_exact(n, k)[t],
        unrestricted=p_le_k_exact(k, t + 1)[t],
        bad_counts=bad,
        convolution_counts=conv,
    )


# ---------------------------------------------------------------------------
# fitting the linear pieces


@dataclass(frozen=True)
class QuasiFit:
    k: int
    R: int
    N: int
    Q: int
    intercepts: tuple  # b_i
    slopes: tuple  # m_i
    sample_base: tuple  # first sampled n in each class

    def predict(self, n: int) -> int:
        i = n % self.Q
        return self.slopes[i] * ((n - i) // self.Q) + self.intercepts[i]

    def predict_array(self, ns: np.ndarray) -> np.ndarray:
        ns = np.asarray(ns, dtype=np.int64)
        i = ns % self.Q
        return np.asarray(self.slopes, dtype=np.int64)[i] * ((ns - i) // self.Q) + np.asarray(
            self.intercepts, dtype=np.int64
        )[i]


def _fit_window(k, Q):
    base = np.arange(Q, dtype=np.int64)
    # smallest n = i (mod Q) with n >= Q + k
    first = base + Q * (-(-(Q + k - base) // Q))
    return first, int(first.max()) + 2 * Q


def fit_all(k: int, N: int, table: Optional[CountTable] = None) -> dict:
    """Fit every residue class for every R from one shared count table."""
    N = check_modulus(N)
    if k < 1:
        raise InvalidArgs("k must be >= 1")
    Q = pi_prime_n(N, k)
    first, n_hi = _fit_window(k, Q)
    n_lo = Q + k
    if table is None or table.n_lo > n_lo or table.n_hi < n_hi:
        table = count_table(k, N, n_lo, n_hi)
    idx0 = first - table.n_lo
    base = np.arange(Q, dtype=np.int64)
    t0 = (first - base) // Q
    fits = {}
    for R in range(N):
        col = table.column(R)
        f0, f1, f2 = col[idx0], col[idx0 + Q], col[idx0 + 2 * Q]
        slope = f1 - f0
        bad = np.flatnonzero(f2 - f1 != slope)
        if bad.size:
            i = int(bad[0])
            raise NonlinearFit(
                f"k={k} R={R} N={N}: class {i} samples {int(f0[i])}, {int(f1[i])}, {int(f2[i])} not collinear"
            )
        intercept = f0 - slope * t0
        fits[R] = QuasiFit(
            k=k,
            R=R,
            N=N,
            Q=Q,
            intercepts=tuple(int(x) for x in intercept),
            slopes=tuple(int(x) for x in slope),
            sample_base=tuple(int(x) for x in first),
        )
    return fits


def fit(k: int, R: int, N: int, table: Optional[CountTable] = None) -> QuasiFit:
    """Slopes and intercepts of ``f_count`` on each class mod ``pi'_N(k)``.

    Three samples per class (``n0, n0+Q, n0+2Q`` with ``n0 >= Q + k``) must be
    collinear, else NonlinearFit.
    """
    N = check_modulus(N)
    _check_residue(R, N)
    return fit_all(k, N, table)[R]


@dataclass(frozen=True)
class GenFun:
    """``sum_i ((1 - x^Q) b_i x^i + m_i x^(Q+i)) / (1 - x^Q)^2``."""

    Q: int
    numerator_b: tuple
    numerator_m: tuple

    def numerator(self) -> list:
        """Numerator coefficients (degree < 2Q) over ``(1 - x^Q)^2``."""
        b, m = self.numerator_b, self.numerator_m
        return list(b) + [mi - bi for mi, bi in zip(m, b)]

    def expand(self, terms: int) -> list:
        num = self.numerator()
        Q = self.Q
        a = []
        for n in range(terms):
            v = num[n] if n < len(num) else 0
            if n >= Q:
                v += 2 * a[n - Q]
            if n >= 2 * Q:
                v -= a[n - 2 * Q]
            a.append(v)
        return a


def genfun(qf: QuasiFit) -> GenFun:
    return GenFun(Q=qf.Q, numerator_b=qf.intercepts, numerator_m=qf.slopes)


# ---------------------------------------------------------------------------
# slopes


def cyclic_period(values) -> int:
    """Smallest P dividing ``len(values)`` with ``values[i] == values[(i+P) % len]``."""
    v = np.asarray(values)
    n = v.shape[0]
    for P in range(1, n + 1):
        if n % P == 0 and np.array_equal(v, np.roll(v, -P)):
            return P
    return n


@dataclass(frozen=True)
class SlopeReport:
    k: int
    R: int
    N: int
    Q: int
    shift: int  # pi'_N(k-1)
    hypothesis_met: bool
    holds: bool
    slope_period: int
    symmetric: bool
    note: str = ""
    rows: tuple = field(default=(), repr=False)  # (i, m_i)

    @property
    def status(self) -> str:
        if self.holds:
            return "pass"
        return "fail" if self.hypothesis_met else "skipped"


def check_slope_period(k: int, R: int, N: int, qf: Optional[QuasiFit] = None) -> SlopeReport:
    """Slopes repeat under the shift ``i -> i + pi'_N(k-1)``.

    The hypothesis is a vanishing period sum of ``p_{<=k-1}`` mod an odd N.
    A failure outside the hypothesis is reported as skipped, not failed.
    """
    N = check_modulus(N)
    _check_residue(R, N)
    if qf is None:
        qf = fit(k, R, N)
    shift = pi_prime_n(N, k - 1)
    m = np.asarray(qf.slopes, dtype=np.int64)
    holds = bool(np.array_equal(m, np.roll(m, -shift)))
    if N % 2 == 0:
        met, note = False, "even modulus"
    elif k == 1:
        met, note = True, "k=1: shift is 1"
    else:
        met = check_zero_sum(k - 1, N).strong
        note = "" if met else f"period sum of p_<={k - 1} is nonzero mod {N}"
    P = cyclic_period(m)
    sym = all(m[i] == m[(P - i) % P] for i in range(P))
    return SlopeReport(
        k=k,
        R=R,
        N=N,
        Q=qf.Q,
        shift=shift,
        hypothesis_met=met,
        holds=holds,
        slope_period=P,
        symmetric=bool(sym),
        note=note,
        rows=tuple((i, int(x)) for i, x in enumerate(m)),
    )


# ---------------------------------------------------------------------------
# exploratory


def minimal_quasiperiod_search(k: int, R: int, N: int, bound: int, table: Optional[CountTable] = None) -> int:
    """Smallest ``Q* <= bound`` making ``f_count`` linear on every class mod ``Q*``.

    Linearity is judged over ``n`` in ``[k, k + 4*bound)``, so every class has
    at least four points.  The answer is empirical, not a proof of minimality.
    """
    N = check_modulus(N)
    _check_residue(R, N)
    if bound < pi_n(N, k):
        raise InvalidArgs(f"bound must be >= pi_N(k) = {pi_n(N, k)}")
    lo, hi = k, k + 4 * bound - 1
    if table is None or table.n_lo > lo or table.n_hi < hi:
        table = count_table(k, N, lo, hi)
    F = table.column(R)[lo - table.n_lo : hi - table.n_lo + 1]
    for Q in range(1, bound + 1):
        if not np.any(F[2 * Q :] - 2 * F[Q:-Q] + F[: -2 * Q]):
            return Q
    raise NotFound(f"no quasi-period <= {bound} for k={k} R={R} N={N}")
