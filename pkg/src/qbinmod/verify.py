"""Batch identity checks behind ``qbinmod verify``.

Each suite yields :class:`Check` records with status ``pass``, ``fail`` or
``skipped``.  Skipped means the hypothesis of the statement was not met or the
check is observational; it never hides a failure inside the hypothesis.
"""

from dataclasses import dataclass
from typing import Callable

from .arith import factorize, is_prime
from .errors import StructureViolation
from .periods import pi_prime_n
from .quasifit import (
    check_block_equality,
    check_lemma34,
    check_section_zeros,
    check_slope_period,
    fit_all,
)
from .structure import check_gamma_congruence, check_zero_sum, s_sequence, zero_sum_corollary

SUITES = ("gamma", "zerosum", "blocks", "lemma34", "sections", "slopes")


@dataclass(frozen=True)
class Ranges:
    k_max: int = 4
    mod_max: int = 6
    n_max: int = 8
    l_max: int = 2


@dataclass(frozen=True)
class Check:
    suite: str
    case: str
    status: str
    detail: str = ""


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def gamma_suite(r: Ranges):
    for k in range(1, r.k_max + 1):
        for N in range(2, r.mod_max + 1):
            try:
                s_sequence(k, N)
                yield Check("gamma", f"profile k={k} N={N}", "pass")
            except StructureViolation as exc:
                yield Check("gamma", f"profile k={k} N={N}", "fail", str(exc))
    prime_powers = [N for N in range(2, r.mod_max + 1) if len(factorize(N)) == 1]
    for k in range(1, r.k_max + 1):
        for q in prime_powers:
            (p, e), = factorize(q).items()
            rep = check_gamma_congruence(k, p, e)
            detail = "" if rep.passed else f"{rep}"
            yield Check("gamma", f"gamma k={k} p^e={q} Q={rep.Q}", _status(rep.passed), detail)


def zerosum_suite(r: Ranges):
    for N in range(3, r.mod_max + 1, 2):
        for k in range(1, r.k_max + 1):
            rep = check_zero_sum(k, N)
            branch = "weak" if rep.predicts_weak_only else "strong"
            detail = f"sum={rep.total} ratio={rep.ratio} predicted={branch} strong={rep.strong}"
            yield Check("zerosum", f"k={k} N={N}", _status(rep.consistent), detail)
            if is_prime(N):
                cor = zero_sum_corollary(k, N)
                if cor.exception:
                    yield Check("zerosum", f"corollary k={k} p={N}", "skipped", "strong sum predicted but not observed")


def blocks_suite(r: Ranges):
    for k in range(1, r.k_max + 1):
        for N in range(2, r.mod_max + 1):
            Q = pi_prime_n(N, k)
            for l in range(1, r.l_max + 1):
                for rem in sorted({0, 1, min(Q, 20) - 1}):
                    rep = check_block_equality(l * Q + rem, k, N)
                    detail = "" if rep.passed else f"first mismatch (section, block, offset) = {rep.mismatch}"
                    yield Check("blocks", f"k={k} N={N} l={l} r={rem}", _status(rep.passed), detail)


def lemma34_suite(r: Ranges):
    for n in range(1, r.n_max + 1):
        for k in range(2, r.k_max + 1):
            for m in range(1, k):
                for j in range(n):
                    rep = check_lemma34(n, k, m, j)
                    ok = rep.passed and rep.convolution_ok
                    detail = "" if ok else f"{rep}"
                    yield Check("lemma34", f"n={n} k={k} m={m} j={j}", _status(ok), detail)


def sections_suite(r: Ranges):
    for k in range(1, r.k_max + 1):
        for N in range(2, r.mod_max + 1):
            for l in range(1, r.l_max + 1):
                rep = check_section_zeros(l, k, N)
                detail = "" if rep.passed else f"failures={rep.failures}"
                yield Check("sections", f"k={k} N={N} l={l}", _status(rep.passed), detail)


def slopes_suite(r: Ranges):
    for N in range(3, r.mod_max + 1, 2):
        for k in range(1, r.k_max + 1):
            fits = fit_all(k, N)
            for R in range(N):
                rep = check_slope_period(k, R, N, fits[R])
                detail = f"Q={rep.Q} shift={rep.shift} slope_period={rep.slope_period}"
                if rep.note:
                    detail += f" ({rep.note})"
                yield Check("slopes", f"k={k} R={R} N={N}", rep.status, detail)


RUNNERS: dict = {
    "gamma": gamma_suite,
    "zerosum": zerosum_suite,
    "blocks": blocks_suite,
    "lemma34": lemma34_suite,
    "sections": sections_suite,
    "slopes": slopes_suite,
}


def run(suite: str, ranges: Ranges, progress: Callable = None) -> list:
    names = SUITES if suite == "all" else (suite,)
    out = []
    for name in names:
        if progress:
            progress(name)
        out.extend(RUNNERS[name](ranges))
    return out
