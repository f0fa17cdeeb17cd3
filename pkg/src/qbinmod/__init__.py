"""Coefficients of Gaussian polynomials modulo N: periods, quasi-periods and
residue-count quasipolynomials, with brute-force checks of their structure."""

from ._accel import backend_name
from .arith import IntPoly, ResidueSeq, delta_q, poly_div_exact, poly_mul
from .errors import (
    DomainError,
    HypothesisNotMet,
    InvalidArgs,
    InvalidModulus,
    InvalidPrime,
    InvalidResidue,
    NoPeriodFound,
    NonExactDivision,
    NonlinearFit,
    NotFound,
    QbinmodError,
    StructureViolation,
)
from .partitions import BoxSpec, box_coeffs, p_eq_k, p_le_k_prefix, qbinom_coeffs
from .periods import (
    capital_pi,
    minimal_period,
    pi_n,
    pi_prime_n,
    pi_prime_power,
    pi_prime_power_formula,
    qperiod_table,
)
from .quasifit import (
    check_block_equality,
    check_lemma34,
    check_section_zeros,
    check_slope_period,
    count_table,
    decompose,
    f_count,
    fit,
    fit_all,
    genfun,
    minimal_quasiperiod_search,
)
from .structure import check_gamma_congruence, check_zero_sum, gamma_poly, s_sequence

__version__ = "0.1.0"
