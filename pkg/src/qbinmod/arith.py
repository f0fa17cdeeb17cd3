"""Exact integer polynomials, residue sequences and small number theory."""

from dataclasses import dataclass
from functools import reduce
from math import gcd, lcm

import numpy as np

from .errors import InvalidModulus, InvalidPrime, NonExactDivision


@dataclass(frozen=True)
class IntPoly:
    """Dense polynomial with Python-int coefficients, lowest degree first."""

    coeffs: tuple

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_terms(cls, terms: dict) -> "IntPoly":
        """Build from ``{exponent: coefficient}``."""
        if not terms:
            return cls(())
        c = [0] * (max(terms) + 1)
        for e, v in terms.items():
            c[e] += v
        return cls(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return self.coeffs[i]
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        n = max(len(self), len(other))
        return IntPoly(tuple(self[i] + other[i] for i in range(n)))

    def __mul__(self, other):
        return poly_mul(self, other)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def reduce(self, modulus: int) -> "ResidueSeq":
        """Coefficient vector mod ``modulus`` (untrimmed, length ``degree + 1``)."""
        return ResidueSeq(modulus, [c % modulus for c in self.coeffs])


class ResidueSeq:
    """A finite sequence of residues modulo ``modulus``.

    Values are stored as an ``int64`` numpy array; every entry lies in
    ``[0, modulus)``.  Instances compare equal when modulus and values match.
    """

    __slots__ = ("modulus", "values")

    def __init__(self, modulus: int, values):
        check_modulus(modulus)
        arr = np.asarray(values, dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("ResidueSeq values must be one-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= modulus):
            arr = arr % modulus
        arr.setflags(write=False)
        self.modulus = int(modulus)
        self.values = arr

    def __len__(self):
        return int(self.values.shape[0])

    def __getitem__(self, i):
        if isinstance(i, slice):
            return ResidueSeq(self.modulus, self.values[i])
        return int(self.values[i])

    def __iter__(self):
        return iter(self.tolist())

    def __eq__(self, other):
        if isinstance(other, ResidueSeq):
            return self.modulus == other.modulus and np.array_equal(self.values, other.values)
        return NotImplemented

    def __hash__(self):
        return hash((self.modulus, self.values.tobytes()))

    def __repr__(self):
        return f"ResidueSeq(mod={self.modulus}, {self.tolist()})"

    def tolist(self) -> list:
        return [int(v) for v in self.values]

    def concat(self, other: "ResidueSeq") -> "ResidueSeq":
        if other.modulus != self.modulus:
            raise InvalidModulus("cannot concatenate sequences with different moduli")
        return ResidueSeq(self.modulus, np.concatenate([self.values, other.values]))


def check_modulus(N) -> int:
    if int(N) != N or N < 2:
        raise InvalidModulus(f"modulus must be an integer >= 2, got {N!r}")
    return int(N)


# ---------------------------------------------------------------------------
# polynomial arithmetic


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if a.is_zero() or b.is_zero():
        return IntPoly(())
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return IntPoly(tuple(out))


def poly_div_exact(num: IntPoly, den: IntPoly) -> IntPoly:
    """Quotient ``num / den`` in Z[q]; raises NonExactDivision on any remainder."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return IntPoly(())
    if num.degree < den.degree:
        raise NonExactDivision(f"degree {num.degree} numerator not divisible by degree {den.degree}")
    rem = list(num.coeffs)
    d = den.coeffs
    dd = den.degree
    lead = d[-1]
    quot = [0] * (num.degree - dd + 1)
    for shift in range(len(quot) - 1, -1, -1):
        top = rem[shift + dd]
        if top == 0:
            continue
        qc, r = divmod(top, lead)
        if r:
            raise NonExactDivision(f"leading coefficient {lead} does not divide {top}")
        quot[shift] = qc
        for t, c in enumerate(d):
            rem[shift + t] -= qc * c
    if any(rem):
        raise NonExactDivision("nonzero remainder")
    return IntPoly(tuple(quot))


def one_minus_q_pow(m: int) -> IntPoly:
    """The polynomial ``1 - q^m`` (``m >= 1``)."""
    return IntPoly.from_terms({0: 1, m: -1})


def delta_q(f, Q: int):
    """Shifted difference ``(1 - q^Q) F`` on a finite truncation.

    ``out[n] = f[n] - f[n - Q]`` for ``n >= Q`` and ``out[n] = f[n]`` below.
    Length is preserved.  Accepts a ResidueSeq (result reduced mod N), an
    IntPoly (treated as a truncation of its own length), or a plain sequence
    of ints (returns a list).
    """
    if Q < 1:
        raise ValueError("Q must be >= 1")
    if isinstance(f, ResidueSeq):
        v = f.values.copy()
        if Q < len(v):
            v[Q:] = (f.values[Q:] - f.values[:-Q]) % f.modulus
        return ResidueSeq(f.modulus, v)
    if isinstance(f, IntPoly):
        return IntPoly(tuple(_delta_list(list(f.coeffs), Q)))
    return _delta_list([int(x) for x in f], Q)


def _delta_list(vals: list, Q: int) -> list:
    return [vals[n] - vals[n - Q] if n >= Q else vals[n] for n in range(len(vals))]


# ---------------------------------------------------------------------------
# number theory


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p) -> int:
    if int(p) != p or not is_prime(int(p)):
        raise InvalidPrime(f"{p!r} is not prime")
    return int(p)


def nu_p(p: int, n: int) -> int:
    """p-adic valuation of the positive integer ``n``."""
    check_prime(p)
    if n < 1:
        raise ValueError("nu_p needs n >= 1")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def factorize(N: int) -> dict:
    """Prime factorisation by trial division, ``{p: e}`` in increasing p."""
    if N < 1:
        raise ValueError("factorize needs N >= 1")
    out = {}
    d = 2
    while d * d <= N:
        while N % d == 0:
            out[d] = out.get(d, 0) + 1
            N //= d
        d += 1 if d == 2 else 2
    if N > 1:
        out[N] = out.get(N, 0) + 1
    return out


_LCM_PREFIX = [1]  # _LCM_PREFIX[k] = lcm(1..k), grown on demand
_LCM_CACHE_LIMIT = 20_000


def lcm_range(k: int) -> int:
    """lcm(1, ..., k) as an exact integer."""
    if k < 1:
        raise ValueError("lcm_range needs k >= 1")
    if k > _LCM_CACHE_LIMIT:
        return reduce(lcm, range(1, k + 1), 1)
    while len(_LCM_PREFIX) <= k:
        _LCM_PREFIX.append(lcm(_LCM_PREFIX[-1], len(_LCM_PREFIX)))
    return _LCM_PREFIX[k]


def lcm_all(values) -> int:
    return reduce(lcm, values, 1)


__all__ = [
    "IntPoly",
    "ResidueSeq",
    "check_modulus",
    "check_prime",
    "delta_q",
    "factorize",
    "gcd",
    "is_prime",
    "lcm_all",
    "lcm_range",
    "nu_p",
    "one_minus_q_pow",
    "poly_div_exact",
    "poly_mul",
]
