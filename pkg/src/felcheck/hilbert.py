"""Hilbert numerators of semigroup rings and alternating syzygy power sums.

The Hilbert series of the semigroup is Q(z) / prod_i (1 - z^{d_i}); the
numerator Q is obtained exactly from the gap polynomial without any series
truncation, via Q = P/(1-z) - Phi*P where P is the generator product
polynomial and Phi has a unit coefficient at each gap exponent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exact import IntPolynomial
from .semigroup import GapData, SemigroupSpec


@dataclass(frozen=True)
class HilbertData:
    phi: IntPolynomial  # gap polynomial, 0/1 coefficients at gap exponents
    prod: IntPolynomial  # product of (1 - z^{d_i})
    numerator: IntPolynomial  # Hilbert numerator Q, constant term 1


@dataclass(frozen=True)
class SyzygyValues:
    """Alternating syzygy power sums c[r] and normalized invariants k[p]."""

    c: dict[int, int]
    k: dict[int, Fraction]


def gap_polynomial(gaps: GapData) -> IntPolynomial:
    """Polynomial with coefficient 1 at each gap exponent."""
    if not gaps.gaps:
        return IntPolynomial()
    coeffs = [0] * (gaps.frobenius + 1)
    for g in gaps.gaps:
        coeffs[g] = 1
    return IntPolynomial(coeffs)


def product_polynomial(S: SemigroupSpec) -> IntPolynomial:
    """Expanded product of (1 - z^{d_i}) over all generators."""
    out = IntPolynomial([1])
    for d in S.generators:
        out = out * IntPolynomial.one_minus_pow(d)
    return out


def hilbert_numerator(S: SemigroupSpec, gaps: GapData) -> HilbertData:
    """Exact Hilbert numerator computed as P/(1-z) - Phi*P."""
    prod = product_polynomial(S)
    phi = gap_polynomial(gaps)
    numerator = prod.exact_div(IntPolynomial.one_minus_pow(1)) - phi * prod
    return HilbertData(phi, prod, numerator)


def alternating_syzygy_sum(h: HilbertData, r: int) -> int:
    """Sum of n^r times the z^n coefficient of 1 - Q(z), with 0^0 = 1."""
    if r < 0:
        raise ValueError("power must be nonnegative")
    diff = IntPolynomial([1]) - h.numerator
    return sum(c * n**r for n, c in enumerate(diff.coeffs) if c)


def alternating_syzygy_sums(h: HilbertData, r_max: int) -> list[int]:
    """All alternating syzygy power sums for 0 <= r <= r_max in one pass."""
    diff = IntPolynomial([1]) - h.numerator
    out = [0] * (r_max + 1)
    for n, c in enumerate(diff.coeffs):
        if c:
            pw = 1
            for r in range(r_max + 1):
                out[r] += c * pw
                pw *= n
    return out


def k_invariant(S: SemigroupSpec, h: HilbertData, p: int) -> Fraction:
    """Normalized invariant: the (m+p)-th alternating sum divided by (-1)^m * pi * (m+p)!/p!."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    denom = (-1) ** S.m * S.pi * (factorial(S.m + p) // factorial(p))
    return Fraction(alternating_syzygy_sum(h, S.m + p), denom)


def syzygy_values(S: SemigroupSpec, h: HilbertData, p_max: int) -> SyzygyValues:
    """Alternating sums for r <= m + p_max together with the invariants for p <= p_max."""
    sums = alternating_syzygy_sums(h, S.m + p_max)
    c = dict(enumerate(sums))
    k = {}
    for p in range(p_max + 1):
        denom = (-1) ** S.m * S.pi * (factorial(S.m + p) // factorial(p))
        k[p] = Fraction(sums[S.m + p], denom)
    return SyzygyValues(c, k)
