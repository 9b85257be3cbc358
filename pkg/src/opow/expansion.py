"""Normal-ordered expansion of powers of the operator A = u(z) d/dz.

Applied to a function f, the k-th power of A is a sum over s = 1..k of
a coefficient polynomial in u, u', u'', ... times the pure derivative
(d/dz)^s.  The engine builds these coefficient polynomials iteratively:
appending one more factor of A transforms the table by

    new[1]   = u * d/dz old[1]
    new[s]   = u * old[s-1] + u * d/dz old[s]    (1 < s <= k)
    new[k+1] = u * old[k]

starting from the single entry u at k = 1.

Every monomial of the s-th coefficient at power k has total degree k
and differential weight k - s.  That invariant drives the extraction of
the inner coefficient blocks: the s-th-from-the-top coefficient splits
into slices u^(k-m) * F_m, where F_m collects the monomials free of u
whose exponent tuple alpha satisfies sum(alpha) = m and
sum(i * alpha_i) = s.  The integers attached to those monomials are the
table entries served by :func:`extract_C`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .diffpoly import (
    DiffMonomial,
    DiffPolynomial,
    ExponentVector,
    degree,
    normalize,
    total_derivative,
    trim,
    weight,
)
from .report import VerificationReport

U = DiffPolynomial.u_power(1)


@dataclass(frozen=True)
class OperatorExpansion:
    """Coefficients of A^k in normal order: coeffs[s] multiplies (d/dz)^s."""

    k: int
    coeffs: dict[int, DiffPolynomial]


class CEntry(NamedTuple):
    """One extracted coefficient: C at (s, m, k) for the exponent tuple alpha."""

    k: int
    s: int
    m: int
    alpha: ExponentVector
    value: int


def expand(k: int) -> OperatorExpansion:
    """Normal-ordered coefficients of A^k, k >= 1.

    The zeroth power is deliberately not defined; the expansion starts
    with the single term u * d/dz.
    """
    if k < 1:
        raise ValueError("operator power must be a positive integer")
    exp = OperatorExpansion(1, {1: U})
    while exp.k < k:
        exp = step(exp)
    return exp


def step(exp: OperatorExpansion) -> OperatorExpansion:
    """Coefficients of A^(k+1) from those of A^k (one more factor of A)."""
    k = exp.k
    coeffs: dict[int, DiffPolynomial] = {}
    coeffs[1] = U * total_derivative(exp.coeffs[1])
    for s in range(2, k + 1):
        coeffs[s] = U * exp.coeffs[s - 1] + U * total_derivative(exp.coeffs[s])
    coeffs[k + 1] = U * exp.coeffs[k]
    return OperatorExpansion(k + 1, coeffs)


def _e0(mono: DiffMonomial) -> int:
    return mono.exps[0] if mono.exps else 0


def extract_F(exp: OperatorExpansion, m: int, s: int) -> DiffPolynomial:
    """The u-free block F_m inside the coefficient of (d/dz)^(k-s).

    Valid for 1 <= m <= s <= k-1.  The block is read off as the
    monomials whose u-exponent equals k - m, with that exponent reset
    to zero; the degree invariant guarantees this is exact division by
    u^(k-m).
    """
    k = exp.k
    if not 1 <= m <= s <= k - 1:
        raise ValueError(f"need 1 <= m <= s <= k-1, got m={m} s={s} k={k}")
    picked = []
    for mono in exp.coeffs[k - s].terms:
        if _e0(mono) == k - m:
            picked.append(DiffMonomial(mono.coeff, trim((0,) + mono.exps[1:])))
    return normalize(picked)


def extract_C(exp: OperatorExpansion) -> list[CEntry]:
    """All coefficient entries of the expansion, sorted by (k, s, m, alpha).

    Every monomial of coeffs[j] for j < k yields one entry with
    s = k - j and m = k - (u-exponent).  Monomials that violate the
    degree or weight constraints are reported as corruption instead of
    being reinterpreted.
    """
    k = exp.k
    if k < 2:
        raise ValueError("extraction needs k >= 2")
    entries = []
    for j in range(1, k):
        s = k - j
        for mono in exp.coeffs[j].terms:
            alpha = trim(mono.exps[1:])
            m = k - _e0(mono)
            if degree(mono.exps) != k or weight(mono.exps) != k - j:
                raise ValueError(
                    f"invariant violation in coeffs[{j}] of A^{k}: monomial {mono}"
                )
            entries.append(CEntry(k, s, m, alpha, mono.coeff))
    entries.sort(key=lambda e: (e.k, e.s, e.m, e.alpha))
    return entries


def _check_one(report: VerificationReport, exp: OperatorExpansion) -> None:
    k = exp.k
    top = DiffPolynomial.u_power(k)
    report.expect_equal(f"k={k} s={k}", top, exp.coeffs[k])
    next_down = (k * (k - 1) // 2) * (DiffPolynomial.u_power(k - 1) * DiffPolynomial.jet(1))
    report.expect_equal(f"k={k} s={k - 1}", next_down, exp.coeffs[k - 1])


def check_closed_forms(exp: OperatorExpansion) -> VerificationReport:
    """Check the two explicit coefficient formulas at the top of the table.

    The top coefficient must be u^k, the one below it the triangular
    number k(k-1)/2 times u^(k-1) u'.
    """
    if exp.k < 2:
        raise ValueError("closed-form check needs k >= 2")
    report = VerificationReport(suite="closed-form", k_max=exp.k)
    _check_one(report, exp)
    return report


def verify_closed_forms(k_max: int) -> VerificationReport:
    """Run the closed-form checks for every power 2..k_max in one sweep."""
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    report = VerificationReport(suite="closed-form", k_max=k_max)
    exp = expand(1)
    while exp.k < k_max:
        exp = step(exp)
        _check_one(report, exp)
    return report
