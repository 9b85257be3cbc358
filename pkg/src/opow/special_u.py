"""Specializing the generic expansion to concrete choices of u(z).

Substituting an actual function for u collapses each differential
monomial to a term  coeff * z^a * e^(m z) * (d/dz)^s  with an exact
rational coefficient.  Supported substitutions:

* u = z        (u' = 1, higher derivatives vanish)
* u = e^z      (every derivative is e^z again)
* u = 1/z      (the j-th derivative is (-1)^j j! z^-(j+1))
* u = p(z)     for a polynomial p with exact rational coefficients

For u = 1/z the whole power collapses to one signed integer per
derivative order: A^k = sum_s a(k, s) z^(s - 2k) (d/dz)^s.  Those
integers have their own two-term recurrence and a closed form in
double factorials and binomials; :func:`verify_inverse_z_table` checks
recurrence, closed form and the specialized expansion against each
other, and :func:`verify_specializations` checks u = z against
second-kind Stirling numbers, u = e^z against unsigned first-kind
Stirling numbers, and u = 1/z against the alternating display form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

from .combinat import bell, binomial, double_factorial_odd, stirling1_unsigned, stirling2
from .diffpoly import DiffMonomial, degree
from .expansion import OperatorExpansion, expand, step
from .report import VerificationReport

_KINDS = ("z", "exp", "inv-z", "poly")


@dataclass(frozen=True)
class URule:
    """A substitution rule for u; use the module constants or
    :func:`polynomial_u` instead of constructing directly."""

    kind: str
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown substitution kind {self.kind!r}")
        if self.kind == "poly":
            if not self.coeffs or self.coeffs[-1] == 0:
                raise ValueError("polynomial substitution needs a nonzero leading coefficient")
        elif self.coeffs:
            raise ValueError(f"kind {self.kind!r} takes no coefficients")


IDENTITY_Z = URule("z")
EXP_Z = URule("exp")
INVERSE_Z = URule("inv-z")


def polynomial_u(coeffs: Iterable[int | Fraction]) -> URule:
    """Substitution u = c0 + c1 z + c2 z^2 + ... with exact coefficients."""
    return URule("poly", tuple(Fraction(c) for c in coeffs))


class SpecialTerm(NamedTuple):
    """One term coeff * z^z_exp * e^(exp_mult * z) * (d/dz)^d_order."""

    coeff: Fraction
    z_exp: int
    exp_mult: int
    d_order: int


# z-polynomials as {exponent: Fraction}; enough machinery for the poly rule

def _zp_mul(a: dict[int, Fraction], b: dict[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[ea + eb] = out.get(ea + eb, Fraction(0)) + ca * cb
    return {e: c for e, c in out.items() if c}


def _zp_pow(a: dict[int, Fraction], n: int) -> dict[int, Fraction]:
    out = {0: Fraction(1)}
    for _ in range(n):
        out = _zp_mul(out, a)
    return out


def _zp_derivative(a: dict[int, Fraction]) -> dict[int, Fraction]:
    return {e - 1: c * e for e, c in a.items() if e != 0}


def _poly_jets(coeffs: tuple[Fraction, ...], up_to: int) -> list[dict[int, Fraction]]:
    jets = [{e: c for e, c in enumerate(coeffs) if c}]
    for _ in range(up_to):
        jets.append(_zp_derivative(jets[-1]))
    return jets


def _monomial_contributions(
    mono: DiffMonomial, rule: URule, poly_jets: list[dict[int, Fraction]] | None
) -> list[tuple[int, int, Fraction]]:
    """(z_exp, exp_mult, value) contributions of one monomial under the rule."""
    coeff, exps = mono
    if rule.kind == "z":
        if any(e for e in exps[2:]):
            return []
        z_exp = exps[0] if exps else 0
        return [(z_exp, 0, Fraction(coeff))]
    if rule.kind == "exp":
        return [(0, degree(exps), Fraction(coeff))]
    if rule.kind == "inv-z":
        val = coeff
        z_exp = 0
        for j, e in enumerate(exps):
            val *= ((-1) ** j * math.factorial(j)) ** e
            z_exp -= (j + 1) * e
        return [(z_exp, 0, Fraction(val))]
    assert poly_jets is not None
    prod = {0: Fraction(coeff)}
    for j, e in enumerate(exps):
        if e:
            prod = _zp_mul(prod, _zp_pow(poly_jets[j], e))
    return [(z_exp, 0, c) for z_exp, c in prod.items()]


def specialize(exp: OperatorExpansion, rule: URule) -> tuple[SpecialTerm, ...]:
    """Evaluate the expansion's coefficient polynomials under the rule.

    Terms with equal (z_exp, exp_mult, d_order) are merged, zero terms
    dropped, and the result ordered by (d_order, z_exp, exp_mult).
    """
    poly_jets = None
    if rule.kind == "poly":
        max_jet = max(
            (len(mono.exps) - 1 for p in exp.coeffs.values() for mono in p.terms),
            default=0,
        )
        poly_jets = _poly_jets(rule.coeffs, max_jet)
    acc: dict[tuple[int, int, int], Fraction] = {}
    for s in range(1, exp.k + 1):
        for mono in exp.coeffs[s].terms:
            for z_exp, emult, val in _monomial_contributions(mono, rule, poly_jets):
                key = (s, z_exp, emult)
                acc[key] = acc.get(key, Fraction(0)) + val
    return tuple(
        SpecialTerm(acc[key], key[1], key[2], key[0])
        for key in sorted(acc)
        if acc[key] != 0
    )


@dataclass(frozen=True)
class ATable:
    """Signed coefficients of (z^-1 d/dz)^k: entry (k, s) multiplies
    z^(s-2k) (d/dz)^s, for 1 <= s <= k <= k_max."""

    k_max: int
    entries: dict[tuple[int, int], int] = field(repr=False)

    def value(self, k: int, s: int) -> int:
        if not 1 <= s <= k <= self.k_max:
            raise ValueError(f"entry ({k}, {s}) outside table range")
        return self.entries[(k, s)]


def a_table_by_recurrence(k_max: int) -> ATable:
    """Build the signed table from its two-term recurrence.

    Starting at the single entry 1 for k = 1, one more power of
    z^-1 d/dz updates the row by  new(s) = old(s-1) - (2k-s) old(s),
    with new(1) = -(2k-1) old(1) and new(k+1) = 1.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    entries: dict[tuple[int, int], int] = {(1, 1): 1}
    for k in range(1, k_max):
        entries[(k + 1, 1)] = -(2 * k - 1) * entries[(k, 1)]
        for s in range(2, k + 1):
            entries[(k + 1, s)] = entries[(k, s - 1)] - (2 * k - s) * entries[(k, s)]
        entries[(k + 1, k + 1)] = 1
    return ATable(k_max, entries)


def a_closed_form(k: int, s: int) -> int:
    """Closed form of the signed table entry at (k, s):
    (-1)^(k-s) (2k-2s-1)!! binomial(2k-1-s, s-1), using (-1)!! = 1."""
    if not 1 <= s <= k:
        raise ValueError(f"need 1 <= s <= k, got s={s} k={k}")
    return (
        (-1) ** (k - s)
        * double_factorial_odd(2 * k - 2 * s - 1)
        * binomial(2 * k - 1 - s, s - 1)
    )


def _inverse_z_coeffs(exp: OperatorExpansion) -> dict[int, Fraction]:
    """Map d_order -> coefficient for the u = 1/z specialization,
    asserting the z-exponent pattern s - 2k on the way."""
    k = exp.k
    out: dict[int, Fraction] = {}
    for term in specialize(exp, INVERSE_Z):
        if term.z_exp != term.d_order - 2 * k or term.exp_mult != 0:
            raise ArithmeticError(f"unexpected specialized term {term} at k={k}")
        if term.d_order in out:
            raise ArithmeticError(f"duplicate derivative order at k={k}")
        out[term.d_order] = term.coeff
    return out


def verify_inverse_z_table(k_max: int) -> VerificationReport:
    """Three-way agreement for all k <= k_max: recurrence table entries,
    the closed form, and the u = 1/z specialization of the expansion."""
    report = VerificationReport(suite="inverse-z", k_max=k_max)
    table = a_table_by_recurrence(k_max)
    exp = expand(1)
    for k in range(1, k_max + 1):
        if exp.k < k:
            exp = step(exp)
        coeffs = _inverse_z_coeffs(exp)
        for s in range(1, k + 1):
            rec = table.value(k, s)
            loc = f"k={k} s={s}"
            report.expect_equal(f"{loc} recurrence vs closed form", rec, a_closed_form(k, s))
            report.expect_equal(f"{loc} recurrence vs specialization", rec, coeffs.get(s))
    return report


def verify_specializations(k_max: int) -> VerificationReport:
    """Check all three concrete substitutions for every k <= k_max.

    u = z must give stirling2(k, s) on z^s (d/dz)^s with Bell-number row
    sums; u = e^z must give stirling1_unsigned(k, s) on
    e^(kz) (d/dz)^s with factorial row sums; u = 1/z must match the
    alternating double-factorial display form term by term.
    """
    report = VerificationReport(suite="special-u", k_max=k_max)
    exp = expand(1)
    for k in range(1, k_max + 1):
        if exp.k < k:
            exp = step(exp)

        terms = specialize(exp, IDENTITY_Z)
        report.expect_equal(f"k={k} u=z term count", k, len(terms))
        for t in terms:
            loc = f"k={k} u=z s={t.d_order}"
            report.expect(
                t.z_exp == t.d_order and t.exp_mult == 0,
                loc + " shape",
                f"z^{t.d_order}",
                f"z^{t.z_exp} e-mult {t.exp_mult}",
            )
            report.expect_equal(loc, stirling2(k, t.d_order), t.coeff)
        report.expect_equal(f"k={k} u=z row sum", bell(k), sum(t.coeff for t in terms))

        terms = specialize(exp, EXP_Z)
        report.expect_equal(f"k={k} u=exp term count", k, len(terms))
        for t in terms:
            loc = f"k={k} u=exp s={t.d_order}"
            report.expect(
                t.z_exp == 0 and t.exp_mult == k,
                loc + " shape",
                f"e^({k}z)",
                f"z^{t.z_exp} e-mult {t.exp_mult}",
            )
            report.expect_equal(loc, stirling1_unsigned(k, t.d_order), t.coeff)
        report.expect_equal(
            f"k={k} u=exp row sum", math.factorial(k), sum(t.coeff for t in terms)
        )

        coeffs = _inverse_z_coeffs(exp)
        for r in range(k):  # display index: term z^-(k+r) (d/dz)^(k-r)
            want = (-1) ** r * double_factorial_odd(2 * r - 1) * binomial(k - 1 + r, 2 * r)
            report.expect_equal(f"k={k} u=1/z r={r}", want, coeffs.get(k - r))
    return report
