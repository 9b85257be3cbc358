"""Truncated Laurent series with exact rational coefficients.

This is the brute-force side of the package: apply A = u * d/dz to a
series literally, one application at a time, and compare against
evaluating the normal-ordered coefficient polynomials on the same
series.  The two routes share no code, so exact agreement is a real
check of the expansion engine.

A series stores a dense block of Fraction coefficients starting at
``min_exp`` together with a precision bound ``prec``: coefficients of
exponent >= prec are unknown.  ``prec=None`` means every coefficient is
known, which is the case for the Laurent polynomials the oracle runs
on; finite precision only enters for genuinely infinite series such as
a truncated exponential.  Precision propagates through arithmetic:
differentiation lowers it by one, and a product is trustworthy up to
min(a.prec + b.min_exp, b.prec + a.min_exp).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .diffpoly import DiffPolynomial
from .expansion import OperatorExpansion, expand, step
from .report import VerificationReport
from .special_u import URule


class PrecisionExhausted(ArithmeticError):
    """A computed series retained no known nonzero coefficient window."""


Q = Fraction


def _as_fraction(x: int | Fraction) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class LaurentSeries:
    min_exp: int
    coeffs: tuple[Fraction, ...]
    prec: int | None = None

    def __post_init__(self) -> None:
        coeffs = [_as_fraction(c) for c in self.coeffs]
        min_exp = self.min_exp
        if self.prec is not None:
            # drop unknown territory
            keep = self.prec - min_exp
            coeffs = coeffs[: max(keep, 0)]
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            min_exp += 1
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            min_exp = 0
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "min_exp", min_exp)

    # construction ---------------------------------------------------

    @classmethod
    def zero(cls, prec: int | None = None) -> "LaurentSeries":
        return cls(0, (), prec)

    @classmethod
    def polynomial(cls, coeffs: Iterable[int | Fraction], min_exp: int = 0) -> "LaurentSeries":
        """Exact finite series: coeffs[i] multiplies z^(min_exp + i)."""
        return cls(min_exp, tuple(_as_fraction(c) for c in coeffs), None)

    @classmethod
    def z_power(cls, n: int, coeff: int | Fraction = 1) -> "LaurentSeries":
        return cls(n, (_as_fraction(coeff),), None)

    @classmethod
    def from_terms(
        cls, terms: Mapping[int, int | Fraction], prec: int | None = None
    ) -> "LaurentSeries":
        if not terms:
            return cls.zero(prec)
        lo = min(terms)
        hi = max(terms)
        dense = [_as_fraction(terms.get(e, 0)) for e in range(lo, hi + 1)]
        return cls(lo, tuple(dense), prec)

    # inspection -----------------------------------------------------

    def is_zero(self) -> bool:
        """No known nonzero coefficient (exactly zero when prec is None)."""
        return not self.coeffs

    def known(self, e: int) -> bool:
        return self.prec is None or e < self.prec

    def coeff(self, e: int) -> Fraction:
        if not self.known(e):
            raise ValueError(f"coefficient of z^{e} is beyond precision {self.prec}")
        i = e - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Q(0)

    def items(self) -> list[tuple[int, Fraction]]:
        return [
            (self.min_exp + i, c) for i, c in enumerate(self.coeffs) if c != 0
        ]

    def _min_for_prec(self) -> int:
        # lowest exponent that can influence a product's known window
        if self.coeffs:
            return self.min_exp
        return self.prec if self.prec is not None else 0

    def agrees_with(self, other: "LaurentSeries") -> bool:
        """Equal on every exponent known to both series."""
        bound = None
        for p in (self.prec, other.prec):
            if p is not None:
                bound = p if bound is None else min(bound, p)
        exps = {e for e, _ in self.items()} | {e for e, _ in other.items()}
        for e in exps:
            if bound is not None and e >= bound:
                continue
            if self.coeff(e) != other.coeff(e):
                return False
        return True

    def __str__(self) -> str:
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for e, c in self.items():
                mag = -c if c < 0 else c
                factor = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
                txt = str(mag) if (mag != 1 or not factor) else ""
                piece = (txt + " " + factor).strip() if factor else txt
                parts.append((("- " if c < 0 else "+ ") if parts else ("-" if c < 0 else "")) + piece)
            body = " ".join(parts)
        if self.prec is not None:
            return f"{body} + O(z^{self.prec})"
        return body

    # arithmetic -----------------------------------------------------

    def derivative(self) -> "LaurentSeries":
        terms = {e - 1: e * c for e, c in self.items() if e != 0}
        prec = None if self.prec is None else self.prec - 1
        return LaurentSeries.from_terms(terms, prec)

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        prec = None
        for p in (self.prec, other.prec):
            if p is not None:
                prec = p if prec is None else min(prec, p)
        terms: dict[int, Fraction] = dict(self.items())
        for e, c in other.items():
            terms[e] = terms.get(e, Q(0)) + c
        return LaurentSeries.from_terms(terms, prec)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.min_exp, tuple(-c for c in self.coeffs), self.prec)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def __mul__(self, other: "LaurentSeries | int | Fraction") -> "LaurentSeries":
        if isinstance(other, (int, Fraction)):
            return LaurentSeries(
                self.min_exp, tuple(c * other for c in self.coeffs), self.prec
            )
        # an exact zero annihilates regardless of the other factor's precision
        if self.is_zero() and self.prec is None:
            return LaurentSeries.zero()
        if other.is_zero() and other.prec is None:
            return LaurentSeries.zero()
        prec = None
        if self.prec is not None:
            prec = self.prec + other._min_for_prec()
        if other.prec is not None:
            q = other.prec + self._min_for_prec()
            prec = q if prec is None else min(prec, q)
        terms: dict[int, Fraction] = {}
        for ea, ca in self.items():
            for eb, cb in other.items():
                e = ea + eb
                if prec is not None and e >= prec:
                    continue
                terms[e] = terms.get(e, Q(0)) + ca * cb
        return LaurentSeries.from_terms(terms, prec)

    __rmul__ = __mul__


def series_derivative(f: LaurentSeries) -> LaurentSeries:
    return f.derivative()


def series_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a * b


def series_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a + b


def _check_not_exhausted(result: LaurentSeries, what: str) -> LaurentSeries:
    if result.prec is not None and result.is_zero():
        raise PrecisionExhausted(f"{what}: no known terms remain (prec={result.prec})")
    return result


def apply_A_repeated(u: LaurentSeries, f: LaurentSeries, k: int) -> LaurentSeries:
    """Apply f -> u * f' exactly k times."""
    if k < 1:
        raise ValueError("k must be >= 1")
    g = f
    for _ in range(k):
        g = u * g.derivative()
    return _check_not_exhausted(g, f"A^{k} by repeated application")


def _evaluate_polynomial(
    p: DiffPolynomial,
    u_jets: list[LaurentSeries],
    pow_cache: dict[tuple[int, int], LaurentSeries],
) -> LaurentSeries:
    def jet_power(j: int, e: int) -> LaurentSeries:
        key = (j, e)
        if key not in pow_cache:
            pow_cache[key] = jet_power(j, e - 1) * u_jets[j] if e > 1 else u_jets[j]
        return pow_cache[key]

    total = LaurentSeries.zero()
    for coeff, exps in p.terms:
        term = LaurentSeries.z_power(0, coeff)
        for j, e in enumerate(exps):
            if e:
                term = term * jet_power(j, e)
        total = total + term
    return total


def apply_expansion(
    exp: OperatorExpansion, u: LaurentSeries, f: LaurentSeries
) -> LaurentSeries:
    """Evaluate the normal-ordered form of A^k on f: substitute series
    for u and its derivatives in each coefficient polynomial, multiply
    by the matching derivative of f, and sum."""
    k = exp.k
    max_jet = max(
        (len(mono.exps) - 1 for p in exp.coeffs.values() for mono in p.terms),
        default=0,
    )
    u_jets = [u]
    for _ in range(max_jet):
        u_jets.append(u_jets[-1].derivative())
    f_ders = [f]
    for _ in range(k):
        f_ders.append(f_ders[-1].derivative())
    pow_cache: dict[tuple[int, int], LaurentSeries] = {}
    total = LaurentSeries.zero()
    for s in range(1, k + 1):
        total = total + _evaluate_polynomial(exp.coeffs[s], u_jets, pow_cache) * f_ders[s]
    return _check_not_exhausted(total, f"A^{k} by expansion")


def series_for_rule(rule: URule, prec: int | None = None) -> LaurentSeries:
    """The series of u under a substitution rule.  The exponential rule
    is an infinite series and therefore requires a finite prec."""
    if rule.kind == "z":
        return LaurentSeries.polynomial([0, 1])
    if rule.kind == "inv-z":
        return LaurentSeries.z_power(-1)
    if rule.kind == "poly":
        return LaurentSeries.polynomial(rule.coeffs)
    if prec is None:
        raise ValueError("the exponential substitution needs a finite precision")
    import math

    return LaurentSeries(
        0, tuple(Q(1, math.factorial(n)) for n in range(max(prec, 0))), prec
    )


def random_polynomial(
    rng: random.Random, max_degree: int, bound: int = 9
) -> LaurentSeries:
    """Nonzero polynomial with integer coefficients in [-bound, bound]."""
    while True:
        cs = [rng.randint(-bound, bound) for _ in range(max_degree + 1)]
        if any(cs):
            return LaurentSeries.polynomial(cs)


def oracle_check(
    k: int,
    u: LaurentSeries | URule | None = None,
    f: LaurentSeries | None = None,
    seed: int = 0,
) -> VerificationReport:
    """Compare the two routes on one (u, f) pair; missing inputs are
    drawn from a seeded generator (u of degree <= 4, f of degree <= 6)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    rng = random.Random(seed)
    if u is None:
        u = random_polynomial(rng, 4)
    if isinstance(u, URule):
        u = series_for_rule(u, prec=None if u.kind != "exp" else 2 * k + 8)
    if f is None:
        f = random_polynomial(rng, 6)
    report = VerificationReport(suite="oracle", k_max=k)
    brute = apply_A_repeated(u, f, k)
    via_expansion = apply_expansion(expand(k), u, f)
    report.expect(
        brute.agrees_with(via_expansion),
        f"k={k} u={u} f={f}",
        str(brute),
        str(via_expansion),
    )
    return report


def oracle_suite(k_max: int, seed: int = 0, trials: int = 50) -> VerificationReport:
    """Seeded random (u, f) pairs for every k <= k_max, `trials` each."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    report = VerificationReport(suite="oracle", k_max=k_max)
    rng = random.Random(seed)
    exp = expand(1)
    for k in range(1, k_max + 1):
        if exp.k < k:
            exp = step(exp)
        for trial in range(1, trials + 1):
            u = random_polynomial(rng, 4)
            f = random_polynomial(rng, 6)
            brute = apply_A_repeated(u, f, k)
            via_expansion = apply_expansion(exp, u, f)
            report.expect(
                brute.agrees_with(via_expansion),
                f"k={k} trial={trial}",
                str(brute),
                str(via_expansion),
            )
    return report


def eigenfunction_report(n_max: int = 8, k_max: int = 8) -> VerificationReport:
    """For u = z the monomials are eigenfunctions: A^k z^n = n^k z^n."""
    report = VerificationReport(suite="eigenfunction", k_max=k_max)
    u = LaurentSeries.polynomial([0, 1])
    for n in range(1, n_max + 1):
        f = LaurentSeries.z_power(n)
        for k in range(1, k_max + 1):
            got = apply_A_repeated(u, f, k)
            report.expect_equal(
                f"n={n} k={k}", LaurentSeries.z_power(n, n**k), got
            )
    return report
