"""Exact polynomials in the jet variables u, u', u'', ...

A differential monomial is ``coeff * u^e0 * (u')^e1 * (u'')^e2 * ...``
with the exponents held as a trimmed tuple of non-negative integers (no
trailing zeros; the empty tuple is the monomial 1).  A polynomial is a
canonically ordered tuple of monomials: graded lexicographic order,
total degree first, then the exponent tuple itself.  Because the
canonical form is unique, equality of polynomials is plain equality of
the underlying tuples.

Coefficients are Python ints, so arithmetic is exact at any magnitude.

Besides ring arithmetic the module provides the total derivative: the
derivation that sends u^(j) to u^(j+1) and acts on products by the
chain rule.  It preserves the total degree of every monomial and raises
its differential weight (sum of j * e_j) by exactly one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable, Iterator, NamedTuple

ExponentVector = tuple[int, ...]


def trim(exps: Iterable[int]) -> ExponentVector:
    """Canonical exponent tuple: validated and with trailing zeros removed."""
    out = list(exps)
    for e in out:
        if e < 0:
            raise ValueError(f"negative exponent in {tuple(out)}")
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(exps: ExponentVector) -> int:
    """Total degree: sum of all exponents."""
    return sum(exps)


def weight(exps: ExponentVector) -> int:
    """Differential weight: sum of j * e_j over the jet index j."""
    return sum(j * e for j, e in enumerate(exps))


def order_key(exps: ExponentVector) -> tuple[int, ExponentVector]:
    return (degree(exps), exps)


class DiffMonomial(NamedTuple):
    coeff: int
    exps: ExponentVector


def jet_symbol(j: int) -> str:
    if j == 0:
        return "u"
    if j <= 3:
        return "u" + "'" * j
    return f"u^({j})"


def monomial_str(exps: ExponentVector) -> str:
    if not exps:
        return "1"
    parts = []
    for j, e in enumerate(exps):
        if e == 0:
            continue
        sym = jet_symbol(j)
        if e == 1:
            parts.append(sym)
        elif j == 0:
            parts.append(f"u^{e}")
        else:
            parts.append(f"({sym})^{e}")
    return " ".join(parts)


@dataclass(frozen=True)
class DiffPolynomial:
    """Canonical sum of differential monomials.

    Do not call the constructor with raw data; build values through
    :func:`normalize` or the classmethod constructors, which establish
    the canonical form (merged like terms, no zero coefficients, graded
    lexicographic order).
    """

    terms: tuple[DiffMonomial, ...]

    @classmethod
    def zero(cls) -> "DiffPolynomial":
        return cls(())

    @classmethod
    def monomial(cls, coeff: int, exps: Iterable[int]) -> "DiffPolynomial":
        t = trim(exps)
        if coeff == 0:
            return cls(())
        return cls((DiffMonomial(coeff, t),))

    @classmethod
    def u_power(cls, n: int) -> "DiffPolynomial":
        """The monomial u^n; n = 0 gives the constant 1."""
        if n < 0:
            raise ValueError("u_power needs n >= 0")
        return cls.monomial(1, (n,))

    @classmethod
    def jet(cls, j: int, e: int = 1) -> "DiffPolynomial":
        """The monomial (u^(j))^e."""
        return cls.monomial(1, (0,) * j + (e,))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[DiffMonomial]:
        return iter(self.terms)

    def coefficient(self, exps: Iterable[int]) -> int:
        key = trim(exps)
        for mono in self.terms:
            if mono.exps == key:
                return mono.coeff
        return 0

    def __add__(self, other: "DiffPolynomial") -> "DiffPolynomial":
        return normalize(self.terms + other.terms)

    def __neg__(self) -> "DiffPolynomial":
        return DiffPolynomial(tuple(DiffMonomial(-c, e) for c, e in self.terms))

    def __sub__(self, other: "DiffPolynomial") -> "DiffPolynomial":
        return self + (-other)

    def __mul__(self, other: "DiffPolynomial | int") -> "DiffPolynomial":
        if isinstance(other, int):
            if other == 0:
                return DiffPolynomial.zero()
            return DiffPolynomial(tuple(DiffMonomial(c * other, e) for c, e in self.terms))
        out = []
        for ca, ea in self.terms:
            for cb, eb in other.terms:
                exps = tuple(x + y for x, y in zip_longest(ea, eb, fillvalue=0))
                out.append(DiffMonomial(ca * cb, exps))
        return normalize(out)

    __rmul__ = __mul__

    def derivative(self) -> "DiffPolynomial":
        return total_derivative(self)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for i, (coeff, exps) in enumerate(self.terms):
            mono = monomial_str(exps)
            mag = abs(coeff)
            if not exps:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag} {mono}"
            if i == 0:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(pieces)


def normalize(monomials: Iterable[DiffMonomial | tuple[int, Iterable[int]]]) -> DiffPolynomial:
    """Canonical polynomial from any sequence of (coeff, exps) pairs.

    Like terms are merged, zero terms dropped, and the survivors sorted
    in graded lexicographic order.
    """
    acc: dict[ExponentVector, int] = {}
    for coeff, exps in monomials:
        key = trim(exps)
        acc[key] = acc.get(key, 0) + coeff
    terms = tuple(
        DiffMonomial(acc[key], key)
        for key in sorted(acc, key=order_key)
        if acc[key] != 0
    )
    return DiffPolynomial(terms)


def add(a: DiffPolynomial, b: DiffPolynomial) -> DiffPolynomial:
    return a + b


def mul(a: DiffPolynomial, b: DiffPolynomial) -> DiffPolynomial:
    return a * b


def total_derivative(p: DiffPolynomial) -> DiffPolynomial:
    """Apply d/dz once, treating every u^(j) as a function of z.

    Each monomial contributes, for every slot j with e_j > 0, a new
    monomial with the coefficient multiplied by e_j, e_j lowered by one
    and e_{j+1} raised by one.
    """
    out = []
    for coeff, exps in p.terms:
        for j, e in enumerate(exps):
            if e == 0:
                continue
            shifted = list(exps)
            shifted[j] -= 1
            if j + 1 < len(shifted):
                shifted[j + 1] += 1
            else:
                shifted.append(1)
            out.append(DiffMonomial(coeff * e, tuple(shifted)))
    return normalize(out)
