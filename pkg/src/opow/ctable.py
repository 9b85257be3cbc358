"""The coefficient table generated by its own recurrences, plus verifiers.

The table holds the positive integers C keyed by (k, s, m, alpha) with
1 <= m <= s <= k-1, sum(alpha) = m and sum(i * alpha_i) = s.  Two
independent construction routes exist:

* :func:`c_table_from_expansions` reads the entries off the
  normal-ordered expansion of A^k (the defining route), and
* :func:`c_table_by_recurrence` builds them from three recurrences that
  never touch the expansion engine, seeded at s = 1 by the triangular
  numbers t(t-1)/2.

The recurrences raise the upper index s by one.  An entry at
(k, s, m, alpha) is a sum over intermediate powers t = s..k-1 of

* interior m:  (t+1-m) * C(t, s-1, m-1, alpha - e1)
               + sum_j (alpha_j + 1) * C(t, s-1, m, alpha + e_j - e_{j+1})
* m = s:       (t-s+1) * C(t, s-1, s-1, (s-1,))
* m = 1:       C(t, s-1, 1, unit(s-1))

where any index combination that leaves the valid key set contributes
zero.  The verifiers at the bottom check the table against independent
combinatorial references: binomial coefficients on the m = 1 column,
second-kind Stirling numbers on the m = s corner, first-kind Stirling
numbers for whole-table sums, permutation cycle-type counts, and a
double-factorial weighted sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .combinat import (
    binomial,
    compositions,
    cycle_type_count,
    double_factorial_odd,
    stirling1_unsigned,
    stirling2,
)
from .diffpoly import ExponentVector, trim
from .expansion import expand, extract_C, step
from .report import VerificationReport

import math

CKey = tuple[int, int, int, ExponentVector]


def _unit(s: int) -> ExponentVector:
    """The exponent tuple with a single 1 in slot s (1-based)."""
    return (0,) * (s - 1) + (1,)


@dataclass(frozen=True)
class CTable:
    """Read-only table of coefficient entries keyed (k, s, m, alpha)."""

    k_max: int
    entries: dict[CKey, int]

    def value(self, k: int, s: int, m: int, alpha: Iterable[int]) -> int:
        """Entry lookup; 0 for any key outside the table."""
        return self.entries.get((k, s, m, trim(alpha)), 0)

    def rows(self) -> list[tuple[CKey, int]]:
        return sorted(self.entries.items())


def c_table_by_recurrence(k_max: int) -> CTable:
    """Build the table for all k <= k_max from the three recurrences.

    Raises ArithmeticError if some required (k, s, m, alpha) is reached
    by none of the recurrences (it would come out non-positive); every
    key must receive a positive value.
    """
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    entries: dict[CKey, int] = {}
    for t in range(2, k_max + 1):
        entries[(t, 1, 1, (1,))] = t * (t - 1) // 2
    for s in range(2, k_max):
        for k in range(s + 1, k_max + 1):
            for alpha in (a for m in range(1, s + 1) for a in compositions(s, m)):
                m = sum(alpha)
                key = (k, s, m, trim(alpha))
                if m == 1:
                    val = sum(
                        entries.get((t, s - 1, 1, _unit(s - 1)), 0)
                        for t in range(s, k)
                    )
                elif m == s:
                    val = sum(
                        (t - s + 1) * entries.get((t, s - 1, s - 1, (s - 1,)), 0)
                        for t in range(s, k)
                    )
                else:
                    val = _interior_value(entries, k, s, m, alpha)
                if val <= 0:
                    raise ArithmeticError(f"no recurrence reaches entry {key}")
                entries[key] = val
    return CTable(k_max, entries)


def _interior_value(
    entries: dict[CKey, int], k: int, s: int, m: int, alpha: tuple[int, ...]
) -> int:
    total = 0
    for t in range(s, k):
        if alpha[0] >= 1:
            src = trim((alpha[0] - 1,) + alpha[1:])
            total += (t + 1 - m) * entries.get((t, s - 1, m - 1, src), 0)
        # one unit of weight moves from slot j+1 down to slot j
        for j in range(1, s):
            if alpha[j] >= 1:
                shifted = list(alpha)
                shifted[j - 1] += 1
                shifted[j] -= 1
                total += shifted[j - 1] * entries.get((t, s - 1, m, trim(shifted)), 0)
    return total


def c_table_from_expansions(k_max: int) -> CTable:
    """Build the same table by extraction from the expansion engine."""
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    entries: dict[CKey, int] = {}
    exp = expand(1)
    while exp.k < k_max:
        exp = step(exp)
        for e in extract_C(exp):
            entries[(e.k, e.s, e.m, e.alpha)] = e.value
    return CTable(k_max, entries)


def verify_cross_check(k_max: int) -> VerificationReport:
    """Entry-for-entry agreement of the two construction routes."""
    report = VerificationReport(suite="cross-check", k_max=k_max)
    rec = c_table_by_recurrence(k_max)
    ext = c_table_from_expansions(k_max)
    for key in sorted(set(rec.entries) | set(ext.entries)):
        k, s, m, alpha = key
        loc = f"k={k} s={s} m={m} alpha={alpha}"
        report.expect_equal(loc, ext.entries.get(key, "absent"), rec.entries.get(key, "absent"))
    return report


def verify_binomial_column(table: CTable, k_max: int | None = None) -> VerificationReport:
    """The m = 1 column: the entry at (k+1, s, 1, unit(s)) must equal
    binomial(k+1, s+1), for all 1 <= s <= k <= k_max - 1."""
    k_max = table.k_max if k_max is None else k_max
    report = VerificationReport(suite="binomial", k_max=k_max)
    for k in range(1, k_max):
        for s in range(1, k + 1):
            loc = f"k+1={k + 1} s={s}"
            report.expect_equal(loc, binomial(k + 1, s + 1), table.value(k + 1, s, 1, _unit(s)))
    return report


def verify_stirling2_corner(table: CTable, k_max: int | None = None) -> VerificationReport:
    """The m = s corner: the entry at (k+1, s+1, s+1, (s+1,)) must equal
    stirling2(k+1, k-s); the same corner must also satisfy its own
    one-term recurrence sum over intermediate powers."""
    k_max = table.k_max if k_max is None else k_max
    report = VerificationReport(suite="stirling2", k_max=k_max)
    for k in range(2, k_max):
        for s in range(1, k):
            loc = f"k+1={k + 1} s={s}"
            report.expect_equal(
                loc, stirling2(k + 1, k - s), table.value(k + 1, s + 1, s + 1, (s + 1,))
            )
    for s in range(2, k_max):
        for k in range(s + 1, k_max + 1):
            want = sum(
                (t - s + 1) * table.value(t, s - 1, s - 1, (s - 1,)) for t in range(s, k)
            )
            report.expect_equal(
                f"corner recurrence k={k} s={s}", want, table.value(k, s, s, (s,))
            )
    return report


def _sums_by_upper_index(table: CTable) -> dict[tuple[int, int], int]:
    sums: dict[tuple[int, int], int] = {}
    for (k, s, _m, _alpha), v in table.entries.items():
        sums[(k, s)] = sums.get((k, s), 0) + v
    return sums


def verify_stirling1_total(table: CTable, k_max: int | None = None) -> VerificationReport:
    """Summing the table over m and alpha at fixed (k, s) gives the
    unsigned first-kind Stirling number for (k, k-s)."""
    k_max = table.k_max if k_max is None else k_max
    report = VerificationReport(suite="stirling1-sum", k_max=k_max)
    sums = _sums_by_upper_index(table)
    for k in range(2, k_max + 1):
        for s in range(1, k):
            loc = f"k={k} s={s}"
            report.expect_equal(loc, stirling1_unsigned(k, k - s), sums.get((k, s), 0))
    return report


def verify_cycle_count_total(table: CTable, k_max: int | None = None) -> VerificationReport:
    """Cycle-type counts against table sums: the number of permutations
    of k elements with exactly s cycles, computed as a sum of
    k! / prod(i^alpha_i alpha_i!) over cycle types, equals the table sum
    at upper index k - s."""
    k_max = table.k_max if k_max is None else k_max
    report = VerificationReport(suite="cycle-count", k_max=k_max)
    sums = _sums_by_upper_index(table)
    for k in range(2, k_max + 1):
        for s in range(1, k):
            lhs = sum(cycle_type_count(alpha) for alpha in compositions(k, s))
            loc = f"k={k} s={s}"
            report.expect_equal(loc, lhs, sums.get((k, k - s), 0))
    return report


def verify_factorial_weighted_total(table: CTable, k_max: int | None = None) -> VerificationReport:
    """Weighting each entry by prod((i!)^alpha_i) and summing over m and
    alpha at fixed (k+1, s) gives (2s-1)!! * binomial(k+s, 2s)."""
    k_max = table.k_max if k_max is None else k_max
    report = VerificationReport(suite="doublefact", k_max=k_max)
    weighted: dict[tuple[int, int], int] = {}
    for (k, s, _m, alpha), v in table.entries.items():
        w = 1
        for i, a in enumerate(alpha, start=1):
            w *= math.factorial(i) ** a
        weighted[(k, s)] = weighted.get((k, s), 0) + w * v
    for kk in range(2, k_max + 1):  # kk = k + 1 in the statement
        k = kk - 1
        for s in range(1, kk):
            rhs = double_factorial_odd(2 * s - 1) * binomial(k + s, 2 * s)
            loc = f"k+1={kk} s={s}"
            report.expect_equal(loc, rhs, weighted.get((kk, s), 0))
    return report
