from fractions import Fraction

import pytest

from opow.expansion import expand
from opow.special_u import (
    EXP_Z,
    IDENTITY_Z,
    INVERSE_Z,
    SpecialTerm,
    URule,
    a_closed_form,
    a_table_by_recurrence,
    polynomial_u,
    specialize,
    verify_inverse_z_table,
    verify_specializations,
)

Q = Fraction


def terms(*quads):
    return tuple(SpecialTerm(Q(c), z, m, s) for c, z, m, s in quads)


def test_urule_validation():
    with pytest.raises(ValueError):
        URule("cosh")
    with pytest.raises(ValueError):
        polynomial_u([1, 0])  # zero leading coefficient
    with pytest.raises(ValueError):
        polynomial_u([])
    with pytest.raises(ValueError):
        URule("z", (Q(1),))


def test_specialize_identity_z():
    got = specialize(expand(3), IDENTITY_Z)
    assert got == terms((1, 1, 0, 1), (3, 2, 0, 2), (1, 3, 0, 3))


def test_specialize_exp_z():
    got = specialize(expand(2), EXP_Z)
    assert got == terms((1, 0, 2, 1), (1, 0, 2, 2))


def test_specialize_inverse_z():
    got = specialize(expand(3), INVERSE_Z)
    assert got == terms((3, -5, 0, 1), (-3, -4, 0, 2), (1, -3, 0, 3))


def test_specialize_polynomial():
    # u = 1 + z: A^2 = (u u') D + u^2 D^2 with u' = 1
    got = specialize(expand(2), polynomial_u([1, 1]))
    assert got == terms((1, 0, 0, 1), (1, 1, 0, 1), (1, 0, 0, 2), (2, 1, 0, 2), (1, 2, 0, 2))


def test_polynomial_route_matches_identity_z():
    z_rule = polynomial_u([0, 1])
    for k in range(1, 7):
        exp = expand(k)
        assert specialize(exp, z_rule) == specialize(exp, IDENTITY_Z)


def test_polynomial_rational_coefficients():
    # A^1 = u D, so the terms are u's own coefficients
    got = specialize(expand(1), polynomial_u([Q(1, 2), Q(3)]))
    assert got == (
        SpecialTerm(Q(1, 2), 0, 0, 1),
        SpecialTerm(Q(3), 1, 0, 1),
    )


def test_a_table_small_rows():
    table = a_table_by_recurrence(5)
    assert [table.value(2, s) for s in (1, 2)] == [-1, 1]
    assert [table.value(3, s) for s in (1, 2, 3)] == [3, -3, 1]
    assert [table.value(4, s) for s in (1, 2, 3, 4)] == [-15, 15, -6, 1]
    assert [table.value(5, s) for s in (1, 2, 3, 4, 5)] == [105, -105, 45, -10, 1]


def test_a_table_structure():
    table = a_table_by_recurrence(12)
    for k in range(1, 13):
        assert table.value(k, k) == 1
        for s in range(1, k + 1):
            v = table.value(k, s)
            assert v != 0
            assert (v > 0) == ((k - s) % 2 == 0), "sign must alternate with k-s"
    # one below the diagonal: minus the triangular numbers
    for k in range(2, 13):
        assert table.value(k, k - 1) == -(k - 1) * k // 2


def test_a_table_range_errors():
    table = a_table_by_recurrence(4)
    with pytest.raises(ValueError):
        table.value(5, 1)
    with pytest.raises(ValueError):
        table.value(3, 4)
    with pytest.raises(ValueError):
        a_table_by_recurrence(0)


def test_a_closed_form_matches_recurrence():
    table = a_table_by_recurrence(15)
    for k in range(1, 16):
        for s in range(1, k + 1):
            assert a_closed_form(k, s) == table.value(k, s)


def test_a_closed_form_examples_and_errors():
    assert a_closed_form(3, 1) == 3
    assert a_closed_form(3, 2) == -3
    assert all(a_closed_form(k, k) == 1 for k in range(1, 12))
    with pytest.raises(ValueError):
        a_closed_form(3, 0)
    with pytest.raises(ValueError):
        a_closed_form(3, 4)


def test_verify_inverse_z_table():
    report = verify_inverse_z_table(10)
    assert report.ok, report.render_lines()
    # two comparisons per (k, s) pair
    assert report.checks == 2 * sum(range(1, 11))


def test_verify_specializations():
    report = verify_specializations(8)
    assert report.ok, report.render_lines()
