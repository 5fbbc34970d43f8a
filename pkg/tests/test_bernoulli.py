from fractions import Fraction

import pandas as pd
import pytest
import sympy

from pbernoulli.bernoulli import (
    PBTable,
    bernoulli,
    displayed_egf,
    egf_closed_form,
    geometric_integral_closed_form,
    geometric_integral_gf,
    iterated_antiderivative,
    iterated_integral,
    pbernoulli_egf_route,
    pbernoulli_explicit,
    pbernoulli_table,
    pbernoulli_value,
    pbernoulli_via_stirling1,
)
from pbernoulli.numerics import factorial
from pbernoulli.series import Polynomial


@pytest.mark.parametrize(
    "n, p, expected",
    [
        (0, 5, Fraction(1)),
        (1, 1, Fraction(-1, 3)),
        (2, 1, Fraction(0)),
        (2, 2, Fraction(-1, 20)),
        (3, 1, Fraction(1, 15)),
        (1, 0, Fraction(-1, 2)),
        (2, 0, Fraction(1, 6)),
        (4, 0, Fraction(-1, 30)),
        (12, 0, Fraction(-691, 2730)),
    ],
)
def test_known_values(n, p, expected):
    assert pbernoulli_explicit(n, p) == expected


def test_order_minus_one_is_alternating_sign():
    assert [pbernoulli_explicit(n, -1) for n in range(11)] == [(-1) ** n for n in range(11)]


def test_bernoulli_matches_sympy_away_from_n_one():
    assert bernoulli(1) == Fraction(-1, 2)
    for n in [0, *range(2, 41)]:
        expected = sympy.bernoulli(n)
        assert bernoulli(n) == Fraction(int(expected.p), int(expected.q))


def test_domain_errors():
    with pytest.raises(ValueError):
        pbernoulli_explicit(-1, 0)
    with pytest.raises(ValueError):
        pbernoulli_explicit(1, -2)
    with pytest.raises(ValueError):
        pbernoulli_via_stirling1(1, -1)
    with pytest.raises(ValueError):
        pbernoulli_value(1, -1, "recurrence")
    with pytest.raises(ValueError):
        pbernoulli_value(1, 1, "bogus")


def test_routes_agree_on_the_full_rectangle():
    table = pbernoulli_table(20, 8)
    for n, p, value in table.items():
        assert value == pbernoulli_explicit(n, p)
        assert pbernoulli_via_stirling1(n, p) == value


@pytest.mark.parametrize("method", ["explicit", "recurrence", "stirling1", "egf"])
def test_value_dispatch(method):
    assert pbernoulli_value(3, 1, method) == Fraction(1, 15)
    assert pbernoulli_value(0, 4, method) == 1


def test_egf_route_raises_order_when_needed():
    assert pbernoulli_egf_route(40, 2, order=8) == pbernoulli_explicit(40, 2)


class TestTable:
    def test_small_rectangle(self):
        table = pbernoulli_table(1, 1)
        assert table.cells == ((1, 1), (Fraction(-1, 2), Fraction(-1, 3)))

    def test_first_row_and_first_column(self):
        table = pbernoulli_table(12, 5)
        assert table.row(0) == (1,) * 6
        assert table.column(0) == tuple(bernoulli(n) for n in range(13))

    def test_recurrence_on_interior_cells(self):
        table = pbernoulli_table(10, 6)
        for n in range(10):
            for p in range(6):
                expected = p * table[n, p] - Fraction((p + 1) ** 2, p + 2) * table[n, p + 1]
                assert table[n + 1, p] == expected

    def test_get_outside(self):
        table = pbernoulli_table(2, 2)
        with pytest.raises(ValueError):
            table.get(3, 0)
        with pytest.raises(ValueError):
            table[0, -1]
        with pytest.raises(ValueError):
            pbernoulli_table(-1, 0)

    def test_with_cell_copies(self):
        table = pbernoulli_table(4, 3)
        corrupted = table.with_cell(3, 2, table[3, 2] + 1)
        assert corrupted[3, 2] == table[3, 2] + 1
        assert table[3, 2] == pbernoulli_explicit(3, 2)
        assert [cell for cell in corrupted.items() if cell not in set(table.items())] == [
            (3, 2, table[3, 2] + 1)
        ]

    def test_shape_is_checked(self):
        with pytest.raises(ValueError):
            PBTable(1, 1, ((Fraction(1), Fraction(1)),))

    def test_to_frame(self):
        frame = pbernoulli_table(1, 1).to_frame()
        expected = pd.DataFrame(
            {"n": [0, 0, 1, 1], "p": [0, 1, 0, 1], "value": ["1", "1", "-1/2", "-1/3"]}
        )
        pd.testing.assert_frame_equal(frame, expected)


class TestGeneratingFunction:
    def test_classical_expansion(self):
        series = egf_closed_form(0, 6)
        assert [series[n] for n in range(6)] == [
            1,
            Fraction(-1, 2),
            Fraction(1, 12),
            0,
            Fraction(-1, 720),
            0,
        ]

    @pytest.mark.parametrize("p", range(9))
    def test_coefficients_and_vanishing_principal_part(self, p):
        series = egf_closed_form(p, 32)
        assert series.val >= 0
        assert series.principal_part_vanishes
        for n in range(25):
            assert factorial(n) * series[n] == pbernoulli_explicit(n, p)

    def test_valid_through_the_requested_order(self):
        series = egf_closed_form(4, 10)
        assert series.order == 10
        assert factorial(9) * series[9] == pbernoulli_explicit(9, 4)

    def test_order_must_exceed_p_plus_two(self):
        with pytest.raises(ValueError):
            egf_closed_form(2, 4)
        with pytest.raises(ValueError):
            egf_closed_form(-1, 10)

    @pytest.mark.parametrize("p", [1, 2])
    def test_displayed_forms(self, p):
        assert displayed_egf(p, 20) == egf_closed_form(p, 20)

    def test_displayed_p1_against_sympy(self):
        t = sympy.Symbol("t")
        expr = 2 * ((t - 1) * sympy.exp(t) + 1) / (sympy.exp(t) - 1) ** 2
        expansion = sympy.series(expr, t, 0, 8).removeO()
        series = displayed_egf(1, 8)
        for n in range(8):
            c = sympy.Rational(expansion.coeff(t, n))
            assert series[n] == Fraction(int(c.p), int(c.q))

    def test_only_two_displayed_forms(self):
        with pytest.raises(ValueError):
            displayed_egf(3, 10)


class TestIntegrals:
    def test_iterated_antiderivative(self):
        P = Polynomial((1,))
        assert iterated_antiderivative(P, 0) == P
        assert iterated_antiderivative(P, 3) == Polynomial((0, 0, 0, Fraction(1, 6)))
        with pytest.raises(ValueError):
            iterated_antiderivative(P, -1)

    def test_integral_law(self):
        for p in range(6):
            for n in range(p + 1, 16):
                expected = (-1) ** p * pbernoulli_explicit(n, p) / factorial(p + 1)
                assert iterated_integral(n, p) == expected

    def test_p_zero_slice_is_bernoulli(self):
        assert [iterated_integral(n, 0) for n in range(1, 16)] == [
            bernoulli(n) for n in range(1, 16)
        ]

    def test_strict_range(self):
        with pytest.raises(ValueError):
            iterated_integral(2, 2)
        assert iterated_integral(0, 1, strict=False) == Fraction(-1, 2)

    @pytest.mark.parametrize("m", range(1, 6))
    @pytest.mark.parametrize("x0", [Fraction(-1), Fraction(1, 2), Fraction(0), Fraction(2)])
    def test_closed_form_of_antiderivatives(self, m, x0):
        assert geometric_integral_closed_form(m, x0, 16) == geometric_integral_gf(m, x0, 16)

    def test_printed_bracket_does_not_vanish_at_zero(self):
        assert geometric_integral_closed_form(2, 0, 12).is_zero()
        assert not geometric_integral_closed_form(2, 0, 12, bracket_sign=1).is_zero()

    def test_closed_form_arguments(self):
        with pytest.raises(ValueError):
            geometric_integral_closed_form(0, 1, 10)
        with pytest.raises(ValueError):
            geometric_integral_closed_form(2, 1, 10, bracket_sign=0)
